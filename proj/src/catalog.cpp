#include "knotforge/catalog.hpp"

namespace knotforge {

// Row shorthand: {name, conway, sic, u_lo, u_hi, a_d, a_lo, a_hi, a_open}.
// u_lo == u_hi when the unknotting number is settled; a_open marks ascending
// intervals conditioned on an unsettled unknotting number.

const std::vector<KnotRecord>& knots_to_8() {
  static const std::vector<KnotRecord> t = {
      {"3_1", "3", "", 1, 1, 1, 1, 1, false},
      {"4_1", "2 2", "", 1, 1, 1, 1, 1, false},
      {"5_1", "5", "", 2, 2, 2, 2, 2, false},
      {"5_2", "3 2", "", 1, 1, 2, 1, 1, false},
      {"6_1", "4 2", "", 1, 1, 2, 1, 1, false},
      {"6_2", "3 1 2", "", 1, 1, 2, 2, 2, false},
      {"6_3", "2 1 1 2", "", 1, 1, 2, 2, 2, false},
      {"7_1", "7", "", 3, 3, 3, 3, 3, false},
      {"7_2", "5 2", "", 1, 1, 3, 1, 1, false},
      {"7_3", "4 3", "", 2, 2, 3, 2, 2, false},
      {"7_4", "3 1 3", "", 2, 2, 3, 2, 2, false},
      {"7_5", "3 2 2", "", 2, 2, 3, 2, 2, false},
      {"7_6", "2 2 1 2", "", 1, 1, 2, 2, 2, false},
      {"7_7", "2 1 1 1 2", "", 1, 1, 2, 2, 2, false},
      {"8_1", "6 2", "", 1, 1, 3, 1, 1, false},
      {"8_2", "5 1 2", "", 2, 2, 3, 2, 3, false},
      {"8_3", "4 4", "", 2, 2, 3, 2, 2, false},
      {"8_4", "4 1 3", "", 2, 2, 3, 2, 2, false},
      {"8_5", "3,3,2", "", 2, 2, 3, 2, 3, false},
      {"8_6", "3 3 2", "", 2, 2, 3, 2, 2, false},
      {"8_7", "4 1 1 2", "", 1, 1, 3, 2, 3, false},
      {"8_8", "2 3 1 2", "", 2, 2, 3, 2, 2, false},
      {"8_9", "3 1 1 3", "", 1, 1, 3, 2, 3, false},
      {"8_10", "2 1,3,2", "", 2, 2, 3, 2, 3, false},
      {"8_11", "3 2 1 2", "", 1, 1, 3, 2, 2, false},
      {"8_12", "2 2 2 2", "", 2, 2, 2, 2, 2, false},
      {"8_13", "3 1 1 1 2", "", 1, 1, 3, 2, 2, false},
      {"8_14", "2 2 1 1 2", "", 1, 1, 3, 2, 2, false},
      {"8_15", "2 1,2 1,2", "", 2, 2, 3, 2, 2, false},
      {"8_16", ".2.2 0", "", 2, 2, 3, 2, 2, false},
      {"8_17", ".2.2", "", 1, 1, 3, 2, 2, false},
      {"8_18", "8*", "", 2, 2, 2, 2, 2, false},
      {"8_19", "3,3,-2", "", 3, 3, 3, 3, 3, false},
      {"8_20", "3,2 1,-2", "", 1, 1, 2, 2, 2, false},
      {"8_21", "2 1,2 1,-2", "2 1,2 1-2", 1, 1, 2, 2, 2, false},
  };
  return t;
}

const std::vector<KnotRecord>& knots_9() {
  static const std::vector<KnotRecord> t = {
      {"9_1", "9", "", 4, 4, 4, 4, 4, false},
      {"9_2", "7 2", "", 1, 1, 4, 1, 1, false},
      {"9_3", "6 3", "", 3, 3, 4, 3, 3, false},
      {"9_4", "5 4", "", 2, 2, 4, 2, 2, false},
      {"9_5", "5 1 3", "", 2, 2, 4, 2, 2, false},
      {"9_6", "5 2 2", "", 3, 3, 4, 3, 3, false},
      {"9_7", "3 4 2", "", 2, 2, 4, 2, 2, false},
      {"9_8", "2 4 1 2", "", 2, 2, 3, 2, 2, false},
      {"9_9", "4 2 3", "", 3, 3, 4, 3, 3, false},
      {"9_10", "3 3 3", "", 3, 3, 4, 3, 3, false},
      {"9_11", "4 1 2 2", "", 2, 2, 3, 2, 3, false},
      {"9_12", "4 2 1 2", "", 1, 1, 3, 2, 2, false},
      {"9_13", "3 2 1 3", "", 3, 3, 4, 3, 3, false},
      {"9_14", "4 1 1 1 2", "", 1, 1, 3, 2, 2, false},
      {"9_15", "2 3 2 2", "", 2, 2, 3, 2, 2, false},
      {"9_16", "3,3,2+", "", 3, 3, 4, 3, 3, false},
      {"9_17", "2 1 3 1 2", "", 2, 2, 3, 2, 3, false},
      {"9_18", "3 2 2 2", "", 2, 2, 4, 2, 2, false},
      {"9_19", "2 3 1 1 2", "", 1, 1, 3, 2, 2, false},
      {"9_20", "3 1 2 1 2", "", 2, 2, 3, 2, 3, false},
      {"9_21", "3 1 1 2 2", "", 1, 1, 3, 2, 2, false},
      {"9_22", "2 1 1,3,2", "", 1, 1, 3, 2, 3, false},
      {"9_23", "2 2 1 2 2", "", 2, 2, 4, 2, 2, false},
      {"9_24", "2 1,3,2+", "3,2 1,2", 1, 1, 3, 2, 3, false},
      {"9_25", "2 2,2 1,2", "", 2, 2, 3, 2, 2, false},
      {"9_26", "3 1 1 1 1 2", "", 1, 1, 3, 2, 3, false},
      {"9_27", "2 1 2 1 1 2", "", 1, 1, 3, 2, 3, false},
      {"9_28", "2 1,2 1,2+", "", 1, 1, 3, 2, 3, false},
      {"9_29", ".2.2 0.2", "", 2, 2, 4, 2, 3, false},
      {"9_30", "2 1 1,2 1,2", "", 1, 1, 3, 2, 3, false},
      {"9_31", "2 1 1 1 1 1 2", "", 2, 2, 3, 2, 3, false},
      {"9_32", ".2 1.2 0", "", 2, 2, 3, 2, 3, false},
      {"9_33", ".2 1.2", "", 1, 1, 3, 2, 3, false},
      {"9_34", "8*2 0", "", 1, 1, 3, 2, 2, false},
      {"9_35", "3,3,3", "", 3, 3, 4, 3, 3, false},
      {"9_36", "2 2,3,2", "", 2, 2, 3, 2, 3, false},
      {"9_37", "3,2 1,2 1", "", 2, 2, 3, 2, 2, false},
      {"9_38", ".2.2.2", "", 3, 3, 4, 3, 3, false},
      {"9_39", "2:2:2 0", "", 1, 1, 4, 2, 3, false},
      {"9_40", "9*", "", 2, 2, 4, 2, 4, false},
      {"9_41", "2 0:2 0:2 0", "", 2, 2, 3, 2, 3, false},
      {"9_42", "2 2,3,-2", "", 1, 1, 2, 2, 2, false},
      {"9_43", "2 1 1,3,-2", "", 2, 2, 3, 2, 3, false},
      {"9_44", "2 2,2 1,-2", "", 1, 1, 2, 2, 2, false},
      {"9_45", "2 1 1,2 1,-2", "", 1, 1, 2, 2, 2, false},
      {"9_46", "3,3,-3", "", 2, 2, 2, 2, 2, false},
      {"9_47", "8*-2 0", "", 2, 2, 2, 2, 2, false},
      {"9_48", "2 1,2 1,-3", "", 2, 2, 2, 2, 2, false},
      {"9_49", "-2 0:-2 0:-2 0", "", 3, 3, 3, 3, 3, false},
  };
  return t;
}

const std::vector<KnotRecord>& knots_10() {
  static const std::vector<KnotRecord> t = {
      {"10_1", "8 2", "", 1, 1, 4, 1, 1, false},
      {"10_2", "7 1 2", "", 3, 3, 4, 3, 4, false},
      {"10_3", "6 4", "", 2, 2, 4, 2, 2, false},
      {"10_4", "6 1 3", "", 2, 2, 4, 2, 2, false},
      {"10_5", "6 1 1 2", "", 2, 2, 4, 2, 4, false},
      {"10_6", "5 3 2", "", 3, 3, 4, 3, 3, false},
      {"10_7", "5 2 1 2", "", 1, 1, 4, 2, 2, false},
      {"10_8", "5 1 4", "", 2, 2, 3, 2, 3, false},
      {"10_9", "5 1 1 3", "", 2, 2, 3, 2, 3, false},
      {"10_10", "5 1 1 1 2", "", 1, 1, 4, 2, 2, false},
      {"10_11", "4 3 3", "", 2, 3, 4, 2, 3, true},
      {"10_12", "4 3 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_13", "4 2 2 2", "", 2, 2, 3, 2, 2, false},
      {"10_14", "4 2 1 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_15", "4 1 3 2", "", 2, 2, 4, 2, 3, false},
      {"10_16", "4 1 2 3", "", 2, 2, 4, 2, 3, false},
      {"10_17", "4 1 1 4", "", 1, 1, 4, 2, 4, false},
      {"10_18", "4 1 1 2 2", "", 1, 1, 4, 2, 2, false},
      {"10_19", "4 1 1 1 3", "", 2, 2, 4, 2, 3, false},
      {"10_20", "3 5 2", "", 2, 2, 4, 2, 2, false},
      {"10_21", "3 4 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_22", "3 3 1 3", "", 2, 2, 4, 2, 3, false},
      {"10_23", "3 3 1 1 2", "", 1, 1, 4, 2, 3, false},
      {"10_24", "3 2 3 2", "", 2, 2, 4, 2, 2, false},
      {"10_25", "3 2 2 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_26", "3 2 1 1 3", "", 1, 1, 4, 2, 3, false},
      {"10_27", "3 2 1 1 1 2", "", 1, 1, 4, 2, 3, false},
      {"10_28", "3 1 3 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_29", "3 1 2 2 2", "", 2, 2, 3, 2, 3, false},
      {"10_30", "3 1 2 1 1 2", "", 1, 1, 4, 2, 3, false},
      {"10_31", "3 1 1 3 2", "", 1, 1, 4, 2, 2, false},
      {"10_32", "3 1 1 1 2 2", "", 2, 2, 3, 2, 3, false},
      {"10_33", "3 1 1 1 1 3", "", 1, 1, 4, 2, 3, false},
      {"10_34", "2 5 1 2", "", 2, 2, 4, 2, 2, false},
      {"10_35", "2 4 2 2", "", 2, 2, 4, 2, 2, false},
      {"10_36", "2 4 1 1 2", "", 2, 2, 4, 2, 2, false},
      {"10_37", "2 3 3 2", "", 2, 2, 4, 2, 2, false},
      {"10_38", "2 3 1 2 2", "", 2, 2, 4, 2, 2, false},
      {"10_39", "2 2 3 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_40", "2 2 2 1 1 2", "", 2, 2, 4, 2, 3, false},
      {"10_41", "2 2 1 2 1 2", "", 2, 2, 3, 2, 3, false},
      {"10_42", "2 2 1 1 1 1 2", "", 1, 1, 3, 2, 3, false},
      {"10_43", "2 1 2 2 1 2", "", 2, 2, 3, 2, 3, false},
      {"10_44", "2 1 2 1 1 1 2", "", 1, 1, 3, 2, 3, false},
      {"10_45", "2 1 1 1 1 1 1 2", "", 2, 2, 3, 2, 3, false},
      {"10_46", "5,3,2", "", 3, 3, 4, 3, 4, false},
      {"10_47", "5,2 1,2", "", 2, 3, 4, 2, 4, true},
      {"10_48", "4 1,3,2", "", 3, 3, 4, 2, 4, false},
      {"10_49", "4 1,2 1,2", "", 3, 3, 4, 3, 3, false},
      {"10_50", "3 2,3,2", "", 2, 2, 4, 2, 4, false},
      {"10_51", "3 2,2 1,2", "", 2, 3, 4, 2, 4, true},
      {"10_52", "3 1 1,3,2", "", 2, 2, 4, 2, 3, false},
      {"10_53", "3 1 1,2 1,2", "", 3, 3, 4, 3, 3, false},
      {"10_54", "2 3,3,2", "", 2, 3, 4, 2, 4, true},
      {"10_55", "2 3,2 1,2", "", 2, 2, 4, 2, 2, false},
      {"10_56", "2 2 1,3,2", "", 2, 2, 4, 2, 3, false},
      {"10_57", "2 2 1,2 1,2", "", 2, 2, 4, 2, 3, false},
      {"10_58", "2 2,2 2,2", "", 2, 2, 3, 2, 3, false},
      {"10_59", "2 2,2 1 1,2", "", 1, 1, 3, 2, 3, false},
      {"10_60", "2 1 1,2 1 1,2", "", 1, 1, 3, 2, 3, false},
      {"10_61", "4,3,3", "", 2, 3, 4, 2, 4, true},
      {"10_62", "4,3,2 1", "", 2, 2, 4, 2, 4, false},
      {"10_63", "4,2 1,2 1", "4,2 12 1", 2, 2, 4, 2, 3, false},
      {"10_64", "3 1,3,3", "", 2, 2, 4, 2, 4, false},
      {"10_65", "3 1,3,2 1", "", 2, 2, 4, 2, 4, false},
      {"10_66", "3 1,2 1,2 1", "", 3, 3, 4, 3, 4, false},
      {"10_67", "2 2,3,2 1", "", 2, 2, 4, 2, 4, false},
      {"10_68", "2 1 1,3,3", "", 2, 2, 4, 2, 4, false},
      {"10_69", "2 1 1,2 1,2 1", "", 2, 2, 3, 2, 3, false},
      {"10_70", "2 2,3,2+", "", 2, 2, 3, 2, 3, false},
      {"10_71", "2 2,2 1,2+", "", 1, 1, 3, 2, 3, false},
      {"10_72", "2 1 1,3,2+", "", 2, 2, 4, 2, 4, false},
      {"10_73", "2 1 1,2 1,2+", "", 1, 1, 3, 2, 3, false},
      {"10_74", "3,3,2 1+", "", 2, 2, 4, 2, 4, false},
      {"10_75", "2 1,2 1,2 1+", "", 2, 2, 3, 2, 3, false},
      {"10_76", "3,3,2++", "", 2, 3, 4, 2, 3, true},
      {"10_77", "3,2 1,2++", "", 2, 3, 4, 2, 3, true},
      {"10_78", "2 1,2 1,2++", "", 2, 2, 3, 2, 3, false},
      {"10_79", "(3,2) (3,2)", "", 2, 3, 4, 2, 4, true},
      {"10_80", "(3,2) (2 1,2)", "", 3, 3, 4, 3, 3, false},
      {"10_81", "(2 1,2) (2 1,2)", "", 2, 2, 4, 2, 3, false},
      {"10_82", ".4.2", "", 1, 1, 4, 2, 3, false},
      {"10_83", ".3 1.2", "", 2, 2, 4, 2, 4, false},
      {"10_84", ".2 2.2", "", 1, 1, 4, 2, 4, false},
      {"10_85", ".4.2 0", "", 2, 2, 4, 2, 3, false},
      {"10_86", ".3 1.2 0", "", 2, 2, 4, 2, 3, false},
      {"10_87", ".2 2.2 0", "", 2, 2, 4, 2, 4, false},
      {"10_88", ".2 1.2 1", "", 1, 1, 3, 2, 3, false},
      {"10_89", ".2 1.2 1 0", "2 1.2 1 0", 2, 2, 3, 2, 3, false},
      {"10_90", ".3.2.2", "", 2, 2, 4, 2, 4, false},
      {"10_91", ".3.2.2 0", "", 1, 1, 4, 2, 3, false},
      {"10_92", ".2 1.2.2 0", "", 2, 2, 4, 2, 4, false},
      {"10_93", ".3.2 0.2", "", 2, 2, 4, 2, 3, false},
      {"10_94", ".3 0.2.2", "", 2, 2, 4, 2, 3, false},
      {"10_95", ".2 1 0.2.2", "", 1, 1, 4, 2, 4, false},
      {"10_96", ".2.2 1.2", "", 2, 2, 4, 2, 4, false},
      {"10_97", ".2.2 1 0.2", "", 2, 2, 4, 2, 4, false},
      {"10_98", ".2.2.2.2 0", "", 2, 2, 4, 2, 4, false},
      {"10_99", ".2.2.2 0.2 0", "", 2, 2, 4, 2, 4, false},
      {"10_100", "3:2:2", "", 2, 3, 4, 2, 3, true},
      {"10_101", "2 1:2:2", "", 3, 3, 4, 3, 4, false},
      {"10_102", "3:2:2 0", "", 1, 1, 4, 2, 4, false},
      {"10_103", "3 0:2:2", "", 3, 3, 4, 3, 3, false},
      {"10_104", "3:2 0:2 0", "", 1, 1, 4, 2, 4, false},
      {"10_105", "2 1:2 0:2 0", "", 2, 2, 4, 2, 4, false},
      {"10_106", "3 0:2:2 0", "", 2, 2, 4, 2, 3, false},
      {"10_107", "2 1 0:2:2 0", "", 1, 1, 4, 2, 4, false},
      {"10_108", "3 0:2 0:2 0", "", 2, 2, 4, 2, 3, false},
      {"10_109", "2.2.2.2", "", 2, 2, 4, 2, 4, false},
      {"10_110", "2.2.2.2 0", "", 2, 2, 4, 2, 4, false},
      {"10_111", "2.2.2 0.2", "", 2, 2, 4, 2, 4, false},
      {"10_112", "8*3", "", 2, 2, 3, 2, 3, false},
      {"10_113", "8*2 1", "", 1, 1, 3, 2, 3, false},
      {"10_114", "8*3 0", "", 1, 1, 3, 2, 3, false},
      {"10_115", "8*2 0.2 0", "", 2, 2, 4, 2, 4, false},
      {"10_116", "8*2:2", "", 2, 2, 4, 2, 3, false},
      {"10_117", "8*2:2 0", "", 2, 2, 4, 2, 3, false},
      {"10_118", "8*2:.2", "", 1, 1, 4, 2, 4, false},
      {"10_119", "8*2:.2 0", "", 1, 1, 4, 2, 4, false},
      {"10_120", "8*2 0::2 0", "", 3, 3, 4, 3, 4, false},
      {"10_121", "9*2 0", "", 2, 2, 4, 2, 4, false},
      {"10_122", "9*.2 0", "", 2, 2, 3, 2, 3, false},
      {"10_123", "10*", "", 2, 2, 3, 2, 3, false},
      {"10_124", "5,3,-2", "", 4, 4, 4, 4, 4, false},
      {"10_125", "5,2 1,-2", "", 2, 2, 3, 2, 3, false},
      {"10_126", "4 1,3,-2", "", 2, 2, 3, 2, 3, false},
      {"10_127", "4 1,2 1,-2", "", 2, 2, 3, 2, 3, false},
      {"10_128", "3 2,3,-2", "", 3, 3, 3, 3, 3, false},
      {"10_129", "3 2,2 1,-2", "", 1, 1, 3, 2, 3, false},
      {"10_130", "3 1 1,3,-2", "", 1, 1, 3, 2, 3, false},
      {"10_131", "3 1 1,2 1,-2", "", 1, 1, 3, 2, 3, false},
      {"10_132", "2 3,3,-2", "", 1, 1, 3, 2, 2, false},
      {"10_133", "2 3,2 1,-2", "2 3,2 1-2", 1, 1, 3, 2, 2, false},
      {"10_134", "2 2 1,3,-2", "", 3, 3, 3, 3, 3, false},
      {"10_135", "2 2 1,2 1,-2", "", 2, 2, 3, 2, 2, false},
      {"10_136", "2 2,2 2,-2", "2 2,2 2-2", 1, 1, 2, 2, 2, false},
      {"10_137", "2 2,2 1 1,-2", "", 1, 1, 2, 2, 2, false},
      {"10_138", "2 1 1,2 1 1,-2", "", 2, 2, 3, 2, 3, false},
      {"10_139", "4,3,-2 1", "", 4, 4, 4, 4, 4, false},
      {"10_140", "4,3,-3", "", 2, 2, 3, 2, 3, false},
      {"10_141", "4,2 1,-3", "", 1, 1, 3, 2, 3, false},
      {"10_142", "3 1,3,-2 1", "", 3, 3, 4, 3, 3, false},
      {"10_143", "3 1,3,-3", "", 1, 1, 3, 2, 3, false},
      {"10_144", "3 1,2 1,-3", "", 2, 2, 3, 2, 3, false},
      {"10_145", "2 2,3,-2 1", "", 2, 2, 3, 2, 2, false},
      {"10_146", "2 2,2 1,-3", "", 1, 1, 2, 2, 2, false},
      {"10_147", "2 1 1,3,-3", "", 1, 1, 2, 2, 2, false},
      {"10_148", "(3,2) (3,-2)", "", 2, 2, 3, 2, 3, false},
      {"10_149", "(3,2) (2 1,-2)", "", 2, 2, 3, 2, 3, false},
      {"10_150", "(2 1,2) (3,-2)", "", 2, 2, 3, 2, 3, false},
      {"10_151", "(2 1,2) (2 1,-2)", "(2 1,2) (2,1,-2)", 2, 2, 3, 2, 3, false},
      {"10_152", "(3,2) -(3,2)", "", 4, 4, 4, 4, 4, false},
      {"10_153", "(3,2) -(2 1,2)", "", 2, 2, 4, 2, 4, false},
      {"10_154", "(2 1,2) -(2 1,2)", "", 3, 3, 4, 3, 4, false},
      {"10_155", "-3:2:2", "", 2, 2, 3, 2, 3, false},
      {"10_156", "-3:2:2 0", "", 1, 1, 3, 2, 3, false},
      {"10_157", "-3:2 0:2 0", "", 2, 2, 3, 2, 3, false},
      {"10_158", "-3 0:2:2", "", 2, 2, 3, 2, 3, false},
      {"10_159", "-3 0:2:2 0", "", 1, 1, 2, 2, 2, false},
      {"10_160", "-3 0:2 0:2 0", "", 2, 2, 2, 2, 2, false},
      {"10_161", "3:-2 0:-2 0", "", 3, 3, 3, 3, 3, false},
      {"10_162", "-3 0:-2 0:-2 0", "", 2, 2, 3, 2, 3, false},
      {"10_163", "8*-3 0", "", 2, 2, 2, 2, 2, false},
      {"10_164", "8*2:-2 0", "", 1, 1, 3, 2, 3, false},
      {"10_165", "8*2:.-2 0", "", 2, 2, 3, 2, 3, false},
  };
  return t;
}

std::vector<const KnotRecord*> all_knots() {
  std::vector<const KnotRecord*> out;
  for (auto* tbl : {&knots_to_8(), &knots_9(), &knots_10()})
    for (const auto& r : *tbl) out.push_back(&r);
  return out;
}

const KnotRecord* find_knot(const std::string& name) {
  for (auto* tbl : {&knots_to_8(), &knots_9(), &knots_10()})
    for (const auto& r : *tbl)
      if (r.name == name) return &r;
  return nullptr;
}

// {name, generating, family, family_sic, constant, coeffs, u, condition}
const std::vector<FamilyRecord>& signature_families() {
  static const std::vector<FamilyRecord> t = {
      {"3_1", "3", "(2p1+1)", "", 0, {2}, "p1", ""},
      {"4_1", "2 2", "(2p1) (2p2)", "", 0, {0, 0}, "", ""},
      {"5_2", "3 2", "(2p1+1) (2p2)", "", 0, {0, 2}, "p2", ""},
      {"6_2", "3 1 2", "(2p1+1) 1 (2p2)", "", 0, {2, 0}, "p1", "p1>=p2"},
      {"6_3", "2 1 1 2", "(2p1) 1 1 (2p2)", "", 0, {2, -2}, "|p1-p2|",
       "p1!=p2"},
      {"7_4", "3 1 3", "(2p1+1) 1 (2p2+1)", "", 2, {0, 0}, "", ""},
      {"7_5", "3 2 2", "(2p1+1) (2p2) (2p3)", "", 0, {2, 0, 2}, "p1+p3", ""},
      {"7_6", "2 2 1 2", "(2p1) (2p2) 1 (2p3)", "", 0, {0, 0, 2}, "p3",
       "p2<=p3"},
      {"7_7", "2 1 1 1 2", "(2p1) 1 1 1 (2p2)", "", 0, {0, 0}, "", ""},
      {"8_5", "3,3,2", "(2p1+1),(2p2+1),(2p3)", "", 0, {2, 2, 0}, "p1+p2",
       "p1>=p3 or p2>=p3"},
      {"8_6", "3 3 2", "(2p1+1) (2p2+1) (2p3)", "", 0, {2, 0, 0}, "", ""},
      {"8_8", "2 3 1 2", "(2p1) (2p2+1) 1 (2p3)", "", 0, {2, 0, -2}, "p3-p1",
       "p3-p1>p2"},
      {"8_9", "3 1 1 3", "(2p1+1) 1 1 (2p2+1)", "", 0, {2, -2}, "|p1-p2|",
       "p1!=p2"},
      {"8_10", "3,2 1,2", "(2p1+1),(2p2) 1,(2p3)", "", 0, {2, -2, 2},
       "p1-p2+p3", "p3>p2"},
      {"8_11", "3 2 1 2", "(2p1+1) (2p2) 1 (2p3)", "(2p1+1) 2p2) 1 (2p3)", 0,
       {0, 2, 0}, "p2", "p2>=p3"},
      {"8_12", "2 2 2 2", "(2p1) (2p2) (2p3) (2p4)", "", 0, {0, 0, 0, 0}, "",
       ""},
      {"8_13", "3 1 1 1 2", "(2p1+1) 1 1 1 (2p2)", "", -2, {0, 2}, "p2-1",
       "p2-1>p1"},
      {"8_14", "2 2 1 1 2", "(2p1) (2p2) 1 1 (2p3)", "", 0, {2, 0, 0}, "p1",
       "p2<=p3"},
      {"8_15", "2 1,2 1,2", "(2p1) 1,(2p2) 1,(2p3)", "", 0, {2, 2, 0},
       "p1+p2", ""},
      {"8_16", ".2.2 0", ".(2p1).(2p2) 0", "", -2, {2, 2}, "p1+p2-1", ""},
      {"8_17", ".2.2", ".(2p1).(2p2)", "", 0, {2, -2}, "|p1-p2|",
       "p1=1,p2>1 or p2=1,p1>1"},

      {"9_10", "3 3 3", "(2p1+1) (2p2+1) (2p3+1)", "", 2, {0, 2, 0}, "", ""},
      {"9_13", "3 2 1 3", "(2p1+1) (2p2) 1 (2p3+1)",
       "(2p1) (2p2) 1 (2p3+1)", 2, {2, 0, 0}, "", ""},
      {"9_15", "2 3 2 2", "(2p1) (2p2+1) (2p3) (2p4)", "", 0, {2, 0, 0, 0},
       "", ""},
      {"9_16", "3,3,2+", "(2p1+1),(2p2+1),(2p3)+", "", 0, {2, 2, 2},
       "p1+p2+p3", ""},
      {"9_17", "2 1 3 1 2", "(2p1) 1 (2p2+1) 1 (2p3)", "", 0, {0, -2, 0},
       "p2", "p1+p3<=p2"},
      {"9_18", "3 2 2 2", "(2p1+1) (2p2) (2p3) (2p4)", "", 0, {0, 2, 0, 2},
       "p2+p4", ""},
      {"9_19", "2 3 1 1 2", "(2p1) (2p2+1) 1 1 (2p3)", "", 0, {0, 0, 0}, "",
       ""},
      {"9_20", "3 1 2 1 2", "(2p1+1) 1 (2p2) 1 (2p3)", "", 0, {2, 0, 2},
       "p1+p3", "p1+p3>=p2"},
      {"9_21", "3 1 1 2 2", "(2p1+1) 1 1 (2p2) (2p3)", "", 2, {0, 0, 0}, "",
       ""},
      {"9_22", "2 1 1,3,2", "(2p1) 1 1,(2p2+1),(2p3)", "", 0, {0, -2, 0},
       "p2", "p1+p3-1<=p2"},
      {"9_23", "2 2 1 2 2", "(2p1) (2p2) 1 (2p3) (2p4)", "", 0, {2, 0, 0, 2},
       "p1+p4", ""},
      {"9_24", "2 1,3,2+", "(2p1) 1,(2p2+1),(2p3)+", "", 0, {2, -2, 0}, "",
       ""},
      {"9_25", "2 2,2 1,2", "(2p1) (2p2),(2p3) 1,(2p4)", "", 0,
       {0, 0, -2, 0}, "", ""},
      {"9_26", "3 1 1 1 1 2", "(2p1+1) 1 1 1 1 (2p2)", "", 0, {2, 0}, "p1",
       ""},
      {"9_27", "2 1 2 1 1 2", "(2p1) 1 (2p2) 1 1 (2p3)", "", 0, {0, -2, 2},
       "p3-p2", "p2<p3"},
      {"9_28", "2 1,2 1,2+", "(2p1) 1,(2p2) 1,(2p3)+", "", 0, {2, 2, -2},
       "p1+p2-p3", "p3<=p1 or p3<=p2"},
      {"9_29", ".2.2 0.2", ".(2p1).(2p2) 0.(2p3)", "", 0, {0, -2, 0}, "", ""},
      {"9_30", "2 1 1,2 1,2", "(2p1) 1 1,(2p2) 1,(2p3)", "", 0, {0, 2, -2},
       "p3-p2", "p1+p2<=p3"},
      {"9_31", "2 1 1 1 1 1 2", "(2p1) 1 1 1 1 1 (2p2)", "", -2, {2, -2},
       "p1+p2-1", "p1+p2>2"},
      {"9_32", ".2 1.2 0", ".(2p1) 1.(2p2) 0", "", 0, {0, 2}, "", ""},
      {"9_33", ".2 1.2", ".(2p1) 1.(2p2)", "", 2, {0, -2}, "p2-1",
       "p2-p1>=2"},
      {"9_34", "8*2 0", "8*(2p1) 0", "8^8(2p1) 0", 0, {0}, "", ""},
      {"9_35", "3,3,3", "(2p1+1),(2p2+1),(2p3+1)", "", 2, {0, 0, 0}, "", ""},
      {"9_36", "2 2,3,2", "(2p1) (2p2),(2p3+1),(2p4)",
       "(2p1) (2p2),(2p3) 1,(2p4)", 0, {0, 0, 2, 2}, "p3+p4", "p2<=p4"},
      {"9_37", "2 1,2 1,3", "(2p1) 1,(2p2) 1,(2p3+1)", "", 0, {0, 0, 0}, "",
       ""},
      {"9_38", ".2.2.2", ".(2p1).(2p2).(2p3)", "", 2, {0, 2, 0}, "", ""},
      {"9_39", "2:2:2 0", "(2p1):(2p2):(2p3) 0", "", 2, {0, 0, 0}, "", ""},
      {"9_41", "2 0:2 0:2 0", "(2p1) 0:(2p2) 0:(2p3) 0", "", 0, {0, 0, 0},
       "", ""},

      {"10_22", "3 3 1 3", "(2p1+1) (2p2+1) 1 (2p3+1)",
       "(2p1+1) (2p2+1) 1 (2p1+1)", 0, {2, 0, -2}, "p3-p1", "p3-p1>p2"},
      {"10_23", "3 3 1 1 2", "(2p1+1) (2p2+1) 1 1 (2p3)",
       "(2p1+1) (2p2+1) 1 1,(2p3)", 2, {0, 2, -2}, "p2-p3+1", "p3<=p2"},
      {"10_24", "3 2 3 2", "(2p1+1) (2p2) (2p3+1) (2p4)", "", 0,
       {0, 2, 0, 0}, "", ""},
      {"10_25", "3 2 2 1 2", "(2p1+1) (2p2) (2p3) 1 (2p4)", "", 0,
       {2, 0, 2, 0}, "p1+p3", "p4<=p3"},
      {"10_26", "3 2 1 1 3", "(2p1+1) (2p2) 1 1 (2p3+1)", "", 0, {0, 2, -2},
       "|p2-p3|", "p3-p2>p1 or p2>p3"},
      {"10_27", "3 2 1 1 1 2", "(2p1+1) (2p2) 1 1 1 (2p3)", "", 2,
       {2, 0, -2}, "|p1-p3+1|", "p3<=p1, p2=2 or p3-p1>p2+1"},
      {"10_28", "3 1 3 1 2", "(2p1+1) 1 (2p2+1) 1 (2p3)", "", 2, {0, 0, -2},
       "p3-1", "p1+p2+1<p3"},
      {"10_29", "3 1 2 2 2", "(2p1+1) 1 (2p2) (2p3) (2p4)", "", 0,
       {2, 0, 0, 0}, "", ""},
      {"10_30", "3 1 2 1 1 2", "(2p1+1) 1 (2p2) 1 1 (2p3)", "", 2, {0, 0, 0},
       "", ""},
      {"10_31", "3 1 1 3 2", "(2p1+1) 1 1 (2p2+1) (2p3)", "", 2, {0, 0, -2},
       "", ""},
      {"10_32", "3 1 1 1 2 2", "(2p1+1) 1 1 1 (2p2) (2p3)", "", 0,
       {2, 0, -2}, "|p1-p3|", "p1>p2+p3 or p2=2, p3>p1"},
      {"10_33", "3 1 1 1 1 3", "(2p1+1) 1 1 1 1 (2p2+1)", "", 0, {0, 0}, "",
       ""},
      {"10_37", "2 3 3 2", "(2p1) (2p2+1) (2p3+1) (2p4)", "", 0,
       {2, 0, 0, -2}, "", ""},
      {"10_38", "2 3 1 2 2", "(2p1) (2p2+1) 1 (2p3) (2p4)", "", 0,
       {0, 0, 0, -2}, "", ""},
      {"10_39", "2 2 3 1 2", "(2p1) (2p2) (2p3+1) 1 (2p4)", "", 0,
       {2, 0, 2, 0}, "p1+p3", "p1+p2+p3<=p4"},
      {"10_40", "2 2 2 1 1 2", "(2p1) (2p2) (2p3) 1 1 (2p4)", "", 0,
       {2, 0, 2, -2}, "|p1+p3-p4|", "p4<p3 or p4>p1+p2+p3"},
      {"10_41", "2 2 1 2 1 2", "(2p1) (2p2) 1 (2p3) 1 (2p4)", "", 0,
       {0, 0, 2, 0}, "p3", "p2+p4<=p3"},
      {"10_42", "2 2 1 1 1 1 2", "(2p1) (2p2) 1 1 1 1 (2p3)", "", 2,
       {0, 0, -2}, "", ""},
      {"10_43", "2 1 2 2 1 2", "(2p1) 1 (2p2) (2p3) 1 (2p4)", "", 0,
       {2, 0, 0, -2}, "", ""},
      {"10_44", "2 1 2 1 1 1 2", "(2p1) 1 (2p2) 1 1 1 (2p3)", "", 0,
       {2, 0, 0}, "p1", "p2+p3<=p1+1"},
      {"10_45", "2 1 1 1 1 1 1 2", "(2p1) 1 1 1 1 1 1 (2p2)", "", 0, {0, 0},
       "", ""},
      {"10_50", "3 2,3,2", "(2p1+1) (2p2),(2p3+1),(2p4)", "", 0,
       {0, 2, 2, 0}, "p2+p3", "p4<=p2"},
      {"10_51", "3 2,2 1,2", "(2p1+1) (2p2),(2p3) 1,(2p4)", "", 0,
       {0, 2, -2, 2}, "", ""},
      {"10_52", "3 1 1,3,2", "(2p1+1) 1 1,(2p2+1),(2p3)", "", 2, {0, -2, -2},
       "p2+p3-1", "p3-p1>=2"},
      {"10_53", "3 1 1,2 1,2", "(2p1+1) 1 1,(2p2) 1,(2p3)", "", 2, {0, 2, 0},
       "", ""},
      {"10_54", "2 3,3,2", "(2p1) (2p2+1),(2p3+1),(2p4)", "", 0,
       {2, 0, -2, -2}, "p3+p4-p1", "p4>p1+p2"},
      {"10_55", "2 3,2 1,2", "(2p1) (2p2+1),(2p3) 1,(2p4)", "", 0,
       {2, 0, 2, 0}, "p1+p3", ""},
      {"10_56", "2 2 1,3,2", "(2p1) (2p2) 1,(2p3+1),(2p4)", "", 0,
       {2, 0, 2, 0}, "p1+p3", "p4<=p1+p2"},
      {"10_57", "2 2 1,2 1,2", "(2p1) (2p2) 1,(2p3) 1,(2p4)", "", 0,
       {2, 0, -2, 2}, "p1+p4-p3", "p3<p4"},
      {"10_58", "2 1 1,2 1 1,2", "(2p1) 1 1,(2p2) 1 1,(2p3)",
       "row repeats the 10_60 family", 0, {0, 0, 0}, "", ""},
      {"10_59", "2 2,2 1 1,2", "(2p1) (2p2),(2p3) 1 1,(2p4)", "", 0,
       {0, 0, 0, 2}, "p4", "p2+p3-1<=p4"},
      {"10_60", "2 1 1,2 1 1,2", "(2p1) 1 1,(2p2) 1 1,(2p3)", "", 0,
       {0, 0, 0}, "", ""},
      {"10_64", "3 1,3,3", "(2p1+1) 1,(2p2+1),(2p3+1)", "", 0, {2, -2, -2},
       "p2+p3-p1", "max(p2,p3)>p1"},

      {"10_65", "3 1,3,2 1", "(2p1+1) 1,(2p2+1),(2p3) 1", "", 2, {0, 2, -2},
       "", ""},
      {"10_66", "3 1,2 1,2 1", "(2p1+1) 1,(2p2) 1,(2p3) 1", "", 0, {2, 2, 2},
       "p1+p2+p3", ""},
      {"10_68", "2 1 1,3,3", "(2p1) 1 1,(2p2+1),(2p3+1)", "", -2, {2, 0, 0},
       "", ""},
      {"10_67", "2 2,3,2 1", "(2p1) (2p2),(2p3+1),(2p4) 1", "", 0,
       {2, 0, 0, 0}, "", ""},
      {"10_69", "2 1 1,2 1,2 1", "(2p1) 1 1,(2p2) 1,(2p3) 1", "", 0,
       {2, 0, 0}, "", ""},
      {"10_70", "2 2,3,2+", "(2p1) (2p2),(2p3+1),(2p4)+", "", 0,
       {0, 0, 2, 0}, "", ""},
      {"10_71", "2 2,2 1,2+", "(2p1) (2p2),(2p3) 1,(2p4)+", "", 0,
       {0, 0, -2, 2}, "", ""},
      {"10_72", "2 1 1,3,2+", "(2p1) 1 1,(2p2+1),(2p3)+", "", 0, {0, -2, -2},
       "p2+p3", "p1-1<=p2+p3"},
      {"10_73", "2 1 1,2 1,2+", "(2p1) 1 1,(2p2) 1,(2p3)+", "", 0, {0, 2, 0},
       "p2", "p3=1"},
      {"10_74", "3,3,2 1+", "(2p1+1),(2p2+1),(2p3) 1+", "", 2, {0, 0, 0}, "",
       ""},
      {"10_75", "2 1,2 1,2 1+", "(2p1) 1,(2p2) 1,(2p3) 1+", "", 0, {0, 0, 0},
       "", ""},
      {"10_76", "3,3,2+2", "(2p1+1),(2p2+1),(2p3)+(2p4)", "", 0,
       {2, 2, 0, 0}, "", ""},
      {"10_77", "3,2 1,2+2", "(2p1+1),(2p2) 1,(2p3)+(2p4)", "", 0,
       {2, -2, 2, 0}, "", ""},
      {"10_78", "2 1,2 1,2+2", "(2p1) 1,(2p2) 1,(2p3)+(2p4)", "", 0,
       {2, 2, 0, 0}, "p1+p2", "p4<=p1+p2"},
      {"10_79", "(3,2) (3,2)", "((2p1+1),(2p2)) ((2p3+1),(2p4))", "", 0,
       {2, 2, -2, -2}, "", ""},
      {"10_80", "(3,2) (2 1,2)", "((2p1+1),(2p2)) ((2p3) 1,(2p4))", "", 0,
       {2, 2, 2, 0}, "p1+p2+p3", ""},
      {"10_81", "(2 1,2) (2 1,2)", "((2p1) 1,(2p2)) ((2p3) 1,(2p4))", "", 0,
       {2, 0, -2, 0}, "", ""},
      {"10_83", ".3 1.2", ".(2p1+1) 1.(2p2)", "", 2, {0, -2}, "p2-1",
       "p2>p1+1"},
      {"10_84", ".2 2.2", ".(2p1) (2p2).(2p3)", "", 0, {2, 0, 2}, "p1+p3",
       "p2=1 or p3>=2"},
      {"10_86", ".3 1.2 0", ".(2p1+1) 1.(2p2) 0", "", 0, {0, 2}, "", ""},
      {"10_87", ".2 2.2 0", ".(2p1) (2p2).(2p3) 0", "", 0, {2, 0, -2}, "",
       ""},
      {"10_88", ".2 1.2 1", ".(2p1) 1.(2p2) 1", "", 0, {0, 0}, "", ""},
      {"10_89", ".2 1.2 1 0", ".(2p1) 1.(2p2) 1 0", "", 2, {0, 0}, "", ""},
      {"10_90", ".3.2.2", ".(2p1+1).(2p2).(2p3)", "", 0, {0, 2, -2}, "p3-p2",
       "p3>p1+p2"},
      {"10_91", ".3.2.2 0", ".(2p1+1).(2p2).(2p3) 0", "", 2, {2, -2, -2},
       "p2+p3-p1-1", "p1<=p3, p2>1"},
      {"10_92", ".2 1.2.2 0", ".(2p1) 1.(2p2).(2p3) 0", "", 0, {2, 2, 0},
       "p1+p2", "p3-1<=p1"},
      {"10_93", ".3.2 0.2", ".(2p1+1).(2p2) 0.(2p3)", "", 0, {0, -2, -2},
       "p2+p3", "p1<p2 or p3>p1+1"},
      {"10_94", ".3 0.2.2", ".(2p1+1) 0.(2p2).(2p3)", "", 0, {2, 2, -2},
       "p1+p2-p3", "p1-p3>=1 or p2-p3>=1"},
      {"10_95", ".2 1 0.2.2", ".(2p1) 1 0.(2p2).(2p3)",
       "(2p1) 1 0.(2p2).(2p3)", -2, {2, -2, 0}, "p2-p1+1", "p1=p3=1"},
      {"10_96", ".2.2 1.2", ".(2p1).(2p2) 1.(2p3)", "", 0, {0, 0, 0}, "",
       ""},
      {"10_97", ".2.2 1 0.2", ".(2p1).(2p2) 1 0.(2p3)", "", 2, {0, 0, 0}, "",
       ""},
      {"10_98", ".2.2.2.2 0", ".(2p1).(2p2).(2p3).(2p4) 0", "", 0,
       {2, 0, 2, 0}, "p1+p3", "p4<=p1 or p4<=p3"},
      {"10_99", ".2.2.2 0.2 0", ".(2p1).(2p2).(2p3) 0.(2p4) 0", "", 0,
       {2, -2, -2, 2}, "", ""},
      {"10_100", "3:2:2", "(2p1+1):(2p2):(2p3)", "", -2, {2, 2, 2},
       "p1+p2+p3-1", "p2>1 or p3>1"},
      {"10_101", "2 1:2:2", "(2p1) 1:(2p2):(2p3)", "", 2, {2, 0, 0}, "", ""},
      {"10_102", "3:2:2 0", "(2p1+1):(2p2):(2p3) 0",
       "(2p1+1):(2p2):(2p-3) 0", 0, {0, -2, 2}, "p2-p3", "p3=1,p2-p1>1"},
      {"10_103", "3 0:2:2", "(2p1+1) 0:(2p2):(2p3)", "", -2, {0, 2, 2}, "",
       ""},
      {"10_104", "3:2 0:2 0", "(2p1+1):(2p2) 0:(2p3) 0", "", 2, {2, -2, -2},
       "p1-p2-p3+1", "p1>p2, p3=1 or p1>p3, p2=1"},

      {"10_105", "2 1:2 0:2 0", "(2p1) 1:(2p2) 0:(2p3) 0", "", 0, {2, 0, 0},
       "p1", "p1>p2+p3"},
      {"10_106", "3 0:2:2 0", "(2p1+1) 0:(2p2):(2p3) 0", "", 0, {2, -2, 2},
       "p1+p3-p2", "p2+1<=p1"},
      {"10_107", "2 1 0:2:2 0", "(2p1) 1 0:(2p2):(2p3) 0", "", -2, {2, 0, 0},
       "", ""},
      {"10_108", "3 0:2 0:2 0", "(2p1+1) 0:(2p2) 0:(2p3) 0", "", 2,
       {0, -2, -2}, "p2+p3-1", "p2>p1+2 or p3>p1+2"},
      {"10_109", "2.2.2.2", "(2p1).(2p2).(2p3).(2p4)", "", 0, {2, -2, 2, -2},
       "p1+p3-p2-p4", "p1>=p2+p4"},
      {"10_110", "2.2.2.2 0", "(2p1).(2p2).(2p3).(2p4) 0", "", 0,
       {0, 0, 0, -2}, "p4", "p4>=p1+p3"},
      {"10_111", "2.2.2 0.2", "(2p1).(2p2).(2p3) 0.(2p4)", "", 0,
       {0, 2, 2, 0}, "p2+p3", "p2+p3>=p4>=p1"},
      {"10_112", "8*3", "8*(2p1+1)", "", 0, {2}, "p1", "p1>=2"},
      {"10_113", "8*2 1", "8*(2p1) 1", "", 0, {2}, "p1", "p1>=2"},
      {"10_114", "8*3 0", "8*(2p1+1) 0", "", 0, {0}, "", ""},
      {"10_115", "8*2 0.2 0", "8*(2p1) 0.(2p2) 0", "", 0, {0, 0}, "", ""},
      {"10_116", "8*2:2", "8*(2p1):(2p2)", "", -2, {2, 2}, "p1+p2-1",
       "p1>=2 or p2>=2"},
      {"10_117", "8*2:2 0", "8*(2p1):(2p2) 0", "", 0, {0, 2}, "", ""},
      {"10_118", "8*2:.2", "8*(2p1):.(2p2)", "8*(2p1):.(2p2) 0", 0, {2, -2},
       "|p1-p2|", "p1>=2,p2=1 p2>=2,p1=1 or |p1-p2|>=2"},
      {"10_119", "8*2:.2 0", "8*(2p1):.(2p2) 0", "", 2, {0, -2}, "p2-1",
       "p2-p1>=2"},
      {"10_120", "8*2 0::2 0", "8*(2p1) 0::(2p2) 0", "", 4, {0, 0}, "", ""},
      {"10_121", "9*2 0", "9*(2p1) 0", "9^8(2p1) 0", 2, {0}, "", ""},
      {"10_122", "9*.2 0", "9*.(2p1) 0", "", 0, {0}, "", ""},
  };
  return t;
}

const FamilyRecord* find_family(const std::string& name) {
  for (const auto& r : signature_families())
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace knotforge
