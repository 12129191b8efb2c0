#pragma once

#include <string>
#include <vector>

namespace knotforge {

// One tabulated knot: unknotting number (interval when unsettled), the
// minimal-diagram ascending number, and the ascending-number interval.
// open == true marks intervals that depend on an unsettled unknotting number.
struct KnotRecord {
  std::string name;        // e.g. "8_16"
  std::string conway;      // corrected symbol (always parses)
  std::string sic;         // verbatim source form when it differs, else empty
  int u_lo = 0, u_hi = 0;  // unknotting number (lo == hi when known)
  int a_d = 0;             // ascending number over minimal diagrams
  int a_lo = 0, a_hi = 0;  // ascending number interval
  bool a_open = false;
};

const std::vector<KnotRecord>& knots_to_8();  // 35 rows, n <= 8
const std::vector<KnotRecord>& knots_9();     // 49 rows, n = 9
const std::vector<KnotRecord>& knots_10();    // 165 rows, n = 10
std::vector<const KnotRecord*> all_knots();
const KnotRecord* find_knot(const std::string& name);

// One signature-formula family: sigma(p) = constant + sum coeff_i * p_i over
// the parameterized slots of the generating symbol, valid as printed up to an
// overall sign per family. u_formula/condition are carried as source text.
struct FamilyRecord {
  std::string name;        // generating knot, e.g. "8_16"
  std::string generating;  // its Conway symbol (corrected)
  std::string family;      // family column text (corrected)
  std::string family_sic;  // verbatim when it differs, else empty
  int constant = 0;
  std::vector<int> coeffs;  // per parameter p_i, in slot order
  std::string u_formula;    // text, may be empty
  std::string condition;    // text, may be empty
};

const std::vector<FamilyRecord>& signature_families();
const FamilyRecord* find_family(const std::string& name);

}  // namespace knotforge
