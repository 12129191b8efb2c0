#include "knotforge/families.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "knotforge/build.hpp"
#include "knotforge/signature.hpp"
#include "knotforge/ascending.hpp"

namespace knotforge {

namespace {

void collect_slots(ConwayNode& n, std::vector<ConwayNode*>& out) {
  if (n.kind == NodeKind::Integer) {
    out.push_back(&n);
    return;
  }
  for (auto& c : n.children) collect_slots(c, out);
}

}  // namespace

FamilySpec family_of(const ConwayNode& generating) {
  FamilySpec spec;
  spec.generating = generating;
  std::vector<ConwayNode*> slots;
  collect_slots(spec.generating, slots);
  for (auto* s : slots)
    if (std::abs(s->value) >= 2) spec.slots.push_back(s->slot_id);
  return spec;
}

FamilySpec family_of(const std::string& symbol) {
  return family_of(parse_conway(symbol));
}

ConwayNode expand_family(const FamilySpec& spec, const std::vector<int>& t) {
  if (t.size() != spec.slots.size())
    throw FormulaError("parameter count mismatch");
  ConwayNode out = spec.generating;
  std::vector<ConwayNode*> slots;
  collect_slots(out, slots);
  std::map<int, ConwayNode*> by_id;
  for (auto* s : slots) by_id[s->slot_id] = s;
  for (size_t i = 0; i < spec.slots.size(); ++i) {
    if (t[i] < 0) throw FormulaError("negative parameter");
    ConwayNode* s = by_id.at(spec.slots[i]);
    s->value += (s->value < 0 ? -2 : 2) * t[i];
  }
  return out;
}

int SignatureFormula::eval(const std::vector<int>& t) const {
  int v = constant;
  for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * t[i];
  return v;
}

SignatureFormula derive_signature_formula(const FamilySpec& spec) {
  Diagram d = build_diagram(spec.generating);
  OrientedDiagram od = orient(d);
  SignatureFormula f;
  f.constant = traczyk_signature(od);  // throws unless reduced alternating

  auto regions = twist_regions(od);
  // region index per crossing
  std::vector<int> region_of(d.n(), -1);
  for (size_t r = 0; r < regions.size(); ++r)
    for (int c : regions[r].crossings) region_of[c] = (int)r;

  for (int sid : spec.slots) {
    int reg = -2;
    int count = 0;
    for (int c = 0; c < d.n(); ++c) {
      if (d.tag[c] != sid) continue;
      ++count;
      if (reg == -2)
        reg = region_of[c];
      else if (reg != region_of[c])
        reg = -1;
    }
    if (count == 0) throw FormulaError("parameterized slot missing");
    if (reg < 0) throw FormulaError("slot split across twist regions");
    // maximal-twist requirement: the region is exactly this slot
    if ((int)regions[reg].crossings.size() != count)
      throw FormulaError("slot twist not maximal");
    f.coeffs.push_back(regions[reg].parallel ? -2 * regions[reg].sign : 0);
  }
  return f;
}

StepReport twist_step_report(const FamilySpec& spec, int slot_index,
                             const std::vector<int>& t) {
  auto snap = [&](const std::vector<int>& tt) {
    Diagram d = build_diagram(expand_family(spec, tt));
    OrientedDiagram od = orient(d);
    Faces fc = trace_faces(d);
    Checkerboard cb = checkerboard(d, fc);
    return std::array<int, 4>{traczyk_signature(od), od.writhe(), cb.W, cb.B};
  };
  auto a = snap(t);
  std::vector<int> t2 = t;
  t2[slot_index] += 1;
  auto b = snap(t2);

  // classify the region at t
  Diagram d = build_diagram(expand_family(spec, t));
  OrientedDiagram od = orient(d);
  auto regions = twist_regions(od);
  StepReport r;
  int sid = spec.slots[slot_index];
  for (auto& reg : regions)
    for (int c : reg.crossings)
      if (d.tag[c] == sid) {
        r.parallel = reg.parallel;
        r.sign = reg.sign;
      }
  r.dsigma = b[0] - a[0];
  r.dw = b[1] - a[1];
  r.dW = b[2] - a[2];
  r.dB = b[3] - a[3];
  return r;
}

namespace {

std::string rep(int k, const char* unit) {
  std::string s;
  for (int i = 0; i < k; ++i) {
    if (i) s += ',';
    s += unit;
  }
  return s;
}

std::string num(int v) { return std::to_string(v); }

}  // namespace

const std::vector<FamilyTheorem>& family_theorems() {
  static std::vector<FamilyTheorem> T = []() {
    std::vector<FamilyTheorem> v;
    auto dom1 = [](const std::vector<int>& p) { return p[0] >= 1; };
    auto dom2 = [](const std::vector<int>& p) {
      return p[0] >= 1 && p[1] >= 1;
    };

    v.push_back({"odd-torus", 1, dom1,
                 [](const std::vector<int>& p) { return num(2 * p[0] + 1); },
                 [](const std::vector<int>& p) { return num(2 * p[0] + 1); },
                 [](const std::vector<int>& p) { return p[0]; }});

    v.push_back({"even-3", 1,
                 [](const std::vector<int>& p) { return p[0] >= 2; },
                 [](const std::vector<int>& p) { return num(2 * p[0]) + " 3"; },
                 [](const std::vector<int>& p) {
                   return "((((1,(-1,(((" + rep(2 * p[0] - 2, "1") +
                          "),-1),-1))),1),-1),-1,-1)";
                 },
                 [](const std::vector<int>& p) { return p[0]; }});

    v.push_back({"odd-2-even", 2, dom2,
                 [](const std::vector<int>& p) {
                   return num(2 * p[0] + 1) + " 2 " + num(2 * p[1]);
                 },
                 [](const std::vector<int>& p) {
                   return num(2 * p[0] + 1) + ",-2 1," + num(2 * p[1]);
                 },
                 [](const std::vector<int>& p) { return p[0] + p[1]; }});

    v.push_back({"even1-even1-2", 2, dom2,
                 [](const std::vector<int>& p) {
                   return num(2 * p[0]) + " 1," + num(2 * p[1]) + " 1,2";
                 },
                 [](const std::vector<int>& p) {
                   return num(2 * p[0]) + " 1," + num(2 * p[1]) + " 1,-2,1";
                 },
                 [](const std::vector<int>& p) { return p[0] + p[1]; }});

    v.push_back({"5-even", 1,
                 [](const std::vector<int>& p) { return p[0] >= 2; },
                 [](const std::vector<int>& p) { return "5 " + num(2 * p[0]); },
                 [](const std::vector<int>& p) {
                   return "((1,(-1,(((((1,(1,(-1,-1))),1),-1),-1),-1)))," +
                          rep(2 * p[0] - 2, "1") + ")";
                 },
                 [](const std::vector<int>& p) { return p[0]; }});

    v.push_back({"odd-4-even", 2, dom2,
                 [](const std::vector<int>& p) {
                   return num(2 * p[0] + 1) + " 4 " + num(2 * p[1]);
                 },
                 [](const std::vector<int>& p) {
                   return "(((-1,(1,((((-1,((" + rep(2 * p[0], "1") +
                          "),1)),-1),1),1))),-1)," + rep(2 * p[1], "-1") + ")";
                 },
                 [](const std::vector<int>& p) { return p[0] + p[1]; }});

    v.push_back({"3-3-even-plus", 1, dom1,
                 [](const std::vector<int>& p) {
                   return "3,3," + num(2 * p[0]) + "+";
                 },
                 [](const std::vector<int>& p) {
                   return "-(1,1) 1 1,-(1,1) 1 1,(" + rep(2 * p[0] + 1, "-1") +
                          ") 1";
                 },
                 [](const std::vector<int>& p) { return p[0] + 2; }});

    v.push_back({"3-2-2-even", 1, dom1,
                 [](const std::vector<int>& p) {
                   return "3 2 2 " + num(2 * p[0]);
                 },
                 [](const std::vector<int>& p) {
                   return "(((((1,(-1,(((-1,(1,1)),-1),-1))),1),-1),-1)," +
                          rep(2 * p[0], "-1") + ")";
                 },
                 [](const std::vector<int>& p) { return p[0] + 1; }});

    v.push_back({"even-2-1-2-even", 2, dom2,
                 [](const std::vector<int>& p) {
                   return num(2 * p[0]) + " 2 1 2 " + num(2 * p[1]);
                 },
                 [](const std::vector<int>& p) {
                   return "((((((((1,(1,(" + rep(2 * p[0], "1") +
                          "))),-1),-1),1),1),-1),-1)," + rep(2 * p[1], "-1") +
                          ")";
                 },
                 [](const std::vector<int>& p) { return p[0] + p[1]; }});

    v.push_back({"even3-even1-2", 2, dom2,
                 [](const std::vector<int>& p) {
                   return num(2 * p[0]) + " 3," + num(2 * p[1]) + " 1,2";
                 },
                 [](const std::vector<int>& p) {
                   return "(((-1,(-1,-(" + rep(2 * p[0], "1") +
                          "))),1),1),((((-(" + rep(2 * p[1], "1") +
                          "),1),-1),1),1),-(1,1),1";
                 },
                 [](const std::vector<int>& p) { return p[0] + p[1]; }});

    v.push_back({"(3,2)(even1,2)", 1, dom1,
                 [](const std::vector<int>& p) {
                   return "(3,2) (" + num(2 * p[0]) + " 1,2)";
                 },
                 [](const std::vector<int>& p) {
                   return "(((1,-(1,1)),1),-(1,1),1) (((((-(" +
                          rep(2 * p[0], "1") + "),1),-1),1),1),-(1,1),1)";
                 },
                 [](const std::vector<int>& p) { return p[0] + 2; }});

    return v;
  }();
  return T;
}

TheoremCheck family_theorem_check(const FamilyTheorem& th,
                                  const std::vector<int>& p) {
  if (!th.in_domain(p)) throw FormulaError("parameters out of domain");
  TheoremCheck r;
  r.id = th.id;
  r.p = p;
  r.formula_value = th.formula(p);
  r.template_a_d = diagram_ascending_number(build_diagram(th.tmpl(p))).a_d;
  int sigma = matrix_oracle_signature(orient(build_diagram(th.knot(p))));
  r.half_abs_sigma = std::abs(sigma) / 2;
  r.ok = r.template_a_d == r.formula_value &&
         r.half_abs_sigma == r.formula_value;
  return r;
}

}  // namespace knotforge
