#pragma once

#include <functional>
#include <string>
#include <vector>

#include "knotforge/conway.hpp"
#include "knotforge/diagram.hpp"

namespace knotforge {

// A knot family: a generating Conway symbol in which some integer slots
// (|value| >= 2) grow by full twists, slot value a -> sgn(a)(|a| + 2t).
struct FamilySpec {
  ConwayNode generating;
  std::vector<int> slots;  // slot ids of the parameterized integer tangles
};

// Parameterize every integer slot with |value| >= 2, in traversal order.
FamilySpec family_of(const ConwayNode& generating);
FamilySpec family_of(const std::string& symbol);

// Substitute t (one entry per parameterized slot, t_i >= 0).
ConwayNode expand_family(const FamilySpec& spec, const std::vector<int>& t);

// sigma(t) = constant + sum coeff_i * t_i, t = 0 at the generating knot.
struct SignatureFormula {
  int constant = 0;
  std::vector<int> coeffs;  // one per spec slot
  int eval(const std::vector<int>& t) const;
};

struct FormulaError : DiagramError {
  using DiagramError::DiagramError;
};

// Derive the family signature formula from the generating diagram: a
// parameterized slot contributes -2c per twist (c = sign of its crossings)
// when its twist region is parallel, 0 when antiparallel; the constant is the
// combinatorial signature of the generating knot. Throws FormulaError if the
// generating diagram is not reduced alternating or a slot is not realized as
// one full twist region (maximal-twist requirement), DiagramError on links.
SignatureFormula derive_signature_formula(const FamilySpec& spec);

// One full-twist step on a single region: deltas of (sigma, w, W, B) when the
// slot value grows by 2. Used to check the step law behind the formula.
struct StepReport {
  int dsigma = 0, dw = 0, dW = 0, dB = 0;
  bool parallel = false;
  int sign = 0;  // crossing sign of the region
};
StepReport twist_step_report(const FamilySpec& spec, int slot_index,
                             const std::vector<int>& t);

// A family theorem: a parameterized knot plus an explicit (generally
// non-minimal) diagram template whose ascending number realizes the formula.
struct FamilyTheorem {
  std::string id;
  int params = 0;  // number of parameters (1 or 2)
  std::function<bool(const std::vector<int>&)> in_domain;     // p-values >= 1
  std::function<std::string(const std::vector<int>&)> knot;   // family symbol
  std::function<std::string(const std::vector<int>&)> tmpl;   // template symbol
  std::function<int(const std::vector<int>&)> formula;        // claimed a
};

const std::vector<FamilyTheorem>& family_theorems();

struct TheoremCheck {
  std::string id;
  std::vector<int> p;
  int formula_value = 0;
  int template_a_d = 0;
  int half_abs_sigma = 0;
  bool ok = false;
};

// Verify one parameter assignment of one theorem: the template diagram's
// ascending number equals the formula value and |sigma|/2 of the family knot.
TheoremCheck family_theorem_check(const FamilyTheorem& th,
                                  const std::vector<int>& p);

}  // namespace knotforge
