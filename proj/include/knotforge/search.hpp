#pragma once

#include <string>
#include <vector>

namespace knotforge {

// All algebraic tangle symbols with exactly n crossings and all-positive
// entries: integer sequences, ramifications, and products of those.
const std::vector<std::string>& algebraic_symbols(int n);

// Minimum diagram ascending number over all minimal diagrams of the knot
// given by `conway`: its own diagram plus, for alternating knots, every
// same-size reduced alternating algebraic diagram with matching determinant
// and writhe-normalized bracket polynomial (either chirality).
struct MinimalSearchResult {
  int a_d = 0;
  std::string witness;  // symbol achieving the minimum
  int candidates = 0;   // diagrams whose invariants matched
};
MinimalSearchResult minimal_diagram_ascending(const std::string& conway);

}  // namespace knotforge
