#pragma once

#include <map>

#include "knotforge/diagram.hpp"

namespace knotforge {

// Laurent polynomial in the bracket variable A: exponent -> coefficient.
struct LaurentA {
  std::map<int, long long> c;
  bool operator==(const LaurentA& o) const { return c == o.c; }
};

LaurentA kauffman_bracket(const Diagram& d);

// Writhe-normalized bracket (-A)^{-3w} * <d>: invariant of the underlying
// knot, so it separates knots that share determinant and signature.
LaurentA bracket_invariant(const Diagram& d);

// The invariant of the mirror image: A -> 1/A.
LaurentA mirror_poly(const LaurentA& p);

}  // namespace knotforge
