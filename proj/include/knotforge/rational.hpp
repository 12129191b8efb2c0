#pragma once

#include <vector>

#include "knotforge/conway.hpp"

namespace knotforge {

// Canonical 2-bridge fraction p/q: p >= 1, 0 <= q < p, gcd = 1, and q minimal
// over the Schubert moves {q, q^-1 mod p} and the mirror {p-q, (p-q)^-1}.
// Quotienting by the mirror is deliberate: unknotting-style invariants are
// mirror-invariant. The unknot is 1/0.
struct Fraction {
  long long p = 1;
  long long q = 0;
  bool operator==(const Fraction& o) const { return p == o.p && q == o.q; }
  bool operator<(const Fraction& o) const {
    return p != o.p ? p < o.p : q < o.q;
  }
};

Fraction canonical_fraction(long long num, long long den);

// Continued-fraction value of an all-integer sequence (left fold:
// v = a_1; v <- a_i + 1/v). Entries may be zero or negative.
Fraction fraction_of(const ConwayNode& seq);

bool is_rational_symbol(const ConwayNode& ast);  // Integer or all-int Sequence
bool is_knot(const Fraction& f);    // p odd
bool is_unknot(const Fraction& f);  // p == 1

// All positive continued-fraction expansions of minimal total crossing count
// whose value is Schubert-equivalent to f.
std::vector<std::vector<int>> minimal_expansions(const Fraction& f);

// Bernhard-Jablan unknotting number over minimal rational diagrams.
int bj_unknotting(const Fraction& f);

// Twist knots are the rational knots whose fraction class contains q = 2
// (family "p 2", including the trefoil).
bool is_twist_knot(const ConwayNode& ast);

}  // namespace knotforge
