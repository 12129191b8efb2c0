#include "knotforge/bracket.hpp"

#include <numeric>
#include <vector>

namespace knotforge {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

LaurentA kauffman_bracket(const Diagram& d) {
  int n = d.n();
  if (n > 20) throw DiagramError("bracket state sum too large");
  // delta^k = (-A^2 - A^-2)^k, cached
  std::vector<LaurentA> delta_pow(n + d.loops + 1);
  delta_pow[0].c[0] = 1;
  for (int k = 1; k < (int)delta_pow.size(); ++k)
    for (auto& [e, v] : delta_pow[k - 1].c) {
      delta_pow[k].c[e + 2] -= v;
      delta_pow[k].c[e - 2] -= v;
    }

  LaurentA out;
  for (unsigned state = 0; state < (1u << n); ++state) {
    Dsu dsu(4 * n);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      // A-smoothing merges the two quadrants swept when the over strand
      // rotates CCW onto the under strand: its arcs hug the other pair, so
      // over axis 0 draws arcs (SW,SE),(NE,NW); over axis 1 arcs (NW,SW),(SE,NE)
      bool a_side = !(state >> c & 1);
      if (a_side) ++a_count;
      int base = d.over[c] ? 0 : 1;
      if (!a_side) base ^= 1;
      dsu.unite(4 * c + base, 4 * c + (base + 1) % 4);
      dsu.unite(4 * c + (base + 2) % 4, 4 * c + (base + 3) % 4);
    }
    for (int p = 0; p < 4 * n; ++p) dsu.unite(p, d.pair[p]);
    int loops = d.loops;
    for (int p = 0; p < 4 * n; ++p)
      if (dsu.find(p) == p) ++loops;
    int exp = a_count - (n - a_count);
    for (auto& [e, v] : delta_pow[loops - 1].c) {
      long long& slot = out.c[e + exp];
      slot += v;
      if (slot == 0) out.c.erase(e + exp);
    }
  }
  return out;
}

LaurentA bracket_invariant(const Diagram& d) {
  LaurentA b = kauffman_bracket(d);
  int w = d.n() ? orient(d).writhe() : 0;
  LaurentA out;
  // multiply by (-A)^{-3w}
  long long sign = (3 * w) % 2 ? -1 : 1;
  for (auto& [e, v] : b.c) out.c[e - 3 * w] = sign * v;
  return out;
}

LaurentA mirror_poly(const LaurentA& p) {
  LaurentA out;
  for (auto& [e, v] : p.c) out.c[-e] = v;
  return out;
}

}  // namespace knotforge
