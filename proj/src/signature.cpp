#include "knotforge/signature.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "knotforge/conventions.hpp"

namespace knotforge {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct FormInfo {
  int pos = 0, neg = 0, zero = 0;
  Int det = 1;
};

// Congruence diagonalization of a symmetric rational matrix; exact.
FormInfo diagonalize(std::vector<std::vector<Rat>> m) {
  int n = (int)m.size();
  FormInfo out;
  Rat det = 1;
  for (int i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      int swap_j = -1, add_j = -1;
      for (int j = i + 1; j < n; ++j) {
        if (m[j][j] != 0 && swap_j < 0) swap_j = j;
        if (m[i][j] != 0 && add_j < 0) add_j = j;
      }
      if (swap_j >= 0 && m[i][swap_j] == 0) {
        // plain symmetric swap keeps things simple when rows don't interact
        std::swap(m[i], m[swap_j]);
        for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][swap_j]);
      } else if (add_j >= 0) {
        int j = add_j;
        for (int k = 0; k < n; ++k) m[i][k] += m[j][k];
        for (int k = 0; k < n; ++k) m[k][i] += m[k][j];
      } else {
        ++out.zero;
        continue;
      }
    }
    if (m[i][i] == 0) {
      // after the fix-up the pivot must be usable unless the row was zero
      --i;
      continue;
    }
    Rat piv = m[i][i];
    (piv > 0 ? out.pos : out.neg)++;
    det *= piv;
    for (int r = i + 1; r < n; ++r) {
      if (m[r][i] == 0) continue;
      Rat f = m[r][i] / piv;
      for (int k = 0; k < n; ++k) m[r][k] -= f * m[i][k];
      for (int k = 0; k < n; ++k) m[k][r] -= f * m[k][i];
    }
  }
  if (out.zero > 0) {
    out.det = 0;
  } else {
    // det is an integer for integer input matrices
    out.det = numerator(det) / denominator(det);
  }
  return out;
}

struct Goeritz {
  std::vector<std::vector<Rat>> reduced;  // white Goeritz matrix, row 0 removed
  int mu = 0;                             // Gordon-Litherland correction
};

Goeritz goeritz_matrix(const OrientedDiagram& od, bool with_mu) {
  const Diagram& d = od.d;
  Faces f = trace_faces(d);
  Checkerboard cb = checkerboard(d, f);
  std::vector<int> white_index(f.count, -1);
  int nw = 0;
  for (int face = 0; face < f.count; ++face)
    if (cb.color[face] == cb.white) white_index[face] = nw++;
  if (nw < 1) throw DiagramError("no white region");

  std::vector<std::vector<int>> g(nw, std::vector<int>(nw, 0));
  int mu = 0;
  for (int c = 0; c < d.n(); ++c) {
    // white quadrant pair: after slots a and a+2
    int a = cb.color[f.quad(c, 0)] == cb.white ? 0 : 1;
    int eta = (a == d.over[c] ? 1 : -1) * conventions().eta_flip;
    int u = white_index[f.quad(c, a)];
    int v = white_index[f.quad(c, a + 2)];
    g[u][v] -= eta;
    g[v][u] -= eta;
    g[u][u] += eta;
    g[v][v] += eta;
    if (with_mu) {
      // quadrant between the two outgoing half-strands
      int oe = od.over_exit(c), ue = od.under_exit(c);
      int between = (ue == (oe + 1) % 4) ? oe : ue;
      bool q_white = cb.color[f.quad(c, between)] == cb.white;
      if (q_white == conventions().type2_white_side) mu += eta;
    }
  }
  Goeritz out;
  out.mu = mu;
  out.reduced.assign(nw - 1, std::vector<Rat>(nw - 1, 0));
  for (int i = 1; i < nw; ++i)
    for (int j = 1; j < nw; ++j) out.reduced[i - 1][j - 1] = g[i][j];
  return out;
}

}  // namespace

int traczyk_signature(const OrientedDiagram& od) {
  if (!is_alternating(od.d))
    throw DiagramError("signature formula needs an alternating diagram");
  if (!is_reduced(od.d))
    throw DiagramError("signature formula needs a reduced diagram");
  Faces f = trace_faces(od.d);
  Checkerboard cb = checkerboard(od.d, f);
  int w = od.writhe();
  int num = -w + (cb.W - cb.B);
  if (num % 2 != 0) throw DiagramError("odd signature on a knot diagram");
  return num / 2;
}

int matrix_oracle_signature(const OrientedDiagram& od) {
  Goeritz g = goeritz_matrix(od, true);
  FormInfo info = diagonalize(g.reduced);
  if (info.zero != 0) throw DiagramError("degenerate Goeritz form");
  return info.pos - info.neg - g.mu;
}

long long goeritz_determinant(const Diagram& d) {
  OrientedDiagram od = orient(d);
  Goeritz g = goeritz_matrix(od, false);
  FormInfo info = diagonalize(g.reduced);
  Int a = info.det < 0 ? Int(-info.det) : info.det;
  return a.convert_to<long long>();
}

int murasugi_lower_bound(int sigma) { return (sigma < 0 ? -sigma : sigma) / 2; }

}  // namespace knotforge
