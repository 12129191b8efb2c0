#include "knotforge/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace knotforge {

namespace {

long long mod_inverse(long long a, long long m) {
  long long t = 0, newt = 1, r = m, newr = a % m;
  if (newr < 0) newr += m;
  while (newr != 0) {
    long long qq = r / newr;
    t -= qq * newt;
    std::swap(t, newt);
    r -= qq * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::runtime_error("not invertible");
  return ((t % m) + m) % m;
}

// value of [a_1..a_k] as a (num, den) pair; den may be 0 (infinity)
std::pair<long long, long long> cf_value(const std::vector<int>& a) {
  long long n = a[0], d = 1;
  for (size_t i = 1; i < a.size(); ++i) {
    long long n2 = (long long)a[i] * n + d;
    d = n;
    n = n2;
  }
  return {n, d};
}

}  // namespace

Fraction canonical_fraction(long long num, long long den) {
  if (num < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) throw std::runtime_error("fraction 0 is not a knot");
  long long g = std::gcd(num, den < 0 ? -den : den);
  if (g == 0) g = num;
  num /= g;
  den /= g;
  if (num == 1) return {1, 0};
  long long q = ((den % num) + num) % num;
  if (q == 0) throw std::runtime_error("non-coprime fraction");
  long long best = q;
  for (long long cand : {q, mod_inverse(q, num), num - q,
                         mod_inverse(num - q, num)})
    best = std::min(best, cand);
  return {num, best};
}

Fraction fraction_of(const ConwayNode& ast) {
  std::vector<int> a;
  if (ast.kind == NodeKind::Integer) {
    a.push_back(ast.value);
  } else if (ast.kind == NodeKind::Sequence) {
    for (auto& c : ast.children) {
      if (c.kind != NodeKind::Integer)
        throw std::runtime_error("not a rational symbol");
      a.push_back(c.value);
    }
  } else {
    throw std::runtime_error("not a rational symbol");
  }
  auto [n, d] = cf_value(a);
  if (n == 0 && d == 0) throw std::runtime_error("indeterminate fraction");
  if (n == 0) throw std::runtime_error("fraction 0: closure is a 2-component unlink");
  return canonical_fraction(n, d);
}

bool is_rational_symbol(const ConwayNode& ast) {
  if (ast.kind == NodeKind::Integer) return true;
  if (ast.kind != NodeKind::Sequence) return false;
  for (auto& c : ast.children)
    if (c.kind != NodeKind::Integer) return false;
  return true;
}

bool is_knot(const Fraction& f) { return f.p % 2 == 1; }
bool is_unknot(const Fraction& f) { return f.p == 1; }

std::vector<std::vector<int>> minimal_expansions(const Fraction& f) {
  if (is_unknot(f)) return {{1}};
  for (int total = 1; total <= 14; ++total) {
    std::vector<std::vector<int>> found;
    // compositions of `total` into parts >= 1
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
      if (rest == 0) {
        auto [n, d] = cf_value(parts);
        if (n != 0) {
          Fraction g = canonical_fraction(n, d);
          if (g == f) found.push_back(parts);
        }
        return;
      }
      for (int a = 1; a <= rest; ++a) {
        parts.push_back(a);
        self(self, rest - a);
        parts.pop_back();
      }
    };
    rec(rec, total);
    if (!found.empty()) return found;
  }
  throw std::runtime_error("no expansion found (fraction too large)");
}

int bj_unknotting(const Fraction& f) {
  static std::map<Fraction, int> memo;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;

  // build the crossing-change closure reachable from f
  std::map<Fraction, std::set<Fraction>> succ;
  std::vector<Fraction> queue{f};
  std::set<Fraction> seen{f};
  while (!queue.empty()) {
    Fraction cur = queue.back();
    queue.pop_back();
    if (is_unknot(cur)) continue;
    auto& outs = succ[cur];
    for (auto& exp : minimal_expansions(cur)) {
      for (size_t j = 0; j < exp.size(); ++j) {
        std::vector<int> mod = exp;
        mod[j] -= 2;
        auto [n, d] = cf_value(mod);
        if (n == 0) continue;  // cannot happen for knots (odd determinant)
        Fraction nxt = canonical_fraction(n, d);
        outs.insert(nxt);
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
  }
  // shortest path to the unknot (the graph may contain cycles)
  std::map<Fraction, int> dist;
  const int INF = 1 << 28;
  for (auto& g : seen) dist[g] = is_unknot(g) ? 0 : INF;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [g, outs] : succ) {
      int best = INF;
      for (auto& h : outs) best = std::min(best, dist[h]);
      if (best + 1 < dist[g]) {
        dist[g] = best + 1;
        changed = true;
      }
    }
  }
  for (auto& [g, v] : dist)
    if (v < INF) memo[g] = v;
  if (dist[f] >= INF) throw std::runtime_error("BJ recursion did not reach the unknot");
  return dist[f];
}

bool is_twist_knot(const ConwayNode& ast) {
  if (!is_rational_symbol(ast)) return false;
  Fraction f = fraction_of(ast);
  if (f.p < 3 || f.p % 2 == 0) return false;
  for (long long cand : {f.q, mod_inverse(f.q, f.p), f.p - f.q,
                         mod_inverse(f.p - f.q, f.p)})
    if (cand == 2) return true;
  return false;
}

}  // namespace knotforge
