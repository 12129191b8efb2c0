#include "knotforge/search.hpp"

#include <functional>

#include "knotforge/ascending.hpp"
#include "knotforge/bracket.hpp"
#include "knotforge/build.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/signature.hpp"

namespace knotforge {

namespace {

std::vector<std::string> sequences(int n) {
  std::vector<std::string> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      std::string s;
      for (size_t i = 0; i < cur.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(cur[i]);
      }
      out.push_back(std::move(s));
      return;
    }
    for (int k = 1; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<std::string> ramifications(int n);

const std::vector<std::string>& symbols(int n) {
  static std::vector<std::vector<std::string>> memo;
  if ((int)memo.size() <= n) memo.resize(n + 1);
  if (!memo[n].empty() || n == 0) return memo[n];
  std::vector<std::string> out = sequences(n);
  for (auto& r : ramifications(n)) out.push_back(std::move(r));
  // products (ram) tail
  for (int a = 2; a < n - 1; ++a)
    for (auto& l : ramifications(a))
      for (auto& r : symbols(n - a)) {
        bool bare_ram = r.find(',') != std::string::npos && r[0] != '(';
        out.push_back("(" + l + ") " + (bare_ram ? "(" + r + ")" : r));
      }
  memo[n] = std::move(out);
  return memo[n];
}

std::vector<std::string> ramifications(int n) {
  std::vector<std::string> out;
  std::function<void(int, int, std::string)> rec = [&](int left, int parts,
                                                       std::string acc) {
    if (left == 0) {
      if (parts >= 2) out.push_back(std::move(acc));
      return;
    }
    int cap = (parts == 0) ? left - 1 : left;  // at least two parts
    for (int k = 1; k <= cap; ++k)
      for (auto& t : symbols(k)) {
        bool bare_ram = t.find(',') != std::string::npos && t[0] != '(';
        std::string piece = bare_ram ? "(" + t + ")" : t;
        rec(left - k, parts + 1,
            acc.empty() ? piece : acc + "," + piece);
      }
  };
  rec(n, 0, "");
  return out;
}

}  // namespace

const std::vector<std::string>& algebraic_symbols(int n) { return symbols(n); }

MinimalSearchResult minimal_diagram_ascending(const std::string& conway) {
  Diagram d0 = build_diagram(conway);
  MinimalSearchResult res;
  res.a_d = diagram_ascending_number(d0).a_d;
  res.witness = conway;
  res.candidates = 1;
  if (!is_alternating(d0)) return res;

  long long det0 = goeritz_determinant(d0);
  LaurentA key = bracket_invariant(d0);
  LaurentA key_m = mirror_poly(key);
  for (const std::string& s : algebraic_symbols(d0.n())) {
    Diagram d = build_diagram(s);
    if (component_count(d) != 1 || !is_reduced(d) || !is_alternating(d))
      continue;
    if (goeritz_determinant(d) != det0) continue;
    LaurentA k = bracket_invariant(d);
    if (!(k == key) && !(k == key_m)) continue;
    ++res.candidates;
    int a = diagram_ascending_number(d).a_d;
    if (a < res.a_d) {
      res.a_d = a;
      res.witness = s;
    }
  }
  return res;
}

}  // namespace knotforge
