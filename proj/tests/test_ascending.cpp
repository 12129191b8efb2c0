#include "doctest.h"
#include "knotforge/ascending.hpp"
#include "knotforge/build.hpp"

#include <algorithm>

using namespace knotforge;

namespace {

// Independent oracle: try every subset of crossing changes and test the
// descending property by direct traversal.
bool descending_after(const Diagram& d, int start_port, unsigned flips) {
  int n = d.n();
  std::vector<char> seen(n, 0);
  int p = start_port;
  for (int steps = 0; steps < 2 * n; ++steps) {
    int q = d.pair[p];
    int c = q / 4, s = q % 4;
    bool over = ((int)d.over[c] ^ (int)((flips >> c) & 1)) == (s & 1);
    if (!seen[c]) {
      if (!over) return false;
      seen[c] = 1;
    }
    p = q ^ 2;  // continue through the crossing
  }
  return true;
}

int brute_min_changes(const Diagram& d, int start_port) {
  int best = d.n();
  for (unsigned flips = 0; flips < (1u << d.n()); ++flips) {
    int k = __builtin_popcount(flips);
    if (k < best && descending_after(d, start_port, flips))
      best = k;
  }
  return best;
}

}  // namespace

TEST_CASE("change counts match the brute-force subset oracle") {
  for (const char* s : {"3", "2 2", "5", "3 2", "2 1 1 2", "2 2 1 2",
                        "2 1,2 1,-2", "3,2 1,-2"}) {
    Diagram d = build_diagram(s);
    REQUIRE(component_count(d) == 1);
    for (int p = 0; p < 4 * d.n(); ++p)
      CHECK_MESSAGE(descending_change_count(d, p) == brute_min_changes(d, p),
                    s, " port ", p);
  }
}

TEST_CASE("diagram ascending numbers of standard diagrams") {
  auto ad = [](const char* s) {
    return diagram_ascending_number(build_diagram(s)).a_d;
  };
  CHECK(ad("3") == 1);
  CHECK(ad("2 2") == 1);
  CHECK(ad("5") == 2);
  CHECK(ad("3 2") == 2);
  CHECK(ad("7") == 3);
  CHECK(ad("9") == 4);
  CHECK(ad("2 1 1 2") == 2);
  CHECK(ad("3,3,-2") == 3);   // 8_19
  CHECK(ad("3,2 1,-2") == 2); // 8_20
}

TEST_CASE("scan reports a consistent witness") {
  Diagram d = build_diagram("3 2");
  AscendingScan scan = diagram_ascending_number(d);
  REQUIRE((int)scan.per_start.size() == 4 * d.n());
  CHECK(scan.per_start[scan.witness_port] == scan.a_d);
  CHECK(*std::min_element(scan.per_start.begin(), scan.per_start.end()) ==
        scan.a_d);
}

TEST_CASE("ascending number is mirror invariant") {
  for (const char* s : {"3", "3 2", "2 2 1 2", "2 1,2 1,2", "3,2 1,-2"}) {
    Diagram d = build_diagram(s);
    CHECK_MESSAGE(diagram_ascending_number(mirror(d)).a_d ==
                      diagram_ascending_number(d).a_d,
                  s);
  }
}

TEST_CASE("bound combination") {
  // trefoil: twist knot, u = 1, c = 3
  AscendingBounds b = knot_ascending_bounds(3, 1, true, {1});
  CHECK(b.lower == 1);
  CHECK(b.upper == 1);

  // non-twist knot with u = 1 still has a >= 2
  b = knot_ascending_bounds(7, 1, false, {2});
  CHECK(b.lower == 2);
  CHECK(b.upper == 2);

  // upper bound floor((c-1)/2) applies without diagram witnesses
  b = knot_ascending_bounds(9, 2, false, {});
  CHECK(b.lower == 2);
  CHECK(b.upper == 4);

  // bridge number bound b-1 <= a
  b = knot_ascending_bounds(8, 1, false, {3}, 3);
  CHECK(b.lower == 2);
  CHECK(b.upper == 3);

  // diagram witness tightens the upper bound only downwards
  b = knot_ascending_bounds(10, 3, false, {4, 3});
  CHECK(b.lower == 3);
  CHECK(b.upper == 3);
}
