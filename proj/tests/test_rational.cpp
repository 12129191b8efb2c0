#include "doctest.h"
#include "knotforge/build.hpp"
#include "knotforge/rational.hpp"
#include "knotforge/signature.hpp"

#include <numeric>
#include <set>

using namespace knotforge;

TEST_CASE("canonical fractions quotient Schubert and mirror moves") {
  // 5/2: inverse 2*3=6=1 mod 5 -> {2,3}; mirror also {2,3}
  CHECK(canonical_fraction(5, 2) == canonical_fraction(5, 3));
  // 7/2 vs 7/4 (inverse), mirror 7/5, 7/3
  CHECK(canonical_fraction(7, 2) == canonical_fraction(7, 4));
  CHECK(canonical_fraction(7, 2) == canonical_fraction(7, 5));
  CHECK(canonical_fraction(7, 2) == canonical_fraction(7, 3));
  // negative numerator normalizes to the mirror class
  CHECK(canonical_fraction(-5, 2) == canonical_fraction(5, 2));
  // 9/2 and 9/4 are the same knot class: inverse(2) = 5, mirror gives {7,4}
  CHECK(canonical_fraction(9, 2) == canonical_fraction(9, 4));
  // distinct knots stay distinct: 13/2 class is {2,7,11,6}, excludes 3
  CHECK(!(canonical_fraction(13, 2) == canonical_fraction(13, 3)));
  CHECK(canonical_fraction(1, 0) == Fraction{1, 0});
  CHECK(canonical_fraction(1, 5) == Fraction{1, 0});  // integral tangle closure
}

TEST_CASE("fraction of a sequence is the continued fraction") {
  auto frac = [](const char* s) { return fraction_of(parse_conway(s)); };
  CHECK(frac("3") == canonical_fraction(3, 1));
  CHECK(frac("2 2") == canonical_fraction(5, 2));
  CHECK(frac("3 2") == canonical_fraction(7, 2));
  CHECK(frac("2 2 1 2") == canonical_fraction(19, 7));
  CHECK(frac("2 1 1 1 2") == canonical_fraction(21, 8));
  CHECK(frac("2 0") == canonical_fraction(1, 2));  // unknot closure
  CHECK(is_unknot(frac("2 0")));
  CHECK(is_knot(frac("3")));
  CHECK(!is_knot(frac("2 2 2")));  // even numerator: 2-component link
}

TEST_CASE("rational symbol recognition") {
  CHECK(is_rational_symbol(parse_conway("3")));
  CHECK(is_rational_symbol(parse_conway("2 2 1 2")));
  CHECK(!is_rational_symbol(parse_conway("2 1,2 1,2")));
  CHECK(!is_rational_symbol(parse_conway(".2.2")));
}

TEST_CASE("minimal expansions enumerate all minimal alternating diagrams") {
  // 5/2 has the unique minimal expansion 2 2
  auto e5 = minimal_expansions(canonical_fraction(5, 2));
  REQUIRE(e5.size() >= 1);
  for (auto& v : e5) CHECK(std::accumulate(v.begin(), v.end(), 0) == 4);

  // 7/2 = 3 2 class: both 3 2 orderings appear, all with 5 crossings
  auto e7 = minimal_expansions(canonical_fraction(7, 2));
  std::set<std::vector<int>> s(e7.begin(), e7.end());
  CHECK(s.count({3, 2}) == 1);
  for (auto& v : e7) {
    CHECK(std::accumulate(v.begin(), v.end(), 0) == 5);
    // every expansion closes to the same knot
    ConwayNode seq;
    seq.kind = v.size() == 1 ? NodeKind::Integer : NodeKind::Sequence;
    if (v.size() == 1) {
      seq.value = v[0];
    } else {
      for (int a : v) {
        ConwayNode c;
        c.kind = NodeKind::Integer;
        c.value = a;
        seq.children.push_back(c);
      }
    }
    CHECK(fraction_of(seq) == canonical_fraction(7, 2));
  }
}

TEST_CASE("determinant equals fraction numerator") {
  for (const char* s : {"3", "2 2", "3 2", "2 2 1 2", "4 3", "2 1 1 2", "5 4",
                        "2 2 2 2", "9", "3 1 3", "2 1 1 1 2", "5 1 2",
                        "4 1 3", "3 3 2", "2 3 1 2", "3 2 1 2"}) {
    Fraction f = fraction_of(parse_conway(s));
    REQUIRE(is_knot(f));
    CHECK_MESSAGE(goeritz_determinant(build_diagram(s)) == f.p, s);
  }
}

TEST_CASE("recursive unknotting over minimal diagrams") {
  auto u = [](const char* s) { return bj_unknotting(fraction_of(parse_conway(s))); };
  // values from the standard tables of rational knots
  CHECK(u("3") == 1);      // trefoil
  CHECK(u("2 2") == 1);    // figure eight
  CHECK(u("5") == 2);
  CHECK(u("3 2") == 1);
  CHECK(u("7") == 3);
  CHECK(u("5 2") == 1);
  CHECK(u("4 3") == 2);
  CHECK(u("3 1 3") == 2);
  CHECK(u("3 2 2") == 2);
  CHECK(u("2 2 1 2") == 1);
  CHECK(u("2 1 1 1 2") == 1);
  CHECK(u("9") == 4);
  CHECK(u("5 4") == 2);
  CHECK(u("6 3") == 3);
}

TEST_CASE("twist knots") {
  CHECK(is_twist_knot(parse_conway("3")));
  CHECK(is_twist_knot(parse_conway("2 2")));
  CHECK(is_twist_knot(parse_conway("5 2")));
  CHECK(is_twist_knot(parse_conway("2 1")));  // trefoil class again
  CHECK(!is_twist_knot(parse_conway("5")));
  CHECK(!is_twist_knot(parse_conway("2 2 1 2")));
  CHECK(!is_twist_knot(parse_conway("2 1,2 1,2")));  // not rational at all
}
