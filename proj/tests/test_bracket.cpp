#include "doctest.h"
#include "knotforge/bracket.hpp"
#include "knotforge/build.hpp"
#include "knotforge/search.hpp"

using namespace knotforge;

TEST_CASE("normalized bracket is a diagram invariant") {
  // reducible unknot diagram evaluates like the unknot
  LaurentA u = bracket_invariant(build_diagram("2 0"));
  REQUIRE(u.c.size() == 1);
  CHECK(u.c.at(0) == 1);

  // trefoil: three terms, chiral
  LaurentA t = bracket_invariant(build_diagram("3"));
  CHECK(t.c.size() == 3);
  CHECK(!(t == mirror_poly(t)));
  CHECK(t == mirror_poly(bracket_invariant(build_diagram("-3"))));

  // figure-eight is amphichiral
  LaurentA f = bracket_invariant(build_diagram("2 2"));
  CHECK(f == mirror_poly(f));

  // equivalent symbols agree; flype-related diagrams agree
  CHECK(bracket_invariant(build_diagram("2 1,3,2")) ==
        bracket_invariant(build_diagram("3,2 1,2")));
}

TEST_CASE("bracket separates determinant-and-signature collisions") {
  auto k1 = bracket_invariant(build_diagram("2 2 2 2"));    // det 29
  auto k2 = bracket_invariant(build_diagram("3 1 1 1 2"));  // det 29
  CHECK(!(k1 == k2));
  CHECK(!(k1 == mirror_poly(k2)));
  auto k3 = bracket_invariant(build_diagram("2 3 1 2"));  // det 25
  auto k4 = bracket_invariant(build_diagram("3 1 1 3"));  // det 25
  CHECK(!(k3 == k4));
  CHECK(!(k3 == mirror_poly(k4)));
}

TEST_CASE("minimal-diagram search lowers the torus-form values") {
  // these knots have another minimal diagram with a smaller change count
  MinimalSearchResult r = minimal_diagram_ascending("2 2 1 2");
  CHECK(r.a_d == 2);
  CHECK(r.candidates > 1);
  CHECK(minimal_diagram_ascending("2 2 2 2").a_d == 2);
  // and these do not
  CHECK(minimal_diagram_ascending("3").a_d == 1);
  CHECK(minimal_diagram_ascending("5 2").a_d == 3);
  CHECK(minimal_diagram_ascending("3 1 1 1 2").a_d == 3);
}
