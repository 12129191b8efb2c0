#include "doctest.h"
#include "knotforge/build.hpp"
#include "knotforge/conway.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/rational.hpp"
#include "knotforge/signature.hpp"

using namespace knotforge;

TEST_CASE("trefoil closure basics") {
  Diagram d = build_diagram("3");
  CHECK(d.n() == 3);
  CHECK(component_count(d) == 1);
  CHECK(is_alternating(d));
  CHECK(is_reduced(d));
  Faces f = trace_faces(d);
  CHECK(f.count == 5);
  OrientedDiagram od = orient(d);
  int w = od.writhe();
  CHECK((w == 3 || w == -3));
  CHECK(reverse(od).writhe() == w);
  Checkerboard cb = checkerboard(d, f);
  CHECK(cb.W + cb.B == 5);
  CHECK(((cb.W == 2 && cb.B == 3) || (cb.W == 3 && cb.B == 2)));

  auto regions = twist_regions(od);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].crossings.size() == 3);
  CHECK(regions[0].parallel);
}

TEST_CASE("links are detected") {
  Diagram d = build_diagram("2");
  CHECK(d.n() == 2);
  CHECK(component_count(d) == 2);
  CHECK_THROWS_AS(orient(d), DiagramError);
  // "2 0" has fraction 1/2, so its numerator closure is an unknot
  CHECK(component_count(build_diagram("2 0")) == 1);
}

TEST_CASE("figure eight") {
  Diagram d = build_diagram("2 2");
  CHECK(d.n() == 4);
  CHECK(component_count(d) == 1);
  CHECK(is_alternating(d));
  OrientedDiagram od = orient(d);
  CHECK(od.writhe() == 0);
  auto regions = twist_regions(od);
  REQUIRE(regions.size() == 2);
  CHECK(regions[0].crossings.size() == 2);
  CHECK(regions[1].crossings.size() == 2);
  CHECK(goeritz_determinant(d) == 5);
}

TEST_CASE("mirror is an involution and flips alternation partner") {
  Diagram d = build_diagram("2 2 1 2");
  Diagram m = mirror(d);
  CHECK(is_alternating(m));
  Diagram mm = mirror(m);
  for (int c = 0; c < d.n(); ++c) CHECK(mm.over[c] == d.over[c]);
}

TEST_CASE("determinant equals rational fraction numerator") {
  for (const char* s : {"3", "2 2", "3 2", "2 2 1 2", "4 3", "2 1 1 2", "5 4",
                        "2 2 2 2", "9", "3 1 3", "2 1 1 1 2"}) {
    ConwayNode ast = parse_conway(s);
    Fraction f = fraction_of(ast);
    Diagram d = build_diagram(ast);
    CHECK(component_count(d) == 1);
    CHECK_MESSAGE(goeritz_determinant(d) == f.p, "det mismatch for ", s);
  }
}

TEST_CASE("pretzel and mixed closures are knots with right size") {
  for (const char* s : {"3,3,2", "2 1,2 1,2", "3,3,-2", "2 2,3,2", "3,3,2+",
                        "(3,2) (2 1,2)", "2 1,2 1,-2"}) {
    ConwayNode ast = parse_conway(s);
    Diagram d = build_diagram(ast);
    CHECK(d.n() == crossing_count(ast));
    CHECK_MESSAGE(component_count(d) == 1, "not a knot: ", s);
  }
  CHECK(is_alternating(build_diagram("3,3,2")));
  CHECK(!is_alternating(build_diagram("3,3,-2")));
}

TEST_CASE("basic polyhedra templates") {
  Diagram p6 = build_diagram("6*");
  CHECK(p6.n() == 6);
  CHECK(is_alternating(p6));
  CHECK(is_reduced(p6));
  CHECK(component_count(p6) == 3);  // Borromean rings

  Diagram p8 = build_diagram("8*");
  CHECK(p8.n() == 8);
  CHECK(is_alternating(p8));
  CHECK(component_count(p8) == 1);  // 8_18

  Diagram p9 = build_diagram("9*");
  CHECK(p9.n() == 9);
  CHECK(is_alternating(p9));
  CHECK(component_count(p9) == 1);  // 9_40

  Diagram p10 = build_diagram("10*");
  CHECK(p10.n() == 10);
  CHECK(is_alternating(p10));
  CHECK(component_count(p10) == 1);  // 10_123
}

TEST_CASE("rational helpers") {
  CHECK(fraction_of(parse_conway("2 2")) == Fraction{5, 2});
  CHECK(fraction_of(parse_conway("3 2")) == Fraction{7, 2});
  CHECK(is_knot(Fraction{3, 1}));
  CHECK(!is_knot(canonical_fraction(4, 1)));
  CHECK(is_twist_knot(parse_conway("5 2")));
  CHECK(is_twist_knot(parse_conway("3")));
  CHECK(is_twist_knot(parse_conway("2 2")));
  CHECK(!is_twist_knot(parse_conway("3 2 2")));

  auto exps = minimal_expansions(canonical_fraction(7, 2));
  bool has32 = false;
  for (auto& e : exps)
    if (e == std::vector<int>{3, 2}) has32 = true;
  CHECK(has32);

  CHECK(bj_unknotting(fraction_of(parse_conway("3 2"))) == 1);
  CHECK(bj_unknotting(fraction_of(parse_conway("4 3"))) == 2);
  CHECK(bj_unknotting(fraction_of(parse_conway("5 4"))) == 2);
  CHECK(bj_unknotting(fraction_of(parse_conway("3"))) == 1);
}
