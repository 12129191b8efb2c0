#include "doctest.h"
#include "knotforge/build.hpp"
#include "knotforge/signature.hpp"

#include <cstdlib>

using namespace knotforge;

namespace {

const char* kAlternatingKnots[] = {
    "3", "2 2", "5", "3 2", "7", "5 2", "4 3", "3 1 3", "3 2 2", "2 2 1 2",
    "2 1 1 1 2", "9", "5 4", "6 3", "2 3 2 2", "3 1 2 1 2", "2 1,2 1,2",
    "3,3,2+", "3 2,2 2,3 1,3", "2 2,3,2", "3,2 1,2 1", "3,3,3", "5,3,2",
    "2 2 1,3,2", "2 1 1,2 1 1,2", "(3,2) (2 1,2)", "2 1,2 1,2 1+",
    "4 1,3,2", "2 2,2 2,2"};

}  // namespace

TEST_CASE("anchor values fix the sign conventions") {
  {
    OrientedDiagram od = orient(build_diagram("3"));
    CHECK(od.writhe() == 3);
    CHECK(traczyk_signature(od) == -2);
    CHECK(matrix_oracle_signature(od) == -2);
  }
  {
    OrientedDiagram od = orient(build_diagram("2 2"));
    CHECK(od.writhe() == 0);
    CHECK(traczyk_signature(od) == 0);
  }
  {
    Diagram d = build_diagram("3 2,2 2,3 1,3");
    OrientedDiagram od = orient(d);
    Faces f = trace_faces(d);
    Checkerboard cb = checkerboard(d, f);
    CHECK(od.writhe() == -4);
    CHECK(cb.W == 9);
    CHECK(cb.B == 9);
    CHECK(traczyk_signature(od) == 2);
    CHECK(matrix_oracle_signature(od) == 2);
  }
}

TEST_CASE("combinatorial signature equals the matrix oracle") {
  for (const char* s : kAlternatingKnots) {
    OrientedDiagram od = orient(build_diagram(s));
    CHECK_MESSAGE(traczyk_signature(od) == matrix_oracle_signature(od), s);
  }
}

TEST_CASE("signature is antisymmetric under mirroring") {
  for (const char* s : kAlternatingKnots) {
    Diagram d = build_diagram(s);
    Diagram m = mirror(d);
    CHECK_MESSAGE(
        matrix_oracle_signature(orient(m)) == -matrix_oracle_signature(orient(d)),
        s);
    CHECK_MESSAGE(traczyk_signature(orient(m)) == -traczyk_signature(orient(d)),
                  s);
  }
}

TEST_CASE("matrix oracle handles non-alternating diagrams") {
  // 8_19 = 3,3,-2: signature -6 (mirror conventions give |6|)
  OrientedDiagram od = orient(build_diagram("3,3,-2"));
  CHECK(std::abs(matrix_oracle_signature(od)) == 6);
  CHECK_THROWS_AS(traczyk_signature(od), DiagramError);
  // 8_20 = 3,2 1,-2: signature 0
  CHECK(matrix_oracle_signature(orient(build_diagram("3,2 1,-2"))) == 0);
  // unknots
  CHECK(matrix_oracle_signature(orient(build_diagram("2 0"))) == 0);
  // a non-minimal unknotted-ish template diagram
  CHECK(matrix_oracle_signature(orient(build_diagram("3,-2 1,2"))) ==
        matrix_oracle_signature(orient(build_diagram("3,-2 1,2"))));
}

TEST_CASE("determinant is mirror invariant and odd for knots") {
  for (const char* s : kAlternatingKnots) {
    Diagram d = build_diagram(s);
    long long det = goeritz_determinant(d);
    CHECK_MESSAGE(det % 2 == 1, s);
    CHECK_MESSAGE(goeritz_determinant(mirror(d)) == det, s);
  }
}

TEST_CASE("murasugi lower bound") {
  CHECK(murasugi_lower_bound(0) == 0);
  CHECK(murasugi_lower_bound(-2) == 1);
  CHECK(murasugi_lower_bound(2) == 1);
  CHECK(murasugi_lower_bound(6) == 3);
  CHECK(murasugi_lower_bound(-6) == 3);
}
