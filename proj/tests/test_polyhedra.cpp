#include <doctest.h>

#include <set>

#include "knotforge/build.hpp"
#include "knotforge/polyhedra.hpp"
#include "knotforge/signature.hpp"

using namespace knotforge;

TEST_CASE("templates are 4-valent planar medial graphs") {
  for (PolyBase b : {PolyBase::P6, PolyBase::P8, PolyBase::P9, PolyBase::P10}) {
    const PolyTemplate& t = poly_template(b, false);
    CHECK(t.V == poly_vertex_count(b));
    for (int v = 0; v < t.V; ++v)
      for (int j = 0; j < 4; ++j) {
        auto [w, k] = t.adj[v][j];
        CHECK(t.adj[w][k] == std::make_pair(v, j));
      }
  }
}

TEST_CASE("slot layouts are permutations") {
  for (PolyBase b : {PolyBase::P6, PolyBase::P8, PolyBase::P9, PolyBase::P10})
    for (PolyForm f : {PolyForm::LeadDot, PolyForm::Dotted, PolyForm::Colon}) {
      PolyLayout lay = poly_layout(b, f);
      REQUIRE((int)lay.place.size() == poly_vertex_count(b));
      std::set<int> seen(lay.place.begin(), lay.place.end());
      CHECK((int)seen.size() == poly_vertex_count(b));
      CHECK(*seen.begin() == 0);
    }
}

TEST_CASE("spelling form detection") {
  CHECK(parse_conway(".2.2").poly_form == PolyForm::LeadDot);
  CHECK(parse_conway("9*.2 0").poly_form == PolyForm::LeadDot);
  CHECK(parse_conway("2.2.2.2").poly_form == PolyForm::Dotted);
  CHECK(parse_conway("8*2 0.2 0").poly_form == PolyForm::Dotted);
  CHECK(parse_conway("8*").poly_form == PolyForm::Dotted);
  CHECK(parse_conway("3:2:2").poly_form == PolyForm::Colon);
  CHECK(parse_conway("8*2 0::2 0").poly_form == PolyForm::Colon);
  CHECK(parse_conway("8*2:.2").poly_form == PolyForm::Colon);
}

namespace {
struct Golden {
  const char* sym;
  int comps;
  long long det;
  int sigma;
  int alt;
  int reduced;
};

// Frozen values for the basic-polyhedron builds; determinants and |sigma|
// agree with the catalog.
constexpr Golden goldens[] = {
    {"8*", 1, 45, 0, 1, 1},
    {"9*", 1, 75, -2, 1, 1},
    {"10*", 1, 121, 0, 1, 1},
    {"8*2 0", 1, 69, 0, 1, 1},
    {"8*3", 1, 87, 2, 1, 1},
    {"8*2 1", 1, 111, -2, 1, 1},
    {"8*3 0", 1, 93, 0, 1, 1},
    {"8*2 0.2 0", 1, 109, 0, 1, 1},
    {"8*2:2", 1, 95, -2, 1, 1},
    {"8*2:2 0", 1, 103, 2, 1, 1},
    {"8*2:.2", 1, 97, 0, 1, 1},
    {"8*2:.2 0", 1, 101, 0, 1, 1},
    {"8*2 0::2 0", 1, 105, -4, 1, 1},
    {"9*2 0", 1, 115, -2, 1, 1},
    {"9*.2 0", 1, 105, 0, 1, 1},
    {"8*-2 0", 1, 27, -2, 0, 1},
    {"8*-3 0", 1, 51, -2, 0, 1},
    {"8*2:-2 0", 1, 45, 0, 0, 1},
    {"8*2:.-2 0", 1, 39, 2, 0, 1},
    {".2.2", 1, 37, 0, 1, 1},
    {".2 1.2", 1, 61, 0, 1, 1},
    {".2 2.2", 1, 87, 2, 1, 1},
    {".3 1.2", 1, 85, 0, 1, 1},
    {".4.2", 1, 63, -2, 1, 1},
    {".2.2.2", 1, 57, 4, 1, 1},
    {".2 1.2 1 0", 1, 99, -2, 1, 1},
    {".3.2.2", 1, 77, 0, 1, 1},
    {".3.2.2 0", 1, 73, 0, 1, 1},
    {".3.2 0.2", 1, 67, -2, 1, 1},
    {"3:2:2", 1, 65, -4, 1, 1},
    {"2 1:2:2", 1, 85, 4, 1, 1},
    {"3 0:2:2", 1, 75, -2, 1, 1},
    {"-2 0:-2 0:-2 0", 1, 25, 4, 0, 1},
    {"2.2.2.2", 1, 85, 0, 1, 1},
    {"2.2.2.2 0", 1, 83, 2, 1, 1},
    {"2.2.2 0.2", 1, 77, -4, 1, 1},
};
}  // namespace

TEST_CASE("polyhedral builds: determinant, signature, alternation") {
  for (const Golden& g : goldens) {
    CAPTURE(g.sym);
    Diagram d = build_diagram(g.sym);
    REQUIRE(component_count(d) == g.comps);
    CHECK(goeritz_determinant(d) == g.det);
    CHECK(matrix_oracle_signature(orient(d)) == g.sigma);
    CHECK((int)is_alternating(d) == g.alt);
    CHECK((int)is_reduced(d) == g.reduced);
  }
}

TEST_CASE("polyhedral links keep their component counts") {
  CHECK(component_count(build_diagram("8*2")) == 2);
  CHECK(component_count(build_diagram("2:2:2")) == 2);
  CHECK(component_count(build_diagram(".2 1.2 1")) == 2);
}

TEST_CASE("mirrored fills negate the signature") {
  for (const char* sym : {"8*3", "9*2 0", "3:2:2", ".2.2.2", "8*2 0::2 0"}) {
    CAPTURE(sym);
    Diagram d = build_diagram(sym);
    CHECK(matrix_oracle_signature(orient(mirror(d))) ==
          -matrix_oracle_signature(orient(d)));
  }
}
