#include "doctest.h"
#include "knotforge/conway.hpp"

using namespace knotforge;

TEST_CASE("atomic and sequence symbols") {
  ConwayNode n = parse_conway("3");
  CHECK(n.kind == NodeKind::Integer);
  CHECK(n.value == 3);
  CHECK(crossing_count(n) == 3);

  ConwayNode s = parse_conway("2 2 1 2");
  CHECK(s.kind == NodeKind::Sequence);
  REQUIRE(s.children.size() == 4);
  CHECK(s.children[2].value == 1);
  CHECK(crossing_count(s) == 7);
  CHECK(print_canonical(s) == "2 2 1 2");
}

TEST_CASE("ramification with negative branch") {
  ConwayNode n = parse_conway("2 1, 2 1, -2");
  CHECK(n.kind == NodeKind::Ramification);
  REQUIRE(n.children.size() == 3);
  CHECK(n.children[0].kind == NodeKind::Sequence);
  CHECK(n.children[2].kind == NodeKind::Integer);
  CHECK(n.children[2].value == -2);
  CHECK(crossing_count(n) == 8);
  CHECK(print_canonical(n) == "2 1,2 1,-2");
}

TEST_CASE("product of ramifications") {
  ConwayNode n = parse_conway("(3,2) (2 1,2)");
  CHECK(n.kind == NodeKind::Product);
  REQUIRE(n.children.size() == 2);
  CHECK(n.children[0].kind == NodeKind::Ramification);
  CHECK(n.children[1].kind == NodeKind::Ramification);
  CHECK(crossing_count(n) == 10);
  CHECK(print_canonical(n) == "(3,2) (2 1,2)");
}

TEST_CASE("plus forms") {
  ConwayNode a = parse_conway("3,3,2+");
  CHECK(a.kind == NodeKind::Plus);
  CHECK(!a.has_tail);
  CHECK(crossing_count(a) == 9);
  CHECK(print_canonical(a) == "3,3,2+");

  ConwayNode b = parse_conway("3,3,2++");
  CHECK(b.has_tail);
  CHECK(b.children[1].value == 2);
  CHECK(crossing_count(b) == 10);
  ConwayNode c = parse_conway("3,3,2+2");
  CHECK(b.same_structure(c));
  CHECK(print_canonical(b) == "3,3,2+2");
}

TEST_CASE("negation groups") {
  ConwayNode n = parse_conway("-(1,1) 1 1,-(1,1) 1 1,(-1,-1,-1) 1");
  CHECK(n.kind == NodeKind::Ramification);
  REQUIRE(n.children.size() == 3);
  CHECK(n.children[0].kind == NodeKind::Product);
  CHECK(n.children[0].children[0].kind == NodeKind::Negation);
  CHECK(crossing_count(n) == 12);
}

TEST_CASE("polyhedral fills") {
  ConwayNode a = parse_conway("3:2:2");
  CHECK(a.kind == NodeKind::Polyhedron);
  CHECK(a.base == PolyBase::P6);
  REQUIRE(a.children.size() == 6);
  CHECK(a.children[0].value == 3);
  CHECK(a.children[1].value == 1);
  CHECK(a.children[2].value == 2);
  CHECK(a.children[4].value == 2);
  CHECK(crossing_count(a) == 10);

  // a leading dot leaves a unit in the first slot: ".2.2 0" is "6*1.2.2 0"
  ConwayNode b = parse_conway(".2.2 0");
  CHECK(b.base == PolyBase::P6);
  CHECK(b.children[0].value == 1);
  CHECK(b.children[1].value == 2);
  CHECK(b.children[2].kind == NodeKind::Sequence);
  CHECK(crossing_count(b) == 8);
  CHECK(b.same_structure(parse_conway("6*1.2.2 0")));
  // this is what makes "2.2.2.2" and ".2.2.2" distinct symbols
  CHECK(!parse_conway(".2.2.2").same_structure(
      parse_conway("2.2.2")));

  // same rule after an explicit marker
  ConwayNode b9 = parse_conway("9*.2 0");
  CHECK(b9.children[0].value == 1);
  CHECK(b9.children[1].kind == NodeKind::Sequence);

  ConwayNode c = parse_conway("8*2 0::2 0");
  CHECK(c.base == PolyBase::P8);
  CHECK(c.children[0].kind == NodeKind::Sequence);
  CHECK(c.children[1].value == 1);
  CHECK(c.children[2].value == 1);
  CHECK(c.children[3].value == 1);
  CHECK(c.children[4].kind == NodeKind::Sequence);
  CHECK(crossing_count(c) == 10);

  CHECK(crossing_count(parse_conway("8*")) == 8);
  CHECK(crossing_count(parse_conway("9*")) == 9);
  CHECK(crossing_count(parse_conway("10*")) == 10);
  CHECK(crossing_count(parse_conway("2.2.2.2")) == 10);
  CHECK(crossing_count(parse_conway("-2 0:-2 0:-2 0")) == 9);
  CHECK(crossing_count(parse_conway("8*2:.2")) == 10);
  CHECK(crossing_count(parse_conway(".2.2.2.2 0")) == 10);
  CHECK(crossing_count(parse_conway("9*.2 0")) == 10);

  // "2:.2" leaves slot 3 empty, unlike "2:2"
  ConwayNode d = parse_conway("8*2:.2");
  CHECK(d.children[2].value == 1);
  CHECK(d.children[3].value == 2);
  ConwayNode e = parse_conway("8*2:2");
  CHECK(e.children[2].value == 2);
}

TEST_CASE("round trip on varied symbols") {
  for (const char* s :
       {"3", "2 2 1 2", "2 1,2 1,-2", "(3,2) (2 1,2)", "3,3,2+", "3,3,2+2",
        "3:2:2", ".2.2 0", "8*2 0::2 0", "9*.2 0", "-2 0:-2 0:-2 0",
        "2.2.2.2", "8*2:.2", "3 2,2 2,3 1,3", "-(1,1) 1 1,-(1,1) 1 1,(-1,-1,-1) 1"}) {
    ConwayNode a = parse_conway(s);
    std::string printed = print_canonical(a);
    ConwayNode b = parse_conway(printed);
    CHECK_MESSAGE(a.same_structure(b), "round-trip failed for ", s, " -> ", printed);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_conway(""), ParseError);
  CHECK_THROWS_AS(parse_conway("2,,3"), ParseError);
  CHECK_THROWS_AS(parse_conway("2 1-2"), ParseError);
  CHECK_THROWS_AS(parse_conway("7*2"), ParseError);
  CHECK_THROWS_AS(parse_conway("8^8 2 0"), ParseError);
  CHECK_THROWS_AS(parse_conway("6*1.2.3.4.5.6.7"), ParseError);
  CHECK_THROWS_AS(parse_conway("0 2"), ParseError);
  CHECK_THROWS_AS(parse_conway("x"), ParseError);
}

TEST_CASE("slot numbering is traversal order") {
  ConwayNode n = parse_conway(".2.2 0.2");
  auto slots = integer_slots(n);
  REQUIRE(slots.size() == 7);  // 1,2,(2,0),2,1,1 -> seven integer nodes
  CHECK(slots[0]->value == 1);
  CHECK(slots[1]->value == 2);
  CHECK(slots[2]->value == 2);
  CHECK(slots[3]->value == 0);
  CHECK(slots[4]->value == 2);
  for (size_t i = 0; i < slots.size(); ++i)
    CHECK(slots[i]->slot_id == (int)i);
}
