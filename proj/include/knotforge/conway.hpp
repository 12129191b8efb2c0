#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace knotforge {

struct SourceSpan {
  int begin = 0;
  int end = 0;
};

enum class NodeKind {
  Integer,
  Sequence,
  Ramification,
  Plus,
  Product,
  Negation,
  Polyhedron,
};

enum class PolyBase { P6, P8, P9, P10 };

// Spelling family of a polyhedron fill. The notation's shorthands place their
// fields at different template vertices, so the builder needs to know which
// one was written: a leading '.' (".2.2"), plain dotted fields ("2.2.2.2"),
// or colon-separated fields ("2:2:2").
enum class PolyForm { LeadDot, Dotted, Colon };

int poly_vertex_count(PolyBase b);
const char* poly_marker(PolyBase b);  // "6*", "8*", ...

// Parse tree for a Conway symbol.
//
// children usage by kind:
//   Integer      - none (value holds the signed twist count)
//   Sequence     - >= 2 entries, left to right
//   Ramification - >= 2 branches
//   Plus         - children[0] = base; children[1] = explicit integer tail
//                  when has_tail (a bare "+" means one implicit tail twist)
//   Product      - >= 2 factors
//   Negation     - children[0] = mirrored subtangle
//   Polyhedron   - exactly poly_vertex_count(base) slots; unfilled slots are
//                  Integer(1)
struct ConwayNode {
  NodeKind kind = NodeKind::Integer;
  int value = 0;
  PolyBase base = PolyBase::P6;
  bool has_tail = false;
  std::vector<ConwayNode> children;
  SourceSpan span;
  // Traversal index of this Integer node among all integer tangles of the
  // symbol; assigned by renumber_slots (called by parse). Crossings of the
  // built diagram are tagged with it.
  int slot_id = -1;
  // Polyhedron only: spelling family of the fill (see PolyForm)
  PolyForm poly_form = PolyForm::Dotted;

  bool same_structure(const ConwayNode& o) const;
};

struct ParseError : std::runtime_error {
  SourceSpan span;
  ParseError(const std::string& msg, SourceSpan s)
      : std::runtime_error(msg), span(s) {}
};

ConwayNode parse_conway(const std::string& text);
std::string print_canonical(const ConwayNode& ast);
int crossing_count(const ConwayNode& ast);

void renumber_slots(ConwayNode& ast);
std::vector<ConwayNode*> integer_slots(ConwayNode& ast);
std::vector<const ConwayNode*> integer_slots(const ConwayNode& ast);

}  // namespace knotforge
