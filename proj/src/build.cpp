#include "knotforge/build.hpp"

#include "knotforge/polyhedra.hpp"

namespace knotforge {

Tangle compose(const ConwayNode& ast) {
  switch (ast.kind) {
    case NodeKind::Integer:
      return integer_tangle(ast.value, ast.slot_id);
    case NodeKind::Sequence:
    case NodeKind::Product: {
      Tangle t = compose(ast.children[0]);
      for (size_t i = 1; i < ast.children.size(); ++i)
        t = tangle_sum(transpose(t), compose(ast.children[i]));
      return t;
    }
    case NodeKind::Ramification: {
      Tangle t = transpose(compose(ast.children[0]));
      for (size_t i = 1; i < ast.children.size(); ++i)
        t = tangle_sum(t, transpose(compose(ast.children[i])));
      return t;
    }
    case NodeKind::Plus: {
      Tangle base = compose(ast.children[0]);
      Tangle tail = ast.has_tail ? compose(ast.children[1]) : integer_tangle(1);
      return tangle_sum(base, tail);
    }
    case NodeKind::Negation:
      return mirror_tangle(compose(ast.children[0]));
    case NodeKind::Polyhedron:
      throw DiagramError("polyhedron only allowed at the symbol root");
  }
  throw DiagramError("unreachable");
}

Diagram build_diagram(const ConwayNode& ast) {
  if (ast.kind == NodeKind::Polyhedron) {
    std::vector<Tangle> slots;
    for (auto& c : ast.children) slots.push_back(compose(c));
    return build_polyhedron(ast.base, slots,
                            poly_layout(ast.base, ast.poly_form));
  }
  return numerator_closure(compose(ast));
}

Diagram build_diagram(const std::string& symbol) {
  return build_diagram(parse_conway(symbol));
}

}  // namespace knotforge
