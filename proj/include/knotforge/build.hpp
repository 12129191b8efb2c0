#pragma once

#include "knotforge/conway.hpp"
#include "knotforge/diagram.hpp"

namespace knotforge {

// Tangle of a non-polyhedral AST node. Crossings are tagged with the
// originating integer tangle's slot_id.
Tangle compose(const ConwayNode& ast);

// Closed diagram of any symbol (numerator closure, or template splice for
// polyhedral roots).
Diagram build_diagram(const ConwayNode& ast);

Diagram build_diagram(const std::string& symbol);

}  // namespace knotforge
