#pragma once

#include <array>
#include <utility>
#include <vector>

#include "knotforge/conway.hpp"
#include "knotforge/diagram.hpp"

namespace knotforge {

// 4-valent planar template for a basic polyhedron: rotation system over its
// vertices. adj[v][j] = (v', j') pairs template half-edges.
struct PolyTemplate {
  int V = 0;
  std::vector<std::array<std::pair<int, int>, 4>> adj;
};

// The basic polyhedra are the medial graphs of small pyramids/prisms:
// 6* = medial(tetrahedron) = octahedron, 8* = medial(square pyramid) =
// square antiprism, 9* = medial(triangular prism), 10* = medial(pentagonal
// pyramid) = pentagonal antiprism.
const PolyTemplate& poly_template(PolyBase base, bool reflect);

// Slot-position conventions for the basic polyhedra; fixed empirically against
// known signature/ascending values (see tests) and frozen here.
struct PolyConfig {
  std::vector<int> slot_vertex;  // symbol slot i (0-based) -> template vertex
  bool color_bit = false;        // checkerboard class carrying the over strands
  bool reflect = false;          // reflect the base embedding
  std::vector<int> rot;  // extra quarter-turns per template vertex (empty = 0)
  std::vector<int> flip;  // per-vertex: insert the fill transposed (empty = 0)
  bool fill_cw = false;   // glue fill corners clockwise instead of ccw
};
PolyConfig& poly_config(PolyBase base);

// Where a symbol's slots sit on the template: slot i feeds vertex place[i],
// and bit v of flip_mask inserts the fill at vertex v transposed. Each
// spelling shorthand has its own layout, fixed empirically (see tests).
struct PolyLayout {
  std::vector<int> place;
  unsigned flip_mask = 0;
};
PolyLayout poly_layout(PolyBase base, PolyForm form);

// Splice one tangle per symbol slot (unit crossings for unfilled slots) into
// the template. slots is indexed by symbol position and must have size V.
Diagram build_polyhedron(PolyBase base, const std::vector<Tangle>& slots);
Diagram build_polyhedron(PolyBase base, const std::vector<Tangle>& slots,
                         const PolyLayout& layout);

}  // namespace knotforge
