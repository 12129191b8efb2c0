#pragma once

#include "knotforge/diagram.hpp"

namespace knotforge {

// Combinatorial signature for reduced alternating knot diagrams:
// sigma = -w/2 + (W - B)/2 with the anchored checkerboard coloring.
// Throws DiagramError on non-alternating or non-reduced input.
int traczyk_signature(const OrientedDiagram& od);

// Signature for arbitrary knot diagrams via the Goeritz matrix of the white
// checkerboard surface with the Gordon-Litherland correction term.
int matrix_oracle_signature(const OrientedDiagram& od);

// |det| of the reduced Goeritz matrix = knot determinant (cross-check value).
long long goeritz_determinant(const Diagram& d);

int murasugi_lower_bound(int sigma);

}  // namespace knotforge
