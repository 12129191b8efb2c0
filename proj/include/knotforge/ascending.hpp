#pragma once

#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

// A based oriented traversal is identified by its first departure port:
// port = 4*crossing + slot encodes both the basepoint arc and the direction,
// giving the 2n arcs x 2 orientations of the minimization.

// Number of crossings first met as an under-crossing when traversing from
// start_port; these are exactly the changes needed to make the diagram
// descending from that basepoint.
int descending_change_count(const Diagram& d, int start_port);

struct AscendingScan {
  int a_d = 0;
  int witness_port = -1;           // smallest argmin port
  std::vector<int> per_start;      // change count per departure port
};

AscendingScan diagram_ascending_number(const Diagram& d);

struct AscendingBounds {
  int lower = 0;
  int upper = 0;
  std::vector<std::string> witnesses;  // provenance of each bound
};

// Combine the standard bounds: u <= a, b-1 <= a, a >= 2 unless twist knot,
// a <= floor((c-1)/2), a <= a_d of any examined diagram.
AscendingBounds knot_ascending_bounds(int crossing_number, int u_lower,
                                      bool twist_knot,
                                      const std::vector<int>& diagram_a_ds,
                                      int bridge = 0);

}  // namespace knotforge
