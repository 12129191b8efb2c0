#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotforge {

// Crossing half-edge slots, counterclockwise: 0 = NW, 1 = SW, 2 = SE, 3 = NE.
// The two strands run through opposite slots: axis 0 = {0,2} (NW-SE), axis 1 =
// {1,3} (SW-NE). over[c] names the axis whose strand passes on top.
// Ports are encoded as 4*crossing + slot.
inline constexpr int kSlotNW = 0;
inline constexpr int kSlotSW = 1;
inline constexpr int kSlotSE = 2;
inline constexpr int kSlotNE = 3;

// Tangle corners. CCW cycle starting at NW: NW, SW, SE, NE.
enum Corner { CornerNW = 0, CornerNE = 1, CornerSE = 2, CornerSW = 3 };

// corner <-> code stored in pair arrays (codes are negative)
inline constexpr int corner_code(int corner) { return -1 - corner; }
inline constexpr bool is_corner(int v) { return v < 0; }
inline constexpr int code_corner(int code) { return -1 - code; }

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Diagram {
  std::vector<int> pair;      // size 4n; pair[p] = port glued to port p
  std::vector<uint8_t> over;  // size n; over axis of each crossing
  std::vector<int> tag;       // size n; conway integer-slot id or -1
  int loops = 0;              // closed crossingless components

  int n() const { return (int)over.size(); }
};

// Open tangle with four boundary corners. corner[k] holds the port its wire
// reaches, or corner_code(k') when the wire runs straight to another corner.
struct Tangle {
  std::vector<int> pair;  // size 4n; port or corner code
  std::vector<uint8_t> over;
  std::vector<int> tag;
  std::array<int, 4> corner{};

  int n() const { return (int)over.size(); }
};

Tangle integer_tangle(int k, int tag = -1);
Tangle transpose(const Tangle& t);  // flip about the NW-SE diagonal
Tangle tangle_sum(const Tangle& a, const Tangle& b);
Tangle mirror_tangle(Tangle t);
Diagram mirror(Diagram d);
Diagram numerator_closure(const Tangle& t);

// Generic splice: glue several tangles along corner-to-corner joins into a
// closed diagram. Joins reference (tangle index, Corner).
struct CornerRef {
  int t;
  int corner;
};
Diagram splice_closed(const std::vector<Tangle>& parts,
                      const std::vector<std::pair<CornerRef, CornerRef>>& joins);

int component_count(const Diagram& d);

struct Faces {
  // face id of the cycle each departure port belongs to
  std::vector<int> face_of;
  std::vector<int> size;
  int count = 0;
  // face of the quadrant between slot s and slot s+1 of crossing c
  int quad(int c, int s) const { return face_of[4 * c + (s + 1) % 4]; }
};
Faces trace_faces(const Diagram& d);

bool is_alternating(const Diagram& d);
bool is_reduced(const Diagram& d);  // no face touches a crossing twice

struct Checkerboard {
  std::vector<int> color;  // per face, 0/1
  int white = 0;           // which color is "white"
  int W = 0, B = 0;
  bool anchored = false;  // white fixed by the all-A-state rule (alternating)
};
Checkerboard checkerboard(const Diagram& d, const Faces& f);

struct OrientedDiagram {
  Diagram d;
  std::vector<uint8_t> outgoing;  // per port: strand leaves the crossing here

  int over_exit(int c) const;   // slot where the over strand leaves
  int under_exit(int c) const;  // slot where the under strand leaves
  int sign(int c) const;
  int writhe() const;
};

OrientedDiagram orient(const Diagram& d);  // canonical direction; knots only
OrientedDiagram reverse(OrientedDiagram od);

struct TwistRegion {
  std::vector<int> crossings;  // in chain order
  int sign = 0;
  bool parallel = false;
};
std::vector<TwistRegion> twist_regions(const OrientedDiagram& od);

}  // namespace knotforge
