#pragma once

namespace knotforge {

// Global diagram conventions. Each value picks one side of a mirror or
// handedness choice; they were fixed together so that the right trefoil "3"
// gets signature -2 and the combinatorial and Goeritz-matrix signatures agree
// everywhere, and they are frozen here.
struct Conventions {
  // over axis of a crossing in a positive integer twist (0 = NW-SE strand on
  // top, 1 = SW-NE strand on top)
  int positive_over_axis = 0;
  // multiply every crossing sign by this
  int sign_flip = -1;
  // multiply every Goeritz eta by this
  int eta_flip = -1;
  // type II test: crossing is type II when the quadrant between the two
  // outgoing half-strands is white (flip to use the black side)
  bool type2_white_side = false;
  // checkerboard anchor: white is the color swept by rotating the over strand
  // onto the under strand counterclockwise (flip to use the other side)
  bool white_over_side = false;
};

Conventions& conventions();

}  // namespace knotforge
