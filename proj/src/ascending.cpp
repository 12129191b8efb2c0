#include "knotforge/ascending.hpp"

#include <algorithm>

namespace knotforge {

namespace {
int opposite(int port) { return 4 * (port / 4) + (port % 4 + 2) % 4; }
}  // namespace

int descending_change_count(const Diagram& d, int start_port) {
  if (d.n() == 0) throw DiagramError("crossingless diagram");
  std::vector<char> met(d.n(), 0);
  int wrong = 0;
  int p = start_port;
  do {
    int q = d.pair[p];
    int c = q / 4;
    if (!met[c]) {
      met[c] = 1;
      if ((q % 4) % 2 != d.over[c]) ++wrong;  // first visit runs under
    }
    p = opposite(q);
  } while (p != start_port);
  for (char m : met)
    if (!m) throw DiagramError("diagram is a link, not a knot");
  return wrong;
}

AscendingScan diagram_ascending_number(const Diagram& d) {
  AscendingScan scan;
  scan.per_start.resize(4 * d.n());
  scan.a_d = d.n() + 1;
  for (int p = 0; p < 4 * d.n(); ++p) {
    int v = descending_change_count(d, p);
    scan.per_start[p] = v;
    if (v < scan.a_d) {
      scan.a_d = v;
      scan.witness_port = p;
    }
  }
  return scan;
}

AscendingBounds knot_ascending_bounds(int crossing_number, int u_lower,
                                      bool twist_knot,
                                      const std::vector<int>& diagram_a_ds,
                                      int bridge) {
  AscendingBounds b;
  b.lower = 1;
  b.witnesses.push_back("a>=1 (nontrivial)");
  if (u_lower > b.lower) {
    b.lower = u_lower;
    b.witnesses.push_back("a>=u");
  }
  if (bridge > 0 && bridge - 1 > b.lower) {
    b.lower = bridge - 1;
    b.witnesses.push_back("a>=b-1");
  }
  if (!twist_knot && 2 > b.lower) {
    b.lower = 2;
    b.witnesses.push_back("a>=2 (not a twist knot)");
  }
  b.upper = (crossing_number - 1) / 2;
  b.witnesses.push_back("a<=(c-1)/2");
  for (int a_d : diagram_a_ds)
    if (a_d < b.upper) {
      b.upper = a_d;
      b.witnesses.push_back("a<=a_d(diagram)");
    }
  if (b.lower > b.upper)
    throw DiagramError("inconsistent ascending bounds");
  return b;
}

}  // namespace knotforge
