#include "knotforge/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knotforge/conventions.hpp"

namespace knotforge {

Conventions& conventions() {
  static Conventions c;
  return c;
}

namespace {

constexpr int slot_transpose[4] = {0, 3, 2, 1};   // reflect about NW-SE
constexpr int corner_transpose[4] = {0, 3, 2, 1};  // NW,SE fixed; NE<->SW

int opposite(int port) { return 4 * (port / 4) + (port % 4 + 2) % 4; }

// ---- generic splice ----------------------------------------------------

struct MergeOut {
  Tangle t;
  int loops = 0;
};

struct End {
  int part;
  int corner;
  bool operator<(const End& o) const {
    return part != o.part ? part < o.part : corner < o.corner;
  }
  bool operator==(const End& o) const {
    return part == o.part && corner == o.corner;
  }
};

// Glue parts along joins. If with_corners, new_corners[k] names the loose end
// exposed as corner k of the result.
MergeOut merge_parts(const std::vector<const Tangle*>& parts,
                     const std::vector<std::pair<End, End>>& joins,
                     bool with_corners, const std::array<End, 4>& new_corners) {
  MergeOut out;
  std::vector<int> off(parts.size() + 1, 0);
  for (size_t i = 0; i < parts.size(); ++i)
    off[i + 1] = off[i] + 4 * parts[i]->n();
  int total_ports = off[parts.size()];
  out.t.pair.assign(total_ports, -999);
  for (size_t i = 0; i < parts.size(); ++i) {
    const Tangle& p = *parts[i];
    for (int c = 0; c < p.n(); ++c) {
      out.t.over.push_back(p.over[c]);
      out.t.tag.push_back(p.tag[c]);
    }
    for (int q = 0; q < 4 * p.n(); ++q) {
      int v = p.pair[q];
      if (!is_corner(v)) out.t.pair[off[i] + q] = off[i] + v;
      // corner-attached ports are wired below
    }
  }

  // att: what corner (part,c) reaches inside its part
  auto att_port = [&](End e, int& port, End& corner) -> bool {
    int v = parts[e.part]->corner[e.corner];
    if (is_corner(v)) {
      corner = {e.part, code_corner(v)};
      return false;
    }
    port = off[e.part] + v;
    return true;
  };

  std::map<End, End> join_of;
  for (auto& j : joins) {
    join_of[j.first] = j.second;
    join_of[j.second] = j.first;
  }
  std::map<End, int> corner_of;
  if (with_corners)
    for (int k = 0; k < 4; ++k) corner_of[new_corners[k]] = k;

  // Walk inward from end e until a port or an exposed corner is reached.
  // Returns kind: 0 port (res=port), 1 new corner (res=corner idx), 2 loop.
  std::set<End> used;  // ends whose outward wiring has been consumed
  auto resolve = [&](End e, std::set<End>& touched) -> std::pair<int, int> {
    for (;;) {
      touched.insert(e);
      int port;
      End via;
      if (att_port(e, port, via)) return {0, port};
      touched.insert(via);
      auto nc = corner_of.find(via);
      if (nc != corner_of.end()) return {1, nc->second};
      auto jn = join_of.find(via);
      if (jn == join_of.end())
        throw DiagramError("dangling tangle corner");
      e = jn->second;
      if (touched.count(e)) return {2, 0};
    }
  };

  if (with_corners) {
    for (int k = 0; k < 4; ++k) {
      if (used.count(new_corners[k])) continue;
      std::set<End> touched;
      std::pair<int, int> r = resolve(new_corners[k], touched);
      for (auto& e : touched) used.insert(e);
      if (r.first == 0) {
        out.t.corner[k] = r.second;
        out.t.pair[r.second] = corner_code(k);
      } else if (r.first == 1) {
        out.t.corner[k] = corner_code(r.second);
        out.t.corner[r.second] = corner_code(k);
        used.insert(new_corners[r.second]);
      } else {
        throw DiagramError("corner wire closed on itself");
      }
    }
  }

  for (auto& j : joins) {
    if (used.count(j.first) || used.count(j.second)) {
      used.insert(j.first);
      used.insert(j.second);
      continue;
    }
    std::set<End> touched;
    auto r1 = resolve(j.first, touched);
    std::pair<int, int> r2{2, 0};
    if (r1.first != 2) r2 = resolve(j.second, touched);
    for (auto& e : touched) used.insert(e);
    if (r1.first == 2 || r2.first == 2) {
      ++out.loops;
      continue;
    }
    if (r1.first == 1 || r2.first == 1)
      throw DiagramError("splice reached an exposed corner unexpectedly");
    out.t.pair[r1.second] = r2.second;
    out.t.pair[r2.second] = r1.second;
  }

  for (int p = 0; p < total_ports; ++p)
    if (out.t.pair[p] == -999) throw DiagramError("unwired port after splice");
  return out;
}

}  // namespace

Tangle integer_tangle(int k, int tag) {
  Tangle t;
  if (k == 0) {
    t.corner[CornerNW] = corner_code(CornerNE);
    t.corner[CornerNE] = corner_code(CornerNW);
    t.corner[CornerSW] = corner_code(CornerSE);
    t.corner[CornerSE] = corner_code(CornerSW);
    return t;
  }
  int m = k > 0 ? k : -k;
  uint8_t axis = (uint8_t)conventions().positive_over_axis;
  if (k < 0) axis ^= 1;
  t.over.assign(m, axis);
  t.tag.assign(m, tag);
  t.pair.assign(4 * m, -999);
  for (int i = 0; i + 1 < m; ++i) {
    t.pair[4 * i + kSlotNE] = 4 * (i + 1) + kSlotNW;
    t.pair[4 * (i + 1) + kSlotNW] = 4 * i + kSlotNE;
    t.pair[4 * i + kSlotSE] = 4 * (i + 1) + kSlotSW;
    t.pair[4 * (i + 1) + kSlotSW] = 4 * i + kSlotSE;
  }
  t.corner[CornerNW] = 0 + kSlotNW;
  t.pair[0 + kSlotNW] = corner_code(CornerNW);
  t.corner[CornerSW] = 0 + kSlotSW;
  t.pair[0 + kSlotSW] = corner_code(CornerSW);
  t.corner[CornerNE] = 4 * (m - 1) + kSlotNE;
  t.pair[4 * (m - 1) + kSlotNE] = corner_code(CornerNE);
  t.corner[CornerSE] = 4 * (m - 1) + kSlotSE;
  t.pair[4 * (m - 1) + kSlotSE] = corner_code(CornerSE);
  return t;
}

Tangle transpose(const Tangle& t) {
  auto map_val = [](int v) {
    if (is_corner(v)) return corner_code(corner_transpose[code_corner(v)]);
    return 4 * (v / 4) + slot_transpose[v % 4];
  };
  Tangle r;
  r.over.resize(t.n());
  r.tag = t.tag;
  r.pair.assign(4 * t.n(), -999);
  for (int c = 0; c < t.n(); ++c) {
    r.over[c] = t.over[c];
    for (int s = 0; s < 4; ++s)
      r.pair[4 * c + slot_transpose[s]] = map_val(t.pair[4 * c + s]);
  }
  for (int k = 0; k < 4; ++k)
    r.corner[corner_transpose[k]] = map_val(t.corner[k]);
  return r;
}

Tangle tangle_sum(const Tangle& a, const Tangle& b) {
  std::vector<const Tangle*> parts{&a, &b};
  std::vector<std::pair<End, End>> joins{
      {{0, CornerNE}, {1, CornerNW}},
      {{0, CornerSE}, {1, CornerSW}},
  };
  std::array<End, 4> corners{};
  corners[CornerNW] = {0, CornerNW};
  corners[CornerSW] = {0, CornerSW};
  corners[CornerNE] = {1, CornerNE};
  corners[CornerSE] = {1, CornerSE};
  MergeOut m = merge_parts(parts, joins, true, corners);
  if (m.loops != 0) throw DiagramError("closed loop inside tangle sum");
  return std::move(m.t);
}

Tangle mirror_tangle(Tangle t) {
  for (auto& o : t.over) o ^= 1;
  return t;
}

Diagram mirror(Diagram d) {
  for (auto& o : d.over) o ^= 1;
  return d;
}

Diagram numerator_closure(const Tangle& t) {
  std::vector<const Tangle*> parts{&t};
  std::vector<std::pair<End, End>> joins{
      {{0, CornerNW}, {0, CornerNE}},
      {{0, CornerSW}, {0, CornerSE}},
  };
  MergeOut m = merge_parts(parts, joins, false, {});
  Diagram d;
  d.pair = std::move(m.t.pair);
  d.over = std::move(m.t.over);
  d.tag = std::move(m.t.tag);
  d.loops = m.loops;
  return d;
}

Diagram splice_closed(
    const std::vector<Tangle>& parts,
    const std::vector<std::pair<CornerRef, CornerRef>>& joins) {
  std::vector<const Tangle*> ps;
  for (auto& p : parts) ps.push_back(&p);
  std::vector<std::pair<End, End>> js;
  for (auto& j : joins)
    js.push_back({{j.first.t, j.first.corner}, {j.second.t, j.second.corner}});
  MergeOut m = merge_parts(ps, js, false, {});
  Diagram d;
  d.pair = std::move(m.t.pair);
  d.over = std::move(m.t.over);
  d.tag = std::move(m.t.tag);
  d.loops = m.loops;
  return d;
}

int component_count(const Diagram& d) {
  int nports = 4 * d.n();
  std::vector<char> seen(nports, 0);
  int cycles = 0;
  for (int p0 = 0; p0 < nports; ++p0) {
    if (seen[p0]) continue;
    ++cycles;
    int p = p0;
    while (!seen[p]) {
      seen[p] = 1;
      p = opposite(d.pair[p]);
    }
  }
  return cycles / 2 + d.loops;
}

Faces trace_faces(const Diagram& d) {
  if (d.n() == 0) throw DiagramError("crossingless diagram has no face data");
  int nports = 4 * d.n();
  Faces f;
  f.face_of.assign(nports, -1);
  for (int p0 = 0; p0 < nports; ++p0) {
    if (f.face_of[p0] >= 0) continue;
    int id = f.count++;
    f.size.push_back(0);
    int p = p0;
    while (f.face_of[p] < 0) {
      f.face_of[p] = id;
      ++f.size[id];
      int q = d.pair[p];
      p = 4 * (q / 4) + (q % 4 + 1) % 4;
    }
  }
  // Euler check: V - E + F = 2 with E = 2V
  if (f.count != d.n() + 2)
    throw DiagramError("non-planar gluing: face count " +
                       std::to_string(f.count) + " for " +
                       std::to_string(d.n()) + " crossings");
  return f;
}

bool is_alternating(const Diagram& d) {
  auto over_here = [&](int port) {
    return (port % 4) % 2 == d.over[port / 4];
  };
  for (int p = 0; p < 4 * d.n(); ++p) {
    int q1 = d.pair[p];
    int q2 = d.pair[opposite(q1)];
    if (over_here(q1) == over_here(q2)) return false;
  }
  return d.n() > 0;
}

bool is_reduced(const Diagram& d) {
  Faces f = trace_faces(d);
  for (int c = 0; c < d.n(); ++c) {
    int q[4];
    for (int s = 0; s < 4; ++s) q[s] = f.quad(c, s);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (q[i] == q[j]) return false;
  }
  return true;
}

Checkerboard checkerboard(const Diagram& d, const Faces& f) {
  Checkerboard cb;
  cb.color.assign(f.count, -1);
  std::vector<int> stack{0};
  cb.color[0] = 0;
  while (!stack.empty()) {
    int face = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4 * d.n(); ++p) {
      if (f.face_of[p] != face) continue;
      int other = f.face_of[d.pair[p]];
      if (cb.color[other] < 0) {
        cb.color[other] = cb.color[face] ^ 1;
        stack.push_back(other);
      } else if (cb.color[other] == cb.color[face]) {
        throw DiagramError("faces are not checkerboard colorable");
      }
    }
  }
  for (int c : cb.color)
    if (c < 0) throw DiagramError("disconnected diagram");

  cb.white = 0;
  if (is_alternating(d)) {
    int anchor = -1;
    for (int c = 0; c < d.n(); ++c) {
      int col = cb.color[f.quad(c, d.over[c])];
      if (anchor < 0)
        anchor = col;
      else if (anchor != col)
        throw DiagramError("inconsistent state coloring on alternating diagram");
    }
    cb.white = conventions().white_over_side ? anchor : anchor ^ 1;
    cb.anchored = true;
  }
  for (int c : cb.color)
    (c == cb.white ? cb.W : cb.B)++;
  return cb;
}

int OrientedDiagram::over_exit(int c) const {
  int a = d.over[c];
  return outgoing[4 * c + a] ? a : a + 2;
}

int OrientedDiagram::under_exit(int c) const {
  int a = d.over[c] ^ 1;
  return outgoing[4 * c + a] ? a : a + 2;
}

int OrientedDiagram::sign(int c) const {
  int oe = over_exit(c), ue = under_exit(c);
  int s = ((oe - ue + 4) % 4 == 1) ? 1 : -1;
  return s * conventions().sign_flip;
}

int OrientedDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < d.n(); ++c) w += sign(c);
  return w;
}

OrientedDiagram orient(const Diagram& d) {
  if (d.n() == 0) throw DiagramError("cannot orient a crossingless diagram");
  if (component_count(d) != 1)
    throw DiagramError("diagram is a link, not a knot");
  OrientedDiagram od;
  od.d = d;
  od.outgoing.assign(4 * d.n(), 0);
  int p = 0;
  do {
    od.outgoing[p] = 1;
    p = opposite(d.pair[p]);
  } while (p != 0);
  return od;
}

OrientedDiagram reverse(OrientedDiagram od) {
  for (auto& b : od.outgoing) b ^= 1;
  return od;
}

std::vector<TwistRegion> twist_regions(const OrientedDiagram& od) {
  const Diagram& d = od.d;
  Faces f = trace_faces(d);
  // collect bigon links between crossings
  std::vector<std::vector<int>> nbr(d.n());
  std::vector<std::vector<std::pair<int, int>>> bigon_ports(f.count);
  for (int p = 0; p < 4 * d.n(); ++p) {
    int face = f.face_of[p];
    if (f.size[face] == 2) bigon_ports[face].push_back({p, d.pair[p]});
  }
  std::vector<std::array<int, 2>> bigon_edge_ports;  // depart ports of each bigon
  for (int face = 0; face < f.count; ++face) {
    if (f.size[face] != 2) continue;
    auto& ps = bigon_ports[face];
    if (ps.size() != 2) throw DiagramError("degenerate bigon");
    int c1 = ps[0].first / 4, c2 = ps[0].second / 4;
    if (c1 == c2) continue;  // reducible kink pair; not a twist link
    nbr[c1].push_back(c2);
    nbr[c2].push_back(c1);
    bigon_edge_ports.push_back({ps[0].first, ps[1].first});
  }
  std::vector<int> region_of(d.n(), -1);
  std::vector<TwistRegion> regions;
  for (int c0 = 0; c0 < d.n(); ++c0) {
    if (region_of[c0] >= 0) continue;
    // find a chain end (crossing with <= 1 bigon neighbor), else cycle
    int start = c0;
    {
      std::set<int> seen;
      int cur = start, prev = -1;
      while (nbr[cur].size() == 2 && !seen.count(cur)) {
        seen.insert(cur);
        int nxt = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = nxt;
      }
      if (!seen.count(cur)) start = cur;  // found an end; else it's a cycle
    }
    TwistRegion r;
    int cur = start, prev = -1;
    for (;;) {
      region_of[cur] = (int)regions.size();
      r.crossings.push_back(cur);
      int nxt = -1;
      for (int nb : nbr[cur])
        if (nb != prev && region_of[nb] < 0) nxt = nb;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
    }
    r.sign = od.sign(r.crossings[0]);
    for (int c : r.crossings)
      if (od.sign(c) != r.sign)
        throw DiagramError("twist region with mixed crossing signs");
    if (r.crossings.size() >= 2) {
      // find a bigon inside this region and compare strand directions
      bool set = false;
      for (auto& bp : bigon_edge_ports) {
        int ca = bp[0] / 4, cb = d.pair[bp[0]] / 4;
        if (region_of[ca] == (int)(regions.size()) &&
            region_of[cb] == (int)(regions.size())) {
          // edge 1 leaves ca at bp[0]; edge 2's port at ca is pair(bp[1])
          int e2_at_ca = d.pair[bp[1]] / 4 == ca ? d.pair[bp[1]] : bp[1];
          r.parallel = od.outgoing[bp[0]] == od.outgoing[e2_at_ca];
          set = true;
          break;
        }
      }
      if (!set) throw DiagramError("twist region without bigon");
    } else {
      r.parallel = false;  // kind is not meaningful for a single crossing
    }
    regions.push_back(std::move(r));
  }
  return regions;
}

}  // namespace knotforge
