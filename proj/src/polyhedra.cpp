#include "knotforge/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotforge/conventions.hpp"

namespace knotforge {

namespace {

// planar graph with counterclockwise neighbor lists
struct SmallGraph {
  std::vector<std::vector<int>> nbr;
};

SmallGraph base_graph(PolyBase base) {
  SmallGraph g;
  switch (base) {
    case PolyBase::P6: {
      // tetrahedron: 0 = center, 1..3 = outer triangle (CCW)
      g.nbr = {
          {1, 2, 3},  // center
          {2, 0, 3},
          {3, 0, 1},
          {1, 0, 2},
      };
      break;
    }
    case PolyBase::P8: {
      // square pyramid: 0 = apex (center), 1..4 = base square (CCW)
      g.nbr = {
          {1, 2, 3, 4},
          {2, 0, 4},
          {3, 0, 1},
          {4, 0, 2},
          {1, 0, 3},
      };
      break;
    }
    case PolyBase::P9: {
      // triangular prism: 0..2 inner triangle (CCW), 3..5 outer triangle;
      // spoke i -- i+3
      g.nbr = {
          {3, 1, 2},
          {4, 2, 0},
          {5, 0, 1},
          {4, 0, 5},
          {5, 1, 3},
          {3, 2, 4},
      };
      break;
    }
    case PolyBase::P10: {
      // pentagonal pyramid: 0 = apex, 1..5 = base pentagon (CCW)
      g.nbr = {
          {1, 2, 3, 4, 5},
          {2, 0, 5},
          {3, 0, 1},
          {4, 0, 2},
          {5, 0, 3},
          {1, 0, 4},
      };
      break;
    }
  }
  return g;
}

PolyTemplate medial(const SmallGraph& g) {
  int nv = (int)g.nbr.size();
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int v : g.nbr[u])
      if (u < v) {
        edge_id[{u, v}] = (int)edges.size();
        edges.push_back({u, v});
      }
  auto eid = [&](int a, int b) {
    return edge_id.at({std::min(a, b), std::max(a, b)});
  };
  auto around = [&](int u, int e_other, int step) {
    // neighbor of u adjacent (CCW step) to the edge (u, e_other)
    const auto& list = g.nbr[u];
    int deg = (int)list.size();
    int idx = (int)(std::find(list.begin(), list.end(), e_other) - list.begin());
    return list[((idx + step) % deg + deg) % deg];
  };

  PolyTemplate t;
  t.V = (int)edges.size();
  t.adj.assign(t.V, {});
  // entry descriptor: medial edge joining this vertex and another around a
  // base vertex; key (base vertex, {e, f}) is unique in simple graphs of
  // min degree 3
  std::map<std::tuple<int, int, int>, std::pair<int, int>> half;
  for (int e = 0; e < t.V; ++e) {
    auto [u, v] = edges[e];
    // rotation around the midpoint of (u,v), counterclockwise:
    // pred_u, succ_v, pred_v, succ_u
    int other[4];
    int via[4];
    other[0] = eid(u, around(u, v, -1));
    via[0] = u;
    other[1] = eid(v, around(v, u, +1));
    via[1] = v;
    other[2] = eid(v, around(v, u, -1));
    via[2] = v;
    other[3] = eid(u, around(u, v, +1));
    via[3] = u;
    for (int j = 0; j < 4; ++j) {
      auto key = std::make_tuple(via[j], std::min(e, other[j]),
                                 std::max(e, other[j]));
      auto it = half.find(key);
      if (it == half.end()) {
        half[key] = {e, j};
      } else {
        auto [e2, j2] = it->second;
        t.adj[e][j] = {e2, j2};
        t.adj[e2][j2] = {e, j};
        half.erase(it);
      }
    }
  }
  if (!half.empty()) throw DiagramError("medial construction: unmatched ports");
  return t;
}

PolyTemplate reflect_template(PolyTemplate t) {
  // reverse every rotation: position j -> 3-j
  PolyTemplate r;
  r.V = t.V;
  r.adj.assign(t.V, {});
  for (int v = 0; v < t.V; ++v)
    for (int j = 0; j < 4; ++j) {
      auto [w, k] = t.adj[v][j];
      r.adj[v][3 - j] = {w, 3 - k};
    }
  return r;
}

}  // namespace

const PolyTemplate& poly_template(PolyBase base, bool reflect) {
  static std::map<std::pair<int, int>, PolyTemplate> cache;
  auto key = std::make_pair((int)base, (int)reflect);
  auto it = cache.find(key);
  if (it == cache.end()) {
    PolyTemplate t = medial(base_graph(base));
    if (reflect) t = reflect_template(t);
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

PolyConfig& poly_config(PolyBase base) {
  // Calibrated slot numbering and mirror class (see the slot-convention test).
  static PolyConfig cfg[4] = {
      {{0, 1, 2, 3, 4, 5}, false, false},
      {{0, 1, 2, 3, 4, 5, 6, 7}, false, false},
      {{0, 1, 2, 3, 4, 5, 6, 7, 8}, false, false},
      {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, false, false},
  };
  return cfg[(int)base];
}

PolyLayout poly_layout(PolyBase base, PolyForm form) {
  // Calibrated against catalog determinants/signatures and the family grids
  // (see the polyhedra tests); the three spelling shorthands of 6* symbols
  // use different vertex orders and transposition frames.
  if (base == PolyBase::P6) {
    switch (form) {
      case PolyForm::LeadDot: return {{1, 0, 2, 5, 3, 4}, 0x0c};
      case PolyForm::Colon: return {{0, 1, 2, 3, 4, 5}, 0x00};
      case PolyForm::Dotted: return {{0, 3, 1, 5, 2, 4}, 0x03};
    }
  }
  if (base == PolyBase::P8) {
    if (form == PolyForm::Colon) return {{6, 1, 4, 0, 5, 2, 3, 7}, 0x01};
    return {{0, 4, 1, 2, 3, 5, 6, 7}, 0x01};
  }
  if (base == PolyBase::P9) return {{1, 0, 2, 3, 4, 5, 6, 7, 8}, 0x001};
  return {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 0x000};
}

Diagram build_polyhedron(PolyBase base, const std::vector<Tangle>& slots) {
  const PolyConfig& cfg = poly_config(base);
  PolyLayout layout{cfg.slot_vertex, 0};
  if (!cfg.flip.empty())
    for (int v = 0; v < (int)cfg.flip.size(); ++v)
      if (cfg.flip[v]) layout.flip_mask |= 1u << v;
  return build_polyhedron(base, slots, layout);
}

Diagram build_polyhedron(PolyBase base, const std::vector<Tangle>& slots,
                         const PolyLayout& layout) {
  const PolyConfig& cfg = poly_config(base);
  const PolyTemplate& tpl = poly_template(base, cfg.reflect);
  if ((int)slots.size() != tpl.V)
    throw DiagramError("polyhedron slot count mismatch");

  // 2-color the template's faces
  std::vector<int> face_of(4 * tpl.V, -1);
  int nfaces = 0;
  for (int p0 = 0; p0 < 4 * tpl.V; ++p0) {
    if (face_of[p0] >= 0) continue;
    int id = nfaces++;
    int p = p0;
    while (face_of[p] < 0) {
      face_of[p] = id;
      auto [v, j] = tpl.adj[p / 4][p % 4];
      p = 4 * v + (j + 1) % 4;
    }
  }
  if (nfaces != tpl.V + 2)
    throw DiagramError("polyhedron template is not planar");
  std::vector<int> fcolor(nfaces, -1);
  fcolor[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4 * tpl.V; ++p) {
      if (face_of[p] != f) continue;
      auto [v, j] = tpl.adj[p / 4][p % 4];
      int g = face_of[4 * v + j];
      if (fcolor[g] < 0) {
        fcolor[g] = fcolor[f] ^ 1;
        stack.push_back(g);
      } else if (fcolor[g] == fcolor[f]) {
        throw DiagramError("template faces not 2-colorable");
      }
    }
  }
  // quadrant color after position j of vertex v
  auto qcolor = [&](int v, int j) { return fcolor[face_of[4 * v + (j + 1) % 4]]; };

  // Rotation offset per vertex: corner ccw[(j + o) % 4] of the slot tangle
  // lands on template position j, with ccw = NW, SW, SE, NE. Choose o so that
  // a unit positive crossing has its over-strand quadrants in color class
  // cfg.color_bit, which makes every all-positive fill alternating.
  int h = conventions().positive_over_axis;
  std::vector<int> offset(tpl.V, 0);
  for (int v = 0; v < tpl.V; ++v) {
    int parity_x = (qcolor(v, 0) == (int)cfg.color_bit) ? 0 : 1;
    if (qcolor(v, parity_x) != (int)cfg.color_bit)
      throw DiagramError("template quadrant coloring inconsistent");
    offset[v] = (parity_x + h) % 2;
    if (!cfg.rot.empty()) offset[v] = (offset[v] + cfg.rot[v]) % 4;
  }

  static constexpr int ccw_order[4] = {CornerNW, CornerSW, CornerSE, CornerNE};
  static constexpr int cw_order[4] = {CornerNW, CornerNE, CornerSE, CornerSW};
  const int* ccw = cfg.fill_cw ? cw_order : ccw_order;
  // symbol slot -> vertex mapping
  std::vector<int> tangle_at(tpl.V, -1);
  for (int i = 0; i < tpl.V; ++i) {
    int v = layout.place[i];
    if (v < 0 || v >= tpl.V || tangle_at[v] >= 0)
      throw DiagramError("bad slot-vertex table");
    tangle_at[v] = i;
  }

  // a set flip bit means the slot frame at v is transposed
  std::vector<Tangle> parts;
  for (int v = 0; v < tpl.V; ++v) {
    Tangle t = slots[tangle_at[v]];
    if (layout.flip_mask >> v & 1) t = transpose(t);
    parts.push_back(std::move(t));
  }

  std::vector<std::pair<CornerRef, CornerRef>> joins;
  for (int v = 0; v < tpl.V; ++v)
    for (int j = 0; j < 4; ++j) {
      auto [w, k] = tpl.adj[v][j];
      if (std::make_pair(v, j) < std::make_pair(w, k)) {
        CornerRef a{v, ccw[(j + offset[v]) % 4]};
        CornerRef b{w, ccw[(k + offset[w]) % 4]};
        joins.push_back({a, b});
      }
    }
  return splice_closed(parts, joins);
}

}  // namespace knotforge
