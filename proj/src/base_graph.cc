// Copyright 2026 The dimercluster Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimercluster/base_graph.h"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

#include "dimercluster/errors.h"

namespace dimercluster {
namespace {

enum class Step { kEast, kNorth };

// +1 if the chain edge {a, a+1} is oriented a -> a+1, otherwise -1.
int chain_direction(const Quiver& q, int a) {
  return q.has_arrow(a, a + 1) ? 1 : -1;
}

HalfPoint unit(int x, int y) { return {2 * x, 2 * y}; }
HalfPoint add(HalfPoint p, HalfPoint o) { return {p.x2 + o.x2, p.y2 + o.y2}; }

long long twice_signed_area(const std::vector<HalfPoint>& poly) {
  long long s = 0;
  for (size_t k = 0; k < poly.size(); ++k) {
    const HalfPoint& p = poly[k];
    const HalfPoint& r = poly[(k + 1) % poly.size()];
    s += static_cast<long long>(p.x2) * r.y2 -
         static_cast<long long>(r.x2) * p.y2;
  }
  return s;
}

// Hexagon for a tile glued on the East side of the cell whose lower-right
// corner is the origin, listed clockwise from that corner; side k joins
// vertex k to vertex k+1, side 0 is the glued side.
constexpr std::array<std::array<int, 2>, 6> kHexEast = {
    {{0, 0}, {0, 2}, {2, 4}, {4, 2}, {4, 0}, {2, -2}}};
// Outward offsets (half units) for the square hung on each hexagon side.
// Side 5 is sheared so that it stays clear of the snake below the hexagon.
constexpr std::array<std::array<int, 2>, 6> kOffsetEast = {
    {{-2, 0}, {-2, 2}, {2, 2}, {2, 0}, {2, -2}, {1, -2}}};

std::vector<HalfPoint> square_cell(int a, int b) {
  return {unit(a, b), unit(a, b + 1), unit(a + 1, b + 1), unit(a + 1, b)};
}

struct Geometry {
  std::vector<std::vector<HalfPoint>> tiles;
};

Geometry layout(const Quiver& q) {
  const int n = q.n;
  const int hex = n - 3;
  Geometry geo;
  geo.tiles.resize(n);

  // Steps from tile k-1 to tile k for k = 1..n-3 (the last one glues the
  // hexagon onto tile n-4).
  std::vector<Step> step(n - 2, Step::kEast);
  for (int k = 2; k <= hex; ++k) {
    bool zigzag = chain_direction(q, k - 2) == chain_direction(q, k - 1);
    if (zigzag) {
      step[k] = step[k - 1] == Step::kEast ? Step::kNorth : Step::kEast;
    } else {
      step[k] = step[k - 1];
    }
  }
  int a = 0, b = 0;
  geo.tiles[0] = square_cell(a, b);
  for (int k = 1; k <= n - 4; ++k) {
    if (step[k] == Step::kEast) {
      ++a;
    } else {
      ++b;
    }
    geo.tiles[k] = square_cell(a, b);
  }

  // Hexagon vertices and side offsets. The North gluing is the mirror image
  // of the East one in the diagonal through the cell's lower-left corner;
  // the mirror reverses orientation, so indices are reversed to stay
  // clockwise.
  std::array<HalfPoint, 6> h;
  std::array<HalfPoint, 6> off;
  const HalfPoint corner_se = unit(a + 1, b);
  for (int k = 0; k < 6; ++k) {
    if (step[hex] == Step::kEast) {
      h[k] = add(corner_se, {kHexEast[k][0], kHexEast[k][1]});
      off[k] = {kOffsetEast[k][0], kOffsetEast[k][1]};
    } else {
      const auto& p = kHexEast[(7 - k) % 6];
      HalfPoint east = add(corner_se, {p[0], p[1]});
      h[k] = {2 * a + (east.y2 - 2 * b), 2 * b + (east.x2 - 2 * a)};
      const auto& o = kOffsetEast[(6 - k) % 6];
      off[k] = {o[1], o[0]};
    }
  }
  geo.tiles[hex].assign(h.begin(), h.end());

  // Side 0 is bw-cw for the hexagon iff the hexagon is the arrow tail.
  const bool side0_bw = q.has_arrow(hex, n - 4);
  auto pick_side = [&](int t, int even_side, int odd_side) {
    const bool need_bw = q.has_arrow(hex, t);
    return need_bw == side0_bw ? even_side : odd_side;
  };
  const int side_upper = pick_side(n - 2, 2, 1);
  const int side_lower = pick_side(n - 1, 4, 5);
  for (auto [t, k] : {std::pair{n - 2, side_upper}, {n - 1, side_lower}}) {
    HalfPoint p = h[k], r = h[(k + 1) % 6];
    geo.tiles[t] = {r, p, add(p, off[k]), add(r, off[k])};
  }
  for (const auto& poly : geo.tiles) {
    if (twice_signed_area(poly) >= 0) {
      throw InternalError("tile polygon is not clockwise");
    }
  }
  return geo;
}

}  // namespace

const char* to_string(Color c) {
  return c == Color::kBlack ? "black" : "white";
}

const char* to_string(EdgeClass c) {
  return c == EdgeClass::kBwCw ? "bw-cw" : "wb-cw";
}

const char* to_string(NodeSet::GreenCase c) {
  switch (c) {
    case NodeSet::GreenCase::kAbsent:
      return "absent";
    case NodeSet::GreenCase::kCase1:
      return "case1";
    case NodeSet::GreenCase::kCase2a:
      return "case2a";
    case NodeSet::GreenCase::kCase2b:
      return "case2b";
  }
  return "?";
}

BaseGraph::BaseGraph(Quiver q, std::vector<Tile> tiles,
                     std::vector<Vertex> vertices, std::vector<Edge> edges)
    : quiver_(std::move(q)),
      tiles_(std::move(tiles)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  tiles_at_.assign(vertices_.size(), {});
  edges_at_.assign(vertices_.size(), {});
  for (const Tile& t : tiles_) {
    for (int v : t.vertices) tiles_at_[v].push_back(t.id);
  }
  for (const Edge& e : edges_) {
    edges_at_[e.v1].push_back(e.id);
    edges_at_[e.v2].push_back(e.id);
  }
}

EdgeClass BaseGraph::edge_class(int e, int t) const {
  for (const EdgeSide& s : edges_.at(e).sides) {
    if (s.tile == t) return s.cls;
  }
  throw InternalError("edge " + std::to_string(e) + " is not on tile " +
                      std::to_string(t));
}

std::optional<int> BaseGraph::shared_edge(int a, int b) const {
  for (int e : tiles_.at(a).edges) {
    for (const EdgeSide& s : edges_[e].sides) {
      if (s.tile == b) return e;
    }
  }
  return std::nullopt;
}

bool BaseGraph::tile_has_vertex(int t, int v) const {
  const auto& vs = tiles_.at(t).vertices;
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

BaseGraph build_base_graph(const Quiver& q) {
  const Geometry geo = layout(q);
  const int n = q.n;

  std::map<HalfPoint, int> vertex_ids;
  std::vector<Vertex> vertices;
  std::vector<Tile> tiles(n);
  for (int t = 0; t < n; ++t) {
    tiles[t].id = t;
    tiles[t].hexagon = (t == n - 3);
    for (const HalfPoint& p : geo.tiles[t]) {
      auto [it, inserted] =
          vertex_ids.try_emplace(p, static_cast<int>(vertices.size()));
      if (inserted) vertices.push_back({it->second, Color::kBlack, p});
      tiles[t].vertices.push_back(it->second);
    }
  }

  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<Edge> edges;
  for (Tile& t : tiles) {
    const int m = static_cast<int>(t.vertices.size());
    for (int k = 0; k < m; ++k) {
      int u = t.vertices[k], v = t.vertices[(k + 1) % m];
      auto key = ordered_pair(u, v);
      auto [it, inserted] =
          edge_ids.try_emplace(key, static_cast<int>(edges.size()));
      if (inserted) edges.push_back({it->second, key.first, key.second, {}});
      edges[it->second].sides.push_back({t.id, EdgeClass::kBwCw});
      t.edges.push_back(it->second);
    }
  }

  // Two-color by breadth-first search, then fix the global choice with the
  // first arrow.
  std::vector<int> color(vertices.size(), -1);
  std::vector<std::vector<int>> adj(vertices.size());
  for (const Edge& e : edges) {
    adj[e.v1].push_back(e.v2);
    adj[e.v2].push_back(e.v1);
  }
  std::deque<int> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        throw InternalError("base graph is not bipartite");
      }
    }
  }
  auto clockwise_start = [&](int t, int e) {
    const Tile& tile = tiles[t];
    for (size_t k = 0; k < tile.edges.size(); ++k) {
      if (tile.edges[k] == e) return tile.vertices[k];
    }
    throw InternalError("edge missing from tile");
  };
  auto find_shared = [&](int a, int b) {
    for (int e : tiles[a].edges) {
      for (const EdgeSide& s : edges[e].sides) {
        if (s.tile == b) return e;
      }
    }
    throw InternalError("Dynkin neighbours " + std::to_string(a) + "," +
                        std::to_string(b) + " share no edge");
  };
  {
    auto [tail, head] = q.arrows.front();
    int start = clockwise_start(tail, find_shared(tail, head));
    if (color[start] != 0) {
      for (int& c : color) c = 1 - c;
    }
  }
  for (Vertex& v : vertices) {
    v.color = color[v.id] == 0 ? Color::kBlack : Color::kWhite;
  }
  for (const Tile& t : tiles) {
    for (size_t k = 0; k < t.edges.size(); ++k) {
      Edge& e = edges[t.edges[k]];
      for (EdgeSide& s : e.sides) {
        if (s.tile != t.id) continue;
        s.cls = color[t.vertices[k]] == 0 ? EdgeClass::kBwCw
                                          : EdgeClass::kWbCw;
      }
    }
  }

  BaseGraph g(q, std::move(tiles), std::move(vertices), std::move(edges));

  // Construction checks: interior edges join Dynkin neighbours exactly once
  // and every arrow sees white on the right.
  int interior = 0;
  for (const Edge& e : g.edges()) {
    if (e.sides.size() > 2) throw InternalError("edge on three tiles");
    if (e.sides.size() != 2) continue;
    ++interior;
    auto key = ordered_pair(e.sides[0].tile, e.sides[1].tile);
    const auto dyn = dynkin_edges(n);
    if (std::find(dyn.begin(), dyn.end(), key) == dyn.end()) {
      throw InternalError("tiles that are not Dynkin neighbours share an edge");
    }
  }
  if (interior != n - 1) throw InternalError("wrong number of shared edges");
  for (auto [tail, head] : q.arrows) {
    int e = *g.shared_edge(tail, head);
    if (g.edge_class(e, tail) != EdgeClass::kBwCw ||
        g.edge_class(e, head) != EdgeClass::kWbCw) {
      throw InternalError("arrow does not see white on the right");
    }
  }
  return g;
}

NodeSet place_nodes(const BaseGraph& g, const Root& d) {
  const int n = g.n();
  const int hex = n - 3;
  auto outside = [&](int t, int avoid) {
    std::vector<int> vs;
    for (int v : g.tile(t).vertices) {
      if (!g.tile_has_vertex(avoid, v)) vs.push_back(v);
    }
    if (vs.size() != 2) throw InternalError("expected two outer vertices");
    return std::pair{vs[0], vs[1]};
  };
  NodeSet nodes;
  nodes.red = outside(n - 1, hex);
  nodes.blue = outside(n - 2, hex);

  int j = -1;
  for (int i = 0; i < n; ++i) {
    if (d.at(i) == 2) {
      j = i;
      break;
    }
  }
  if (j < 0) return nodes;
  if (j == 1) {
    nodes.green = outside(0, 1);
    nodes.green_case = NodeSet::GreenCase::kCase1;
    return nodes;
  }
  if (j < 1) throw InternalError("2-block cannot start at vertex 0");
  const Quiver& q = g.quiver();
  const bool zigzag = chain_direction(q, j - 2) == chain_direction(q, j - 1);
  if (!zigzag) {
    nodes.green = outside(j - 1, j);
    nodes.green_case = NodeSet::GreenCase::kCase2a;
    return nodes;
  }
  const Edge& e = g.edge(*g.shared_edge(j - 2, j - 1));
  // y: endpoint of the (j-2, j-1) edge away from tile j; z: its diagonal.
  const int y = g.tile_has_vertex(j, e.v1) ? e.v2 : e.v1;
  const auto& around = g.tile(j - 2).vertices;
  const int pos = static_cast<int>(
      std::find(around.begin(), around.end(), y) - around.begin());
  const int z = around[(pos + 2) % around.size()];
  nodes.green = std::pair{y, z};
  nodes.green_case = NodeSet::GreenCase::kCase2b;
  return nodes;
}

bool MixedDimer::has_negative() const {
  return std::any_of(mult.begin(), mult.end(), [](int m) { return m < 0; });
}

MixedDimer minimal_matching(const BaseGraph& g, const Root& d) {
  require_positive_root(d, g.n());
  MixedDimer m{std::vector<int>(g.num_edges(), 0)};
  for (int level = 1; level <= 2; ++level) {
    for (const Tile& t : g.tiles()) {
      if (d[t.id] < level) continue;
      for (int e : t.edges) {
        if (g.edge_class(e, t.id) != EdgeClass::kBwCw) continue;
        bool on_region_boundary = true;
        for (const EdgeSide& s : g.edge(e).sides) {
          if (s.tile != t.id && d[s.tile] >= level) on_region_boundary = false;
        }
        if (on_region_boundary) ++m.mult[e];
      }
    }
  }
  return m;
}

GEdgeWeights g_edge_weights(const BaseGraph& g) {
  GEdgeWeights w{std::vector<int>(g.num_edges(), -1)};
  const Quiver& q = g.quiver();
  for (const Tile& t : g.tiles()) {
    std::vector<int> neighbours;
    for (auto [a, b] : q.arrows) {
      if (a == t.id) neighbours.push_back(b);
      if (b == t.id) neighbours.push_back(a);
    }
    std::sort(neighbours.begin(), neighbours.end());
    const int m = static_cast<int>(t.edges.size());
    const int first = *g.shared_edge(t.id, neighbours.front());
    const int start = static_cast<int>(
        std::find(t.edges.begin(), t.edges.end(), first) - t.edges.begin());
    for (int i : neighbours) {
      const EdgeClass wanted =
          q.has_arrow(i, t.id) ? EdgeClass::kBwCw : EdgeClass::kWbCw;
      bool placed = false;
      for (int k = 0; k < m && !placed; ++k) {
        int e = t.edges[(start + k) % m];
        if (g.edge(e).is_boundary() && w.weight[e] < 0 &&
            g.edge_class(e, t.id) == wanted) {
          w.weight[e] = i;
          placed = true;
        }
      }
      if (!placed) {
        throw InternalError("tile " + std::to_string(t.id) +
                            " has no free boundary edge of class " +
                            to_string(wanted));
      }
    }
  }
  return w;
}

}  // namespace dimercluster
