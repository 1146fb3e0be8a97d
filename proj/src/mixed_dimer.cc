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

#include "dimercluster/mixed_dimer.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dimercluster/errors.h"

namespace dimercluster {

std::vector<int> valences(const BaseGraph& g, const MixedDimer& m) {
  std::vector<int> val(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    val[e.v1] += m.mult[e.id];
    val[e.v2] += m.mult[e.id];
  }
  return val;
}

bool valence_check(const BaseGraph& g, const Root& d, const MixedDimer& m) {
  if (static_cast<int>(m.mult.size()) != g.num_edges() || m.has_negative()) {
    return false;
  }
  const std::vector<int> val = valences(g, m);
  for (const Vertex& v : g.vertices()) {
    int need = 0;
    for (int t : g.tiles_at(v.id)) need = std::max(need, d[t]);
    if (val[v.id] > 2) return false;
    if (need == 2 && val[v.id] != 2) return false;
    if (need == 1 && val[v.id] < 1) return false;
  }
  return true;
}

std::vector<int> allowable_flips(const BaseGraph& g, const MixedDimer& m) {
  std::vector<int> out;
  for (const Tile& t : g.tiles()) {
    bool ok = true;
    for (int e : t.edges) {
      if (g.edge_class(e, t.id) == EdgeClass::kBwCw && m.mult[e] < 1) {
        ok = false;
      }
    }
    if (ok) out.push_back(t.id);
  }
  return out;
}

MixedDimer flip(const BaseGraph& g, const MixedDimer& m, int t,
                FlipMode mode) {
  MixedDimer r = m;
  for (int e : g.tile(t).edges) {
    if (g.edge_class(e, t) == EdgeClass::kBwCw) {
      if (--r.mult[e] < 0 && mode == FlipMode::kChecked) {
        throw SemanticError("tile " + std::to_string(t) +
                            " is not flippable");
      }
    } else {
      ++r.mult[e];
    }
  }
  return r;
}

MixedDimer unflip(const BaseGraph& g, const MixedDimer& m, int t) {
  MixedDimer r = m;
  for (int e : g.tile(t).edges) {
    r.mult[e] += g.edge_class(e, t) == EdgeClass::kBwCw ? 1 : -1;
  }
  return r;
}

namespace {

std::vector<int> component_labels(const BaseGraph& g, const MixedDimer& m) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const Edge& e : g.edges()) {
    if (m.mult[e.id] >= 1) parent[find(e.v1)] = find(e.v2);
  }
  std::vector<int> label(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) label[v] = find(v);
  return label;
}

}  // namespace

bool is_node_monochromatic(const BaseGraph& g, const NodeSet& nodes,
                           const MixedDimer& m) {
  const std::vector<int> comp = component_labels(g, m);
  std::vector<std::pair<int, int>> tagged;  // (component, color)
  auto tag = [&](std::pair<int, int> pair, int color) {
    tagged.emplace_back(comp[pair.first], color);
    tagged.emplace_back(comp[pair.second], color);
  };
  tag(nodes.red, 0);
  tag(nodes.blue, 1);
  if (nodes.green) tag(*nodes.green, 2);
  for (const auto& [c1, col1] : tagged) {
    for (const auto& [c2, col2] : tagged) {
      if (c1 == c2 && col1 != col2) return false;
    }
  }
  return true;
}

int count_cycles(const BaseGraph& g, const MixedDimer& m) {
  const std::vector<int> comp = component_labels(g, m);
  // A component is a cycle of length >= 4 iff it has at least three
  // vertices and as many distinct edges as vertices.
  std::vector<int> vcount(g.num_vertices(), 0), ecount(g.num_vertices(), 0);
  std::vector<int> val = valences(g, m);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (val[v] > 0) ++vcount[comp[v]];
  }
  for (const Edge& e : g.edges()) {
    if (m.mult[e.id] >= 1) ++ecount[comp[e.v1]];
  }
  int cycles = 0;
  for (int c = 0; c < g.num_vertices(); ++c) {
    if (vcount[c] >= 3 && ecount[c] == vcount[c]) ++cycles;
  }
  return cycles;
}

MixedDimer config_from_e(const BaseGraph& g, const Root& d, const EVector& e) {
  const Quiver& q = g.quiver();
  if (static_cast<int>(e.size()) != g.n()) {
    throw SemanticError("e-vector has the wrong length");
  }
  for (int i = 0; i < g.n(); ++i) {
    if (e[i] < 0 || e[i] > d[i]) {
      throw SemanticError("e-vector " + format_vector(e) +
                          " leaves the box [0, d]");
    }
  }
  MixedDimer m{std::vector<int>(g.num_edges(), 0)};
  for (const Edge& edge : g.edges()) {
    if (edge.is_boundary()) {
      const int t = edge.sides[0].tile;
      m.mult[edge.id] =
          edge.sides[0].cls == EdgeClass::kBwCw ? d[t] - e[t] : e[t];
    } else {
      int a = edge.sides[0].tile, b = edge.sides[1].tile;
      if (!q.has_arrow(a, b)) std::swap(a, b);
      m.mult[edge.id] = std::max(d[a] - d[b], 0) + (e[b] - e[a]);
    }
  }
  return m;
}

MixedDimer config_from_e_by_flips(const BaseGraph& g, const Root& d,
                                  const EVector& e) {
  MixedDimer m = minimal_matching(g, d);
  for (int i = 0; i < g.n(); ++i) {
    for (int r = 0; r < e.at(i); ++r) m = flip(g, m, i, FlipMode::kAntiedge);
  }
  return m;
}

std::vector<int> enclosed_tiles(const BaseGraph& g,
                                const std::vector<int>& cycle_edges) {
  // A cycle is the mod-2 sum of the tile boundaries it encloses; each tile
  // has an outer edge, and that edge lies on the cycle iff the tile is
  // enclosed.
  std::vector<char> inside(g.n(), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_boundary() && cycle_edges[e.id] > 0) inside[e.sides[0].tile] = 1;
  }
  for (const Edge& e : g.edges()) {
    int parity = 0;
    for (const EdgeSide& s : e.sides) parity ^= inside[s.tile];
    if (parity != (cycle_edges[e.id] > 0 ? 1 : 0)) {
      throw InternalError("edge set is not a union of tile boundaries");
    }
  }
  std::vector<int> out;
  for (int t = 0; t < g.n(); ++t) {
    if (inside[t]) out.push_back(t);
  }
  return out;
}

namespace {

// Longest simple cycle of length > 2 in the edges with count > 0.
std::optional<PeeledCycle> longest_cycle(const BaseGraph& g,
                                         const std::vector<int>& count) {
  const int nv = g.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (nbr, edge)
  for (const Edge& e : g.edges()) {
    if (count[e.id] > 0) {
      adj[e.v1].emplace_back(e.v2, e.id);
      adj[e.v2].emplace_back(e.v1, e.id);
    }
  }
  std::optional<PeeledCycle> best;
  std::vector<char> on_path(nv, 0);
  std::vector<int> path_edges;
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (auto [w, eid] : adj[v]) {
      if (w == start && path_edges.size() >= 2 &&
          eid != path_edges.back()) {
        path_edges.push_back(eid);
        const size_t len = path_edges.size();
        if (!best || len >= best->edges.size()) {
          std::vector<int> marks(g.num_edges(), 0);
          for (int pe : path_edges) marks[pe] = 1;
          std::vector<int> tiles = enclosed_tiles(g, marks);
          if (!best || len > best->edges.size() || tiles < best->tiles) {
            best = PeeledCycle{path_edges, std::move(tiles)};
          }
        }
        path_edges.pop_back();
        continue;
      }
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path_edges.push_back(eid);
      dfs(start, w);
      path_edges.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < nv; ++s) {
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return best;
}

}  // namespace

std::vector<PeeledCycle> peel_cycles(const BaseGraph& g, const Root& d,
                                     const MixedDimer& m) {
  const MixedDimer base = minimal_matching(g, d);
  std::vector<int> count(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    count[e] = m.mult.at(e) + base.mult[e];
    if (m.mult[e] < 0) throw SemanticError("configuration has antiedges");
  }
  std::vector<PeeledCycle> out;
  while (auto cycle = longest_cycle(g, count)) {
    for (int e : cycle->edges) --count[e];
    out.push_back(std::move(*cycle));
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (count[e] % 2 != 0) {
      throw SemanticError(
          "cycle peeling stalled; configuration is not in the flip poset");
    }
  }
  return out;
}

EVector e_from_config(const BaseGraph& g, const Root& d, const MixedDimer& m) {
  EVector v(g.n(), 0);
  for (const PeeledCycle& c : peel_cycles(g, d, m)) {
    for (int t : c.tiles) ++v[t];
  }
  return v;
}

}  // namespace dimercluster
