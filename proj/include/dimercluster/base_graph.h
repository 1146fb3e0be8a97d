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

#ifndef DIMERCLUSTER_BASE_GRAPH_H_
#define DIMERCLUSTER_BASE_GRAPH_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimercluster/quiver.h"

namespace dimercluster {

enum class Color { kBlack, kWhite };

// Orientation of an edge relative to a tile: black-to-white or
// white-to-black when the tile boundary is traversed clockwise.
enum class EdgeClass { kBwCw, kWbCw };

const char* to_string(Color c);
const char* to_string(EdgeClass c);

// A planar point with coordinates in half units: (x2 / 2, y2 / 2).
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;
  double x() const { return x2 / 2.0; }
  double y() const { return y2 / 2.0; }
  friend auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

struct Vertex {
  int id = 0;
  Color color = Color::kBlack;
  HalfPoint pos;
};

struct EdgeSide {
  int tile = 0;
  EdgeClass cls = EdgeClass::kBwCw;
};

struct Edge {
  int id = 0;
  int v1 = 0;
  int v2 = 0;
  std::vector<EdgeSide> sides;  // one entry per incident tile

  bool is_boundary() const { return sides.size() == 1; }
  int other(int v) const { return v == v1 ? v2 : v1; }
};

struct Tile {
  int id = 0;
  bool hexagon = false;
  std::vector<int> vertices;  // clockwise
  std::vector<int> edges;     // edges[k] joins vertices[k] and vertices[k+1]
};

class BaseGraph {
 public:
  BaseGraph(Quiver q, std::vector<Tile> tiles, std::vector<Vertex> vertices,
            std::vector<Edge> edges);

  const Quiver& quiver() const { return quiver_; }
  int n() const { return quiver_.n; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Tile& tile(int t) const { return tiles_.at(t); }
  const Edge& edge(int e) const { return edges_.at(e); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }

  // Class of edge e with respect to tile t; e must lie on t.
  EdgeClass edge_class(int e, int t) const;
  // The edge shared by tiles a and b, if any.
  std::optional<int> shared_edge(int a, int b) const;
  // Tiles containing vertex v.
  const std::vector<int>& tiles_at(int v) const { return tiles_at_.at(v); }
  // Edges incident to vertex v.
  const std::vector<int>& edges_at(int v) const { return edges_at_.at(v); }
  bool tile_has_vertex(int t, int v) const;

 private:
  Quiver quiver_;
  std::vector<Tile> tiles_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> tiles_at_;
  std::vector<std::vector<int>> edges_at_;
};

// Builds the hexagon-square graph: tiles 0..n-4 form a snake of unit
// squares starting East from the origin, tile n-3 is a hexagon glued to
// tile n-4 and tiles n-2, n-1 hang off the hexagon. Coloring follows the
// "white on the right" rule: for each arrow i -> j the shared edge is
// black-to-white clockwise on tile i.
BaseGraph build_base_graph(const Quiver& q);

struct NodeSet {
  enum class GreenCase { kAbsent, kCase1, kCase2a, kCase2b };
  std::pair<int, int> red;
  std::pair<int, int> blue;
  std::optional<std::pair<int, int>> green;
  GreenCase green_case = GreenCase::kAbsent;
};

const char* to_string(NodeSet::GreenCase c);

// Red and blue pairs are the outer vertices of tiles n-1 and n-2. Green is
// placed from j, the smallest index with d_j = 2.
NodeSet place_nodes(const BaseGraph& g, const Root& d);

// A multiset of edges; mult[e] may be negative only in antiedge mode.
struct MixedDimer {
  std::vector<int> mult;

  bool has_negative() const;
  friend bool operator==(const MixedDimer&, const MixedDimer&) = default;
};

// M_1 + M_2: clockwise black-to-white boundary edges of the support of d and
// of its 2-block. Throws SemanticError if d is not a positive root.
MixedDimer minimal_matching(const BaseGraph& g, const Root& d);

// weight[e] is the index k of the variable x_k carried by edge e, or -1.
struct GEdgeWeights {
  std::vector<int> weight;
};

GEdgeWeights g_edge_weights(const BaseGraph& g);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_BASE_GRAPH_H_
