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
#include <set>

#include "gtest/gtest.h"
#include "dimercluster/mixed_dimer.h"
#include "test_support.h"

namespace dimercluster {
namespace {

using ::dimercluster::testing::kD6Quiver;
using ::dimercluster::testing::kD6Root;
using ::dimercluster::testing::kD6WeightQuiver;

class AllOrientationsTest : public ::testing::TestWithParam<int> {};

TEST_P(AllOrientationsTest, PlanarBipartiteTiling) {
  const int n = GetParam();
  for (const Quiver& q : enumerate_orientations(n)) {
    SCOPED_TRACE(q.to_string());
    const BaseGraph g = build_base_graph(q);
    ASSERT_EQ(static_cast<int>(g.tiles().size()), n);
    // Euler's formula for a disc tiled by n faces.
    EXPECT_EQ(g.num_vertices() - g.num_edges() + n, 1);
    for (const Tile& t : g.tiles()) {
      EXPECT_EQ(t.hexagon, t.id == n - 3);
      EXPECT_EQ(t.vertices.size(), t.hexagon ? 6u : 4u);
      EXPECT_EQ(t.edges.size(), t.vertices.size());
    }
    for (const Edge& e : g.edges()) {
      EXPECT_NE(g.vertices()[e.v1].color, g.vertices()[e.v2].color);
    }
  }
}

TEST_P(AllOrientationsTest, SharedEdgesFollowTheQuiver) {
  const int n = GetParam();
  for (const Quiver& q : enumerate_orientations(n)) {
    SCOPED_TRACE(q.to_string());
    const BaseGraph g = build_base_graph(q);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const auto dyn = dynkin_edges(n);
        const bool adjacent =
            std::find(dyn.begin(), dyn.end(), std::pair(a, b)) != dyn.end();
        EXPECT_EQ(g.shared_edge(a, b).has_value(), adjacent);
      }
    }
    // Across each arrow, white sits on the right.
    for (auto [tail, head] : q.arrows) {
      const int e = *g.shared_edge(tail, head);
      EXPECT_EQ(g.edge_class(e, tail), EdgeClass::kBwCw);
      EXPECT_EQ(g.edge_class(e, head), EdgeClass::kWbCw);
    }
    // Colors alternate around every tile, so the two classes alternate too.
    for (const Tile& t : g.tiles()) {
      for (size_t k = 0; k < t.edges.size(); ++k) {
        EXPECT_NE(g.edge_class(t.edges[k], t.id),
                  g.edge_class(t.edges[(k + 1) % t.edges.size()], t.id));
      }
    }
  }
}

TEST_P(AllOrientationsTest, MinimalMatchingSatisfiesValences) {
  const int n = GetParam();
  for (const Quiver& q : enumerate_orientations(n)) {
    const BaseGraph g = build_base_graph(q);
    for (const Root& d : positive_roots(n)) {
      EXPECT_TRUE(valence_check(g, d, minimal_matching(g, d)))
          << q.to_string() << " " << format_vector(d);
    }
  }
}

TEST_P(AllOrientationsTest, NodesSitOnTheirTiles) {
  const int n = GetParam();
  for (const Quiver& q : enumerate_orientations(n)) {
    const BaseGraph g = build_base_graph(q);
    for (const Root& d : positive_roots(n)) {
      const NodeSet nodes = place_nodes(g, d);
      for (int v : {nodes.red.first, nodes.red.second}) {
        EXPECT_TRUE(g.tile_has_vertex(n - 1, v));
        EXPECT_FALSE(g.tile_has_vertex(n - 3, v));
      }
      for (int v : {nodes.blue.first, nodes.blue.second}) {
        EXPECT_TRUE(g.tile_has_vertex(n - 2, v));
        EXPECT_FALSE(g.tile_has_vertex(n - 3, v));
      }
      const bool has_two = std::count(d.begin(), d.end(), 2) > 0;
      EXPECT_EQ(nodes.green.has_value(), has_two);
      if (nodes.green) {
        std::set<int> all = {nodes.red.first, nodes.red.second, nodes.blue.first,
                             nodes.blue.second, nodes.green->first,
                             nodes.green->second};
        EXPECT_EQ(all.size(), 6u);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallRanks, AllOrientationsTest, ::testing::Values(4, 5, 6, 7));

TEST(BaseGraphTest, SevenTileExample) {
  const BaseGraph g = build_base_graph(parse_quiver("n=7; 0>1,2>1,3>2,3>4,5>4,4>6"));
  EXPECT_EQ(g.num_edges() - g.num_vertices(), 6);
  EXPECT_TRUE(g.tile(4).hexagon);
}

TEST(PlaceNodesTest, GreenCases) {
  const BaseGraph zig = build_base_graph(parse_quiver(kD6Quiver));
  EXPECT_EQ(place_nodes(zig, kD6Root).green_case, NodeSet::GreenCase::kCase2b);
  EXPECT_EQ(place_nodes(zig, {0, 0, 0, 1, 1, 0}).green_case,
            NodeSet::GreenCase::kAbsent);
  EXPECT_EQ(place_nodes(zig, {1, 2, 2, 2, 1, 1}).green_case,
            NodeSet::GreenCase::kCase1);
  const BaseGraph straight = build_base_graph(parse_quiver(kD6WeightQuiver));
  EXPECT_EQ(place_nodes(straight, kD6Root).green_case, NodeSet::GreenCase::kCase2a);
}

TEST(PlaceNodesTest, ZigzagGreenPairIsADiagonalOfTheEarlierTile) {
  const BaseGraph g = build_base_graph(parse_quiver(kD6Quiver));
  const NodeSet nodes = place_nodes(g, kD6Root);
  const auto [y, z] = *nodes.green;
  EXPECT_TRUE(g.tile_has_vertex(0, y));
  EXPECT_TRUE(g.tile_has_vertex(1, y));
  EXPECT_FALSE(g.tile_has_vertex(2, y));
  EXPECT_TRUE(g.tile_has_vertex(0, z));
  EXPECT_EQ(g.vertices()[y].color, g.vertices()[z].color);
}

TEST(MinimalMatchingTest, SingleTileUsesItsBlackToWhiteEdges) {
  const BaseGraph g = build_base_graph(parse_quiver("n=4; 1>0,1>2,1>3"));
  const MixedDimer m = minimal_matching(g, {0, 1, 0, 0});
  int total = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    total += m.mult[e];
    if (m.mult[e]) EXPECT_EQ(g.edge_class(e, 1), EdgeClass::kBwCw);
  }
  EXPECT_EQ(total, 3);
}

TEST(GEdgeWeightsTest, EachNeighbourWeighsOneEdge) {
  for (const Quiver& q : enumerate_orientations(5)) {
    const BaseGraph g = build_base_graph(q);
    const GEdgeWeights w = g_edge_weights(g);
    std::vector<int> per_tile_total(q.n, 0);
    for (const Edge& e : g.edges()) {
      if (w.weight[e.id] < 0) continue;
      EXPECT_TRUE(e.is_boundary());
      EXPECT_TRUE(g.shared_edge(e.sides[0].tile, w.weight[e.id]).has_value());
      ++per_tile_total[e.sides[0].tile];
    }
    for (int t = 0; t < q.n; ++t) {
      int degree = 0;
      for (auto [a, b] : q.arrows) degree += a == t || b == t;
      EXPECT_EQ(per_tile_total[t], degree) << q.to_string() << " tile " << t;
    }
  }
}

}  // namespace
}  // namespace dimercluster
