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

#include "gtest/gtest.h"
#include "dimercluster/errors.h"
#include "dimercluster/tran.h"
#include "test_support.h"

namespace dimercluster {
namespace {

using ::dimercluster::testing::kD6Quiver;
using ::dimercluster::testing::kD6Root;
using ::dimercluster::testing::kD6WeightQuiver;

class D6Test : public ::testing::Test {
 protected:
  const Quiver q_ = parse_quiver(kD6Quiver);
  const BaseGraph g_ = build_base_graph(q_);
  const MixedDimer minimal_ = minimal_matching(g_, kD6Root);
  const NodeSet nodes_ = place_nodes(g_, kD6Root);
};

TEST_F(D6Test, FlippableTilesOfMinimalMatching) {
  EXPECT_EQ(allowable_flips(g_, minimal_), std::vector<int>({0, 2, 5}));
  EXPECT_THROW(flip(g_, minimal_, 3), SemanticError);
}

TEST_F(D6Test, FlipThenUnflipIsIdentity) {
  const MixedDimer m = flip(g_, minimal_, 2);
  EXPECT_TRUE(valence_check(g_, kD6Root, m));
  EXPECT_EQ(unflip(g_, m, 2), minimal_);
  const MixedDimer anti = flip(g_, minimal_, 3, FlipMode::kAntiedge);
  EXPECT_TRUE(anti.has_negative());
  EXPECT_EQ(unflip(g_, anti, 3), minimal_);
}

TEST_F(D6Test, FlippingTheHexagonAfterTileTwoJoinsNodeColors) {
  const MixedDimer after2 = flip(g_, minimal_, 2);
  EXPECT_TRUE(is_node_monochromatic(g_, nodes_, after2));
  const auto flippable = allowable_flips(g_, after2);
  ASSERT_NE(std::find(flippable.begin(), flippable.end(), 3), flippable.end());
  const MixedDimer after23 = flip(g_, after2, 3);
  EXPECT_FALSE(is_node_monochromatic(g_, nodes_, after23));
  EXPECT_EQ(after23, config_from_e(g_, kD6Root, {0, 0, 1, 1, 0, 0}));
}

TEST_F(D6Test, MinimalMatchingHasNoCycles) {
  EXPECT_EQ(count_cycles(g_, minimal_), 0);
  EXPECT_EQ(e_from_config(g_, kD6Root, minimal_), EVector(6, 0));
  EXPECT_EQ(config_from_e(g_, kD6Root, EVector(6, 0)), minimal_);
}

TEST_F(D6Test, ClosedFormRejectsVectorsOutsideTheBox) {
  EXPECT_THROW(config_from_e(g_, kD6Root, {2, 0, 0, 0, 0, 0}), SemanticError);
  EXPECT_THROW(config_from_e(g_, kD6Root, {0, 0, 0}), SemanticError);
}

TEST_F(D6Test, EnclosedTilesOfATileBoundary) {
  for (const Tile& t : g_.tiles()) {
    std::vector<int> marks(g_.num_edges(), 0);
    for (int e : t.edges) marks[e] = 1;
    EXPECT_EQ(enclosed_tiles(g_, marks), std::vector<int>({t.id}));
  }
}

// The closed-form multiplicities agree with weighted flips on the whole box,
// antiedges included, not only on supported e.
TEST(ConfigFromETest, ClosedFormMatchesWeightedFlipsOnTheWholeBox) {
  for (int n = 4; n <= 5; ++n) {
    for (const Quiver& q : enumerate_orientations(n)) {
      const BaseGraph g = build_base_graph(q);
      for (const Root& d : positive_roots(n)) {
        for (const IntVector& e : box_vectors(d)) {
          ASSERT_EQ(config_from_e(g, d, e), config_from_e_by_flips(g, d, e))
              << q.to_string() << " d=" << format_vector(d) << " e=" << format_vector(e);
        }
      }
    }
  }
}

TEST(PeelCyclesTest, LongestCycleFirst) {
  const Quiver q = parse_quiver(kD6WeightQuiver);
  const BaseGraph g = build_base_graph(q);
  MixedDimer m = minimal_matching(g, kD6Root);
  for (int t : {3, 2, 4, 5, 3}) {
    const auto flippable = allowable_flips(g, m);
    ASSERT_NE(std::find(flippable.begin(), flippable.end(), t), flippable.end())
        << "tile " << t;
    m = flip(g, m, t);
  }
  const EVector e = {0, 0, 1, 2, 1, 1};
  EXPECT_EQ(m, config_from_e(g, kD6Root, e));
  const auto cycles = peel_cycles(g, kD6Root, m);
  ASSERT_FALSE(cycles.empty());
  EXPECT_EQ(cycles[0].edges.size(), 12u);
  EXPECT_EQ(cycles[0].tiles, std::vector<int>({2, 3, 4, 5}));
  EXPECT_EQ(e_from_config(g, kD6Root, m), e);
  EXPECT_EQ(count_cycles(g, m), 1);
}

TEST(PeelCyclesTest, RejectsConfigurationsOutsideThePoset) {
  const BaseGraph g = build_base_graph(parse_quiver("n=4; 1>0,1>2,1>3"));
  const Root d = {1, 1, 1, 1};
  MixedDimer m = minimal_matching(g, d);
  m.mult[0] += 1;
  EXPECT_THROW(e_from_config(g, d, m), SemanticError);
}

}  // namespace
}  // namespace dimercluster
