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

#ifndef DIMERCLUSTER_MIXED_DIMER_H_
#define DIMERCLUSTER_MIXED_DIMER_H_

#include <vector>

#include "dimercluster/base_graph.h"

namespace dimercluster {

using EVector = IntVector;

// Vertex valence: the sum of incident multiplicities.
std::vector<int> valences(const BaseGraph& g, const MixedDimer& m);

// Every valence is at most 2, exactly 2 at vertices of tiles with d_i = 2 and
// at least 1 at vertices of tiles with d_i = 1.
bool valence_check(const BaseGraph& g, const Root& d, const MixedDimer& m);

// Tiles whose bw-cw edges all have multiplicity at least 1.
std::vector<int> allowable_flips(const BaseGraph& g, const MixedDimer& m);

enum class FlipMode {
  kChecked,   // reject a flip that would drive a multiplicity below zero
  kAntiedge,  // allow negative multiplicities
};

// Decrements the bw-cw edges of tile t and increments its wb-cw edges.
// Throws SemanticError in checked mode if a multiplicity would turn negative.
MixedDimer flip(const BaseGraph& g, const MixedDimer& m, int t,
                FlipMode mode = FlipMode::kChecked);

// Inverse of flip.
MixedDimer unflip(const BaseGraph& g, const MixedDimer& m, int t);

// No connected component of the edges with multiplicity >= 1 contains nodes
// of two different colors.
bool is_node_monochromatic(const BaseGraph& g, const NodeSet& nodes,
                           const MixedDimer& m);

// Number of simple cycles of length >= 4, assuming valence <= 2.
int count_cycles(const BaseGraph& g, const MixedDimer& m);

// Closed-form multiplicities for e: an interior edge on arrow i -> j gets
// max(d_i - d_j, 0) + e_j - e_i; a boundary edge of tile i gets d_i - e_i if
// bw-cw and e_i if wb-cw. Entries may be negative when e is not acceptable.
// Throws SemanticError when e leaves the box [0, d].
MixedDimer config_from_e(const BaseGraph& g, const Root& d, const EVector& e);

// The weighted-flip procedure: from M_-, flip tile i e_i times for each i in
// increasing order, allowing antiedges.
MixedDimer config_from_e_by_flips(const BaseGraph& g, const Root& d,
                                  const EVector& e);

// Tiles enclosed by a simple cycle given as a set of edges (entries > 0).
std::vector<int> enclosed_tiles(const BaseGraph& g,
                                const std::vector<int>& cycle_edges);

// Recovers e by superimposing m on M_- and peeling longest cycles; each
// peeled cycle adds one to every tile it encloses. Ties go to the
// lexicographically smallest enclosed-tile set. Throws SemanticError if the
// peeling stalls, which means m is not in the flip poset.
struct PeeledCycle {
  std::vector<int> edges;  // edge ids in the cycle
  std::vector<int> tiles;  // enclosed tiles
};

// Superimposes m with M_- and repeatedly removes a longest cycle (ties go to
// the lexicographically smallest enclosed tile set). Throws SemanticError if
// anything but doubled edges remains.
std::vector<PeeledCycle> peel_cycles(const BaseGraph& g, const Root& d,
                                     const MixedDimer& m);

EVector e_from_config(const BaseGraph& g, const Root& d, const MixedDimer& m);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_MIXED_DIMER_H_
