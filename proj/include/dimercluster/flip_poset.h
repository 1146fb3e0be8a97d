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

#ifndef DIMERCLUSTER_FLIP_POSET_H_
#define DIMERCLUSTER_FLIP_POSET_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimercluster/mixed_dimer.h"

namespace dimercluster {

struct PosetElement {
  EVector e;
  MixedDimer config;
  int cycles = 0;
  int rank = 0;
};

struct FlipPoset {
  std::vector<PosetElement> elements;       // breadth-first order, 0 = M_-
  std::vector<std::pair<int, int>> covers;  // (lower, upper)

  // reach[a][b] is true iff a <= b.
  std::vector<std::vector<char>> order() const;
  std::optional<int> find(const EVector& e) const;
};

// Breadth-first closure of M_- under allowable flips. Node-polychromatic
// configurations are dropped and never expanded.
FlipPoset build_poset(const BaseGraph& g, const Root& d, const NodeSet& nodes);

struct LatticeReport {
  bool is_lattice = false;
  // Set when some pair lacks a meet or a join.
  std::optional<std::pair<int, int>> offending_pair;
  bool distributive = false;
  // "N5" or "M3" with five element indices: bottom, the three middle
  // elements (for N5: a < b, then c), top.
  std::string witness_kind;
  std::vector<int> witness;
};

LatticeReport is_distributive(const FlipPoset& p);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_FLIP_POSET_H_
