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

#ifndef DIMERCLUSTER_QUIVER_H_
#define DIMERCLUSTER_QUIVER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimercluster {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// A positive root in simple-root coordinates.
using Root = IntVector;

inline std::pair<int, int> ordered_pair(int a, int b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

// Undirected edges {i, i+1} for i <= n-4, then {n-3, n-2} and {n-3, n-1}.
// The trivalent vertex is n-3.
std::vector<std::pair<int, int>> dynkin_edges(int n);

// An acyclic orientation of the D_n Dynkin diagram. arrows[k] orients
// dynkin_edges(n)[k] and is stored as (tail, head).
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;

  bool has_arrow(int tail, int head) const;
  // The quiver with every arrow reversed.
  Quiver opposite() const;
  // Text form accepted by parse_quiver.
  std::string to_string() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

// Parses "n=6; 1>0,2>1,3>2,4>3,3>5". Throws ParseError.
Quiver parse_quiver(std::string_view spec);

// All 2^(n-1) orientations. Bit k of the index set means dynkin edge k is
// oriented from its larger endpoint to its smaller one.
std::vector<Quiver> enumerate_orientations(int n);

// b[i][j] = 1 iff i -> j, -1 iff j -> i.
IntMatrix exchange_matrix(const Quiver& q);

// Generated from the Cartan matrix by simple reflections. Sorted by height,
// then lexicographically descending. Throws SemanticError for n < 4.
std::vector<Root> positive_roots(int n);

bool is_positive_root(const Root& d, int n);

// Parses "1,1,2,2,1,1". Throws ParseError.
Root parse_root(std::string_view spec);

// Throws SemanticError unless d is a positive root of D_n.
void require_positive_root(const Root& d, int n);

std::string format_vector(const IntVector& v);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_QUIVER_H_
