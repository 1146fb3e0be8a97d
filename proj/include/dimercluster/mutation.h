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

#ifndef DIMERCLUSTER_MUTATION_H_
#define DIMERCLUSTER_MUTATION_H_

#include <cstddef>
#include <map>
#include <vector>

#include "dimercluster/laurent.h"
#include "dimercluster/quiver.h"

namespace dimercluster {

// A seed with principal coefficients: b is 2n x n, the bottom block tracks
// the y-variables, and cluster variables live in the XY context.
struct PrincipalSeed {
  int n = 0;
  IntMatrix b;
  std::vector<LaurentPoly> cluster;
};

// Exchange block of the initial seed. Its entry (i, j) is 1 iff the quiver
// has the arrow j -> i, i.e. the transpose of exchange_matrix(q); this is
// the sign under which Tran's support conditions read the quiver.
IntMatrix principal_exchange_block(const Quiver& q);

PrincipalSeed initial_principal_seed(const Quiver& q);

// Matrix mutation on all 2n rows and the exchange relation in direction k.
// Throws InternalError if the division by the old variable is not exact.
PrincipalSeed mutate_seed(const PrincipalSeed& s, int k);

struct ClusterVariable {
  LaurentPoly laurent;
  LaurentPoly f_poly;  // laurent at x = 1, with y_i renamed u_i
  IntVector g;         // x-degree of the y-free term
};

struct ClusterAtlas {
  std::map<Root, ClusterVariable> variables;  // keyed by denominator vector
  size_t seeds = 0;
  size_t exchanges = 0;
  bool all_coefficients_positive = true;
};

constexpr size_t kDefaultSeedBudget = 100000;

// DIMERCLUSTER_SEED_BUDGET if set and valid, else kDefaultSeedBudget.
size_t seed_budget_from_env();

// Breadth-first search over seeds up to relabelling. Throws SemanticError
// when more than `seed_budget` seeds are visited.
ClusterAtlas enumerate_cluster_variables(const Quiver& q,
                                         size_t seed_budget = seed_budget_from_env());

// Denominator vector: d_i = max(0, -min exponent of x_i).
Root denominator_vector(const LaurentPoly& x);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_MUTATION_H_
