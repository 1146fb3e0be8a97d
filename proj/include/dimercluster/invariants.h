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

#ifndef DIMERCLUSTER_INVARIANTS_H_
#define DIMERCLUSTER_INVARIANTS_H_

#include <vector>

#include "dimercluster/base_graph.h"
#include "dimercluster/flip_poset.h"
#include "dimercluster/laurent.h"
#include "dimercluster/quiver.h"

namespace dimercluster {

// Everything the dimer model builds for one (Q, d).
struct DimerInstance {
  Quiver quiver;
  Root d;
  BaseGraph graph;
  NodeSet nodes;
  MixedDimer minimal;
  GEdgeWeights weights;
  FlipPoset poset;
};

// Throws SemanticError if d is not a positive root of D_n.
DimerInstance build_instance(const Quiver& q, const Root& d);

struct ClusterInvariants {
  LaurentPoly f_poly{VarContext::U(0)};
  IntVector g_vec;
  LaurentPoly laurent{VarContext::XY(0)};
};

// y_hat_i = y_i * prod_j x_j^(-b_ji), b = exchange_matrix(q).
std::vector<LaurentPoly> y_hat(const Quiver& q);

// Product of edge weights over m, counted with multiplicity.
LaurentPoly height_monomial(const BaseGraph& g, const GEdgeWeights& w,
                            const MixedDimer& m);

LaurentPoly f_polynomial(const DimerInstance& inst);
IntVector g_vector(const DimerInstance& inst);
LaurentPoly laurent_expansion(const DimerInstance& inst);

// F(y_hat) * x^g.
LaurentPoly separation_form(const Quiver& q, const LaurentPoly& f,
                            const IntVector& g);

ClusterInvariants compute_invariants(const DimerInstance& inst);
ClusterInvariants compute_invariants(const Quiver& q, const Root& d);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_INVARIANTS_H_
