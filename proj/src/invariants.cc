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

#include "dimercluster/invariants.h"

#include "dimercluster/errors.h"
#include "dimercluster/mixed_dimer.h"

namespace dimercluster {

DimerInstance build_instance(const Quiver& q, const Root& d) {
  require_positive_root(d, q.n);
  BaseGraph graph = build_base_graph(q);
  NodeSet nodes = place_nodes(graph, d);
  MixedDimer minimal = minimal_matching(graph, d);
  GEdgeWeights weights = g_edge_weights(graph);
  FlipPoset poset = build_poset(graph, d, nodes);
  return DimerInstance{q,       d,       std::move(graph), nodes,
                       minimal, weights, std::move(poset)};
}

std::vector<LaurentPoly> y_hat(const Quiver& q) {
  const int n = q.n;
  const VarContext ctx = VarContext::XY(n);
  const IntMatrix b = exchange_matrix(q);
  std::vector<LaurentPoly> out;
  for (int i = 0; i < n; ++i) {
    IntVector e(2 * n, 0);
    e[n + i] = 1;
    for (int j = 0; j < n; ++j) e[j] = -b[j][i];
    out.push_back(LaurentPoly::monomial(ctx, e));
  }
  return out;
}

LaurentPoly height_monomial(const BaseGraph& g, const GEdgeWeights& w,
                            const MixedDimer& m) {
  const int n = g.n();
  IntVector e(2 * n, 0);
  for (int k = 0; k < g.num_edges(); ++k) {
    if (m.mult[k] != 0 && w.weight[k] >= 0) e[w.weight[k]] += m.mult[k];
  }
  return LaurentPoly::monomial(VarContext::XY(n), e);
}

LaurentPoly f_polynomial(const DimerInstance& inst) {
  const VarContext ctx = VarContext::U(inst.quiver.n);
  LaurentPoly f(ctx);
  for (const auto& el : inst.poset.elements) {
    f += LaurentPoly::monomial(ctx, el.e, mpz_class(1) << el.cycles);
  }
  return f;
}

IntVector g_vector(const DimerInstance& inst) {
  const int n = inst.quiver.n;
  const IntVector wt =
      height_monomial(inst.graph, inst.weights, inst.minimal).degree_vector();
  IntVector g(n);
  for (int i = 0; i < n; ++i) g[i] = wt[i] - inst.d[i];
  return g;
}

LaurentPoly laurent_expansion(const DimerInstance& inst) {
  const int n = inst.quiver.n;
  const VarContext ctx = VarContext::XY(n);
  LaurentPoly sum(ctx);
  for (const auto& el : inst.poset.elements) {
    IntVector ye(2 * n, 0);
    for (int i = 0; i < n; ++i) ye[n + i] = el.e[i];
    sum += height_monomial(inst.graph, inst.weights, el.config) *
           LaurentPoly::monomial(ctx, ye, mpz_class(1) << el.cycles);
  }
  IntVector inv(2 * n, 0);
  for (int i = 0; i < n; ++i) inv[i] = -inst.d[i];
  return sum * LaurentPoly::monomial(ctx, inv);
}

LaurentPoly separation_form(const Quiver& q, const LaurentPoly& f,
                            const IntVector& g) {
  const int n = q.n;
  const VarContext ctx = VarContext::XY(n);
  IntVector ge(2 * n, 0);
  for (int i = 0; i < n; ++i) ge[i] = g[i];
  return f.substitute(y_hat(q), ctx) * LaurentPoly::monomial(ctx, ge);
}

ClusterInvariants compute_invariants(const DimerInstance& inst) {
  return ClusterInvariants{f_polynomial(inst), g_vector(inst),
                           laurent_expansion(inst)};
}

ClusterInvariants compute_invariants(const Quiver& q, const Root& d) {
  return compute_invariants(build_instance(q, d));
}

}  // namespace dimercluster
