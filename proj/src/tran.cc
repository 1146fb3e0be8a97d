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

#include "dimercluster/tran.h"

#include <algorithm>

#include "dimercluster/errors.h"

namespace dimercluster {
namespace {

void require_box(const Root& d, const IntVector& e) {
  if (e.size() != d.size()) throw SemanticError("e-vector has wrong length");
  for (size_t i = 0; i < d.size(); ++i) {
    if (e[i] < 0 || e[i] > d[i]) {
      throw SemanticError("e-vector " + format_vector(e) +
                          " leaves the box [0, d]");
    }
  }
}

bool pair_is(const Root& d, const IntVector& e, int i, int dv, int ev) {
  return d[i] == dv && e[i] == ev;
}

}  // namespace

bool CriticalityReport::supported() const {
  return acceptable && std::all_of(nu.begin(), nu.end(),
                                   [](int x) { return x <= 1; });
}

long CriticalityReport::coefficient() const {
  if (!supported()) return 0;
  long c = 1;
  for (int x : nu) {
    if (x == 0) c *= 2;
  }
  return c;
}

bool is_acceptable(const Quiver& q, const Root& d, const IntVector& e) {
  require_box(d, e);
  for (auto [i, j] : q.arrows) {
    if (e[i] - e[j] > std::max(d[i] - d[j], 0)) return false;
  }
  return true;
}

CriticalityReport criticality(const Quiver& q, const Root& d,
                              const IntVector& e) {
  CriticalityReport r;
  r.e = e;
  r.acceptable = is_acceptable(q, d, e);
  const int n = q.n;
  std::vector<int> comp_of(n, -1);
  for (int i = 0; i < n; ++i) {
    if (pair_is(d, e, i, 2, 1)) r.s.push_back(i);
  }
  for (int i : r.s) {
    if (comp_of[i] >= 0) continue;
    const int c = static_cast<int>(r.components.size());
    r.components.push_back({});
    std::vector<int> stack{i};
    comp_of[i] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      r.components[c].push_back(v);
      for (auto [a, b] : dynkin_edges(n)) {
        for (auto [x, y] : {std::pair{a, b}, {b, a}}) {
          if (x == v && comp_of[y] < 0 && pair_is(d, e, y, 2, 1)) {
            comp_of[y] = c;
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(r.components[c].begin(), r.components[c].end());
  }
  r.nu.assign(r.components.size(), 0);
  for (auto [i, j] : q.arrows) {
    int touched = -1;
    if (pair_is(d, e, i, 2, 1) && pair_is(d, e, j, 1, 0)) touched = i;
    if (pair_is(d, e, i, 1, 1) && pair_is(d, e, j, 2, 1)) touched = j;
    if (touched >= 0) {
      r.critical_arrows.emplace_back(i, j);
      ++r.nu[comp_of[touched]];
    }
  }
  return r;
}

std::vector<IntVector> box_vectors(const Root& d) {
  std::vector<IntVector> out;
  IntVector e(d.size(), 0);
  while (true) {
    out.push_back(e);
    int k = static_cast<int>(d.size()) - 1;
    while (k >= 0 && e[k] == d[k]) e[k--] = 0;
    if (k < 0) break;
    ++e[k];
  }
  return out;
}

LaurentPoly tran_f_polynomial(const Quiver& q, const Root& d) {
  require_positive_root(d, q.n);
  const VarContext ctx = VarContext::U(q.n);
  LaurentPoly f(ctx);
  for (const IntVector& e : box_vectors(d)) {
    long c = criticality(q, d, e).coefficient();
    if (c) f += LaurentPoly::monomial(ctx, e, c);
  }
  return f;
}

IntVector tran_g_vector(const Quiver& q, const Root& d) {
  require_positive_root(d, q.n);
  // Exchange block of the principal seed: the transpose of exchange_matrix.
  IntMatrix b = exchange_matrix(q);
  for (auto& row : b) {
    for (int& x : row) x = -x;
  }
  IntVector g(q.n, 0);
  for (int i = 0; i < q.n; ++i) g[i] -= d[i];
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.n; ++j) {
      g[j] += d[i] * std::max(-b[j][i], 0);
    }
  }
  return g;
}

}  // namespace dimercluster
