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

#include "dimercluster/mutation.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "dimercluster/errors.h"

namespace dimercluster {

IntMatrix principal_exchange_block(const Quiver& q) {
  IntMatrix b = exchange_matrix(q);
  for (auto& row : b) {
    for (int& x : row) x = -x;
  }
  return b;
}

PrincipalSeed initial_principal_seed(const Quiver& q) {
  const int n = q.n;
  PrincipalSeed s;
  s.n = n;
  s.b = principal_exchange_block(q);
  for (int i = 0; i < n; ++i) {
    IntVector row(n, 0);
    row[i] = 1;
    s.b.push_back(row);
  }
  const VarContext ctx = VarContext::XY(n);
  for (int i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(ctx, i));
  return s;
}

PrincipalSeed mutate_seed(const PrincipalSeed& s, int k) {
  const int n = s.n;
  if (k < 0 || k >= n) throw SemanticError("mutation direction out of range");
  const VarContext ctx = VarContext::XY(n);

  // Exchange monomials: rows < n are cluster variables, rows >= n are y's.
  LaurentPoly plus = LaurentPoly::constant(ctx, 1);
  LaurentPoly minus = LaurentPoly::constant(ctx, 1);
  IntVector ymono_plus(2 * n, 0), ymono_minus(2 * n, 0);
  for (int i = 0; i < 2 * n; ++i) {
    const int bik = s.b[i][k];
    if (bik == 0) continue;
    if (i < n) {
      if (bik > 0) plus = plus * s.cluster[i].pow(bik);
      if (bik < 0) minus = minus * s.cluster[i].pow(-bik);
    } else {
      if (bik > 0) ymono_plus[i] += bik;
      if (bik < 0) ymono_minus[i] += -bik;
    }
  }
  plus = plus * LaurentPoly::monomial(ctx, ymono_plus);
  minus = minus * LaurentPoly::monomial(ctx, ymono_minus);

  PrincipalSeed r = s;
  r.cluster[k] = (plus + minus).divide_exact(s.cluster[k]);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.b[i][j] = -s.b[i][j];
      } else {
        const int bik = s.b[i][k], bkj = s.b[k][j];
        const int sgn = (bik > 0) - (bik < 0);
        r.b[i][j] = s.b[i][j] + sgn * std::max(bik * bkj, 0);
      }
    }
  }
  return r;
}

size_t seed_budget_from_env() {
  const char* env = std::getenv("DIMERCLUSTER_SEED_BUDGET");
  if (env == nullptr) return kDefaultSeedBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefaultSeedBudget;
  return static_cast<size_t>(v);
}

Root denominator_vector(const LaurentPoly& x) {
  const int n = x.context().n;
  const IntVector lo = x.min_exponents();
  Root d(n, 0);
  for (int i = 0; i < n; ++i) d[i] = std::max(0, -lo[i]);
  return d;
}

namespace {

ClusterVariable describe(const LaurentPoly& x) {
  const int n = x.context().n;
  const VarContext u = VarContext::U(n);
  std::vector<LaurentPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::constant(u, 1));
  for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::variable(u, i));
  ClusterVariable cv{x, x.substitute(images, u), {}};
  int found = 0;
  for (const auto& [e, c] : x.terms()) {
    if (std::all_of(e.begin() + n, e.end(), [](int v) { return v == 0; })) {
      ++found;
      if (c != 1) throw InternalError("y-free term has coefficient " + c.get_str());
      cv.g.assign(e.begin(), e.begin() + n);
    }
  }
  if (found != 1) throw InternalError("cluster variable lacks a unique y-free term");
  return cv;
}

}  // namespace

ClusterAtlas enumerate_cluster_variables(const Quiver& q, size_t seed_budget) {
  ClusterAtlas atlas;
  std::map<LaurentPoly, int> ids;
  auto intern = [&](const LaurentPoly& p) {
    return ids.try_emplace(p, static_cast<int>(ids.size())).first->second;
  };
  auto key_of = [&](const PrincipalSeed& s) {
    std::vector<int> key;
    for (const auto& x : s.cluster) key.push_back(intern(x));
    std::sort(key.begin(), key.end());
    return key;
  };

  PrincipalSeed start = initial_principal_seed(q);
  std::set<std::vector<int>> seen{key_of(start)};
  std::deque<PrincipalSeed> queue{start};
  while (!queue.empty()) {
    PrincipalSeed s = std::move(queue.front());
    queue.pop_front();
    ++atlas.seeds;
    for (int k = 0; k < q.n; ++k) {
      PrincipalSeed t = mutate_seed(s, k);
      ++atlas.exchanges;
      if (seen.insert(key_of(t)).second) {
        if (seen.size() > seed_budget) {
          throw SemanticError("seed budget of " + std::to_string(seed_budget) +
                              " exceeded");
        }
        queue.push_back(std::move(t));
      }
    }
  }

  const VarContext ctx = VarContext::XY(q.n);
  for (const auto& [x, id] : ids) {
    for (const auto& [e, c] : x.terms()) {
      if (c <= 0) atlas.all_coefficients_positive = false;
    }
    bool initial = false;
    for (int i = 0; i < q.n; ++i) {
      if (x == LaurentPoly::variable(ctx, i)) initial = true;
    }
    if (initial) continue;
    Root d = denominator_vector(x);
    if (!atlas.variables.emplace(d, describe(x)).second) {
      throw InternalError("two cluster variables share denominator vector " +
                          format_vector(d));
    }
  }
  return atlas;
}

}  // namespace dimercluster
