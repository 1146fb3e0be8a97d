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

#include "dimercluster/flip_poset.h"

#include <algorithm>
#include <deque>
#include <map>

#include "dimercluster/errors.h"

namespace dimercluster {

std::vector<std::vector<char>> FlipPoset::order() const {
  const size_t m = elements.size();
  std::vector<std::vector<int>> up(m);
  for (auto [a, b] : covers) up[a].push_back(b);
  std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
  for (size_t s = 0; s < m; ++s) {
    std::vector<int> stack{static_cast<int>(s)};
    reach[s][s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : up[v]) {
        if (!reach[s][w]) {
          reach[s][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

std::optional<int> FlipPoset::find(const EVector& e) const {
  for (size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].e == e) return static_cast<int>(k);
  }
  return std::nullopt;
}

FlipPoset build_poset(const BaseGraph& g, const Root& d,
                      const NodeSet& nodes) {
  FlipPoset p;
  std::map<EVector, int> index;
  MixedDimer bottom = minimal_matching(g, d);
  if (!is_node_monochromatic(g, nodes, bottom)) {
    throw InternalError("minimal matching is not node-monochromatic");
  }
  p.elements.push_back({EVector(g.n(), 0), bottom, count_cycles(g, bottom), 0});
  index[p.elements[0].e] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const MixedDimer config = p.elements[cur].config;
    const EVector e = p.elements[cur].e;
    for (int t : allowable_flips(g, config)) {
      MixedDimer next = flip(g, config, t);
      if (!is_node_monochromatic(g, nodes, next)) continue;
      EVector ne = e;
      ++ne[t];
      auto [it, inserted] =
          index.try_emplace(ne, static_cast<int>(p.elements.size()));
      if (inserted) {
        p.elements.push_back(
            {ne, next, count_cycles(g, next), p.elements[cur].rank + 1});
        queue.push_back(it->second);
      } else if (!(p.elements[it->second].config == next)) {
        throw InternalError("two configurations share an e-vector");
      }
      p.covers.emplace_back(cur, it->second);
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  p.covers.erase(std::unique(p.covers.begin(), p.covers.end()),
                 p.covers.end());
  return p;
}

namespace {

class Lattice {
 public:
  explicit Lattice(const FlipPoset& p) : p_(p), le_(p.order()) {
    const size_t m = p.elements.size();
    for (size_t k = 0; k < m; ++k) index_[p.elements[k].e] = static_cast<int>(k);
  }

  std::optional<int> meet(int a, int b) const { return bound(a, b, true); }
  std::optional<int> join(int a, int b) const { return bound(a, b, false); }
  bool le(int a, int b) const { return le_[a][b] != 0; }
  bool comparable(int a, int b) const { return le(a, b) || le(b, a); }

 private:
  // Greatest lower bound (lower = true) or least upper bound. The
  // coordinate-wise min/max of the e-vectors is tried first.
  std::optional<int> bound(int a, int b, bool lower) const {
    auto below = [&](int x, int y) { return lower ? le(x, y) : le(y, x); };
    auto is_common = [&](int x) { return below(x, a) && below(x, b); };
    auto is_best = [&](int x) {
      if (!is_common(x)) return false;
      for (size_t y = 0; y < p_.elements.size(); ++y) {
        if (is_common(static_cast<int>(y)) && !below(static_cast<int>(y), x)) {
          return false;
        }
      }
      return true;
    };
    EVector cand = p_.elements[a].e;
    for (size_t i = 0; i < cand.size(); ++i) {
      cand[i] = lower ? std::min(cand[i], p_.elements[b].e[i])
                      : std::max(cand[i], p_.elements[b].e[i]);
    }
    auto it = index_.find(cand);
    if (it != index_.end() && is_best(it->second)) return it->second;
    for (size_t x = 0; x < p_.elements.size(); ++x) {
      if (is_best(static_cast<int>(x))) return static_cast<int>(x);
    }
    return std::nullopt;
  }

  const FlipPoset& p_;
  std::vector<std::vector<char>> le_;
  std::map<EVector, int> index_;
};

}  // namespace

LatticeReport is_distributive(const FlipPoset& p) {
  LatticeReport r;
  const int m = static_cast<int>(p.elements.size());
  Lattice lat(p);
  std::vector<std::vector<int>> meet(m, std::vector<int>(m));
  std::vector<std::vector<int>> join(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      auto lo = lat.meet(a, b);
      auto hi = lat.join(a, b);
      if (!lo || !hi) {
        r.offending_pair = std::pair{a, b};
        return r;
      }
      meet[a][b] = meet[b][a] = *lo;
      join[a][b] = join[b][a] = *hi;
    }
  }
  r.is_lattice = true;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || !lat.le(a, b)) continue;
      for (int c = 0; c < m; ++c) {
        if (lat.comparable(a, c) || lat.comparable(b, c)) continue;
        if (meet[a][c] == meet[b][c] && join[a][c] == join[b][c]) {
          r.witness_kind = "N5";
          r.witness = {meet[a][c], a, b, c, join[a][c]};
          return r;
        }
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (lat.comparable(a, b)) continue;
      for (int c = b + 1; c < m; ++c) {
        if (lat.comparable(a, c) || lat.comparable(b, c)) continue;
        const int lo = meet[a][b], hi = join[a][b];
        if (meet[a][c] == lo && meet[b][c] == lo && join[a][c] == hi &&
            join[b][c] == hi) {
          r.witness_kind = "M3";
          r.witness = {lo, a, b, c, hi};
          return r;
        }
      }
    }
  }
  r.distributive = true;
  return r;
}

}  // namespace dimercluster
