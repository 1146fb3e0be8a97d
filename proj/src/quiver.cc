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

#include "dimercluster/quiver.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "dimercluster/errors.h"

namespace dimercluster {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) +
                     "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

IntMatrix cartan_matrix(int n) {
  IntMatrix a(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : dynkin_edges(n)) a[i][j] = a[j][i] = -1;
  return a;
}

}  // namespace

std::vector<std::pair<int, int>> dynkin_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 <= n - 3; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 3, n - 2);
  edges.emplace_back(n - 3, n - 1);
  return edges;
}

bool Quiver::has_arrow(int tail, int head) const {
  return std::find(arrows.begin(), arrows.end(),
                   std::make_pair(tail, head)) != arrows.end();
}

Quiver Quiver::opposite() const {
  Quiver r{n, {}};
  for (auto [t, h] : arrows) r.arrows.emplace_back(h, t);
  return r;
}

std::string Quiver::to_string() const {
  std::ostringstream os;
  os << "n=" << n << ";";
  for (size_t k = 0; k < arrows.size(); ++k) {
    os << (k == 0 ? " " : ",") << arrows[k].first << ">" << arrows[k].second;
  }
  return os.str();
}

Quiver parse_quiver(std::string_view spec) {
  size_t semi = spec.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError("quiver spec must look like 'n=<int>; i>j,...'");
  }
  std::string_view head = trim(spec.substr(0, semi));
  if (head.size() < 3 || head.substr(0, 2) != "n=") {
    throw ParseError("quiver spec must start with 'n=<int>'");
  }
  Quiver q;
  q.n = parse_int(head.substr(2), "rank");
  if (q.n < 4) throw ParseError("type D_n requires n >= 4");

  const auto edges = dynkin_edges(q.n);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> arrows;
  for (std::string_view token : split(spec.substr(semi + 1), ',')) {
    token = trim(token);
    size_t gt = token.find('>');
    if (gt == std::string_view::npos) {
      throw ParseError("arrow token must be 'i>j': '" + std::string(token) +
                       "'");
    }
    int tail = parse_int(token.substr(0, gt), "arrow tail");
    int head_v = parse_int(token.substr(gt + 1), "arrow head");
    std::pair<int, int> key = ordered_pair(tail, head_v);
    if (std::find(edges.begin(), edges.end(), key) == edges.end()) {
      throw ParseError("arrow " + std::string(token) +
                       " is not an edge of the D_" + std::to_string(q.n) +
                       " diagram");
    }
    if (!seen.insert(key).second) {
      throw ParseError("edge oriented twice: " + std::string(token));
    }
    arrows.emplace_back(tail, head_v);
  }
  if (arrows.size() != edges.size()) {
    std::string missing;
    for (auto e : edges) {
      if (!seen.count(e)) {
        missing += (missing.empty() ? "" : ",") + std::string("{") +
                   std::to_string(e.first) + "," + std::to_string(e.second) +
                   "}";
      }
    }
    throw ParseError("missing Dynkin edges: " + missing);
  }
  // Store arrows in Dynkin edge order.
  for (auto e : edges) {
    for (auto a : arrows) {
      if (ordered_pair(a.first, a.second) == e) q.arrows.push_back(a);
    }
  }
  return q;
}

std::vector<Quiver> enumerate_orientations(int n) {
  if (n < 4) throw SemanticError("type D_n requires n >= 4");
  const auto edges = dynkin_edges(n);
  std::vector<Quiver> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    Quiver q{n, {}};
    for (size_t k = 0; k < edges.size(); ++k) {
      auto [lo, hi] = edges[k];
      if (mask & (1u << k)) {
        q.arrows.emplace_back(hi, lo);
      } else {
        q.arrows.emplace_back(lo, hi);
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

IntMatrix exchange_matrix(const Quiver& q) {
  IntMatrix b(q.n, IntVector(q.n, 0));
  for (auto [t, h] : q.arrows) {
    b[t][h] = 1;
    b[h][t] = -1;
  }
  return b;
}

std::vector<Root> positive_roots(int n) {
  if (n < 4) throw SemanticError("type D_n requires n >= 4");
  const IntMatrix a = cartan_matrix(n);
  std::set<Root> found;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    found.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    Root beta = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * a[j][i];
      Root image = beta;
      image[i] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; }))
        continue;
      if (found.insert(image).second) frontier.push_back(image);
    }
  }
  std::vector<Root> roots(found.begin(), found.end());
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    int hx = 0, hy = 0;
    for (int c : x) hx += c;
    for (int c : y) hy += c;
    if (hx != hy) return hx < hy;
    return x > y;
  });
  return roots;
}

bool is_positive_root(const Root& d, int n) {
  if (n < 4 || static_cast<int>(d.size()) != n) return false;
  const auto roots = positive_roots(n);
  return std::find(roots.begin(), roots.end(), d) != roots.end();
}

Root parse_root(std::string_view spec) {
  Root d;
  for (std::string_view part : split(trim(spec), ',')) {
    d.push_back(parse_int(part, "root entry"));
  }
  return d;
}

void require_positive_root(const Root& d, int n) {
  if (!is_positive_root(d, n)) {
    throw SemanticError(format_vector(d) + " is not a positive root of D_" +
                        std::to_string(n));
  }
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace dimercluster
