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

#include "dimercluster/export.h"

#include <map>
#include <sstream>

namespace dimercluster {

using nlohmann::json;

namespace {

json coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

std::map<int, const char*> node_colors(const NodeSet* nodes) {
  std::map<int, const char*> out;
  if (nodes == nullptr) return out;
  out[nodes->red.first] = out[nodes->red.second] = "red";
  out[nodes->blue.first] = out[nodes->blue.second] = "blue";
  if (nodes->green) out[nodes->green->first] = out[nodes->green->second] = "green";
  return out;
}

std::string monomial_label(const IntVector& e, const VarContext& ctx) {
  return LaurentPoly::monomial(ctx, e).to_string();
}

}  // namespace

json base_graph_json(const BaseGraph& g, const NodeSet* nodes,
                     const MixedDimer* config) {
  const auto colors = node_colors(nodes);
  json out;
  out["schema"] = kJsonSchema;
  out["quiver"] = g.quiver().to_string();
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    json jv{{"id", v.id},
            {"color", to_string(v.color)},
            {"x", v.pos.x()},
            {"y", v.pos.y()}};
    if (auto it = colors.find(v.id); it != colors.end()) jv["node"] = it->second;
    vs.push_back(jv);
  }
  json es = json::array();
  for (const auto& e : g.edges()) {
    json sides = json::array();
    for (const auto& s : e.sides) {
      sides.push_back({{"tile", s.tile}, {"class", to_string(s.cls)}});
    }
    json je{{"id", e.id}, {"v1", e.v1}, {"v2", e.v2}, {"sides", sides}};
    if (config != nullptr) je["mult"] = config->mult[e.id];
    es.push_back(je);
  }
  json ts = json::array();
  for (const auto& t : g.tiles()) {
    ts.push_back({{"id", t.id},
                  {"hexagon", t.hexagon},
                  {"vertices", t.vertices},
                  {"edges", t.edges}});
  }
  out["vertices"] = vs;
  out["edges"] = es;
  out["tiles"] = ts;
  if (nodes != nullptr) out["green_case"] = to_string(nodes->green_case);
  return out;
}

std::string base_graph_dot(const BaseGraph& g, const NodeSet* nodes,
                           const MixedDimer* config) {
  const auto colors = node_colors(nodes);
  std::ostringstream os;
  os << "graph base {\n  node [shape=circle, width=0.2, label=\"\"];\n";
  for (const auto& v : g.vertices()) {
    const bool black = v.color == Color::kBlack;
    os << "  v" << v.id << " [pos=\"" << v.pos.x() << "," << v.pos.y()
       << "!\", style=filled, fillcolor=" << (black ? "black" : "white");
    if (auto it = colors.find(v.id); it != colors.end()) {
      os << ", color=" << it->second << ", penwidth=3";
    }
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  v" << e.v1 << " -- v" << e.v2;
    if (config != nullptr) {
      const int m = config->mult[e.id];
      if (m > 0) {
        os << " [penwidth=" << 1 + 2 * m << ", label=\"" << m << "\"]";
      } else if (m < 0) {
        os << " [style=dashed, label=\"" << m << "\"]";
      } else {
        os << " [color=gray]";
      }
    }
    os << ";\n";
  }
  for (const auto& t : g.tiles()) {
    double cx = 0, cy = 0;
    for (int v : t.vertices) {
      cx += g.vertices()[v].pos.x();
      cy += g.vertices()[v].pos.y();
    }
    cx /= t.vertices.size();
    cy /= t.vertices.size();
    os << "  t" << t.id << " [shape=plaintext, label=\"" << t.id << "\", pos=\""
       << cx << "," << cy << "!\"];\n";
  }
  os << "}\n";
  return os.str();
}

json poset_json(const FlipPoset& p) {
  json out;
  out["schema"] = kJsonSchema;
  json els = json::array();
  for (size_t i = 0; i < p.elements.size(); ++i) {
    const auto& el = p.elements[i];
    els.push_back({{"id", i},
                   {"e", el.e},
                   {"rank", el.rank},
                   {"cycles", el.cycles},
                   {"mult", el.config.mult}});
  }
  json covers = json::array();
  for (const auto& [a, b] : p.covers) covers.push_back({a, b});
  out["elements"] = els;
  out["covers"] = covers;
  return out;
}

std::string poset_dot(const FlipPoset& p, const VarContext& ctx) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < p.elements.size(); ++i) {
    const auto& el = p.elements[i];
    os << "  p" << i << " [label=\"";
    if (el.cycles > 0) os << (1L << el.cycles) << "*";
    os << monomial_label(el.e, ctx) << "\"];\n";
  }
  for (const auto& [a, b] : p.covers) os << "  p" << a << " -> p" << b << ";\n";
  os << "}\n";
  return os.str();
}

json laurent_json_u(const LaurentPoly& f) {
  json out = json::array();
  for (const auto& [e, c] : f.sorted_terms()) {
    out.push_back({{"e", e}, {"coeff", coeff_json(c)}});
  }
  return out;
}

json laurent_json_xy(const LaurentPoly& p) {
  const int n = p.context().n;
  json out = json::array();
  for (const auto& [e, c] : p.sorted_terms()) {
    IntVector x(e.begin(), e.begin() + n), y(e.begin() + n, e.end());
    out.push_back({{"x_exp", x}, {"y_exp", y}, {"coeff", coeff_json(c)}});
  }
  return out;
}

namespace {

std::map<int, int> cycle_histogram(const FlipPoset& p) {
  std::map<int, int> h;
  for (const auto& el : p.elements) ++h[el.cycles];
  return h;
}

}  // namespace

json compute_json(const DimerInstance& inst, const ClusterInvariants& inv) {
  json out;
  out["schema"] = kJsonSchema;
  out["quiver"] = inst.quiver.to_string();
  out["d"] = inst.d;
  out["f"] = laurent_json_u(inv.f_poly);
  out["g"] = inv.g_vec;
  out["laurent"] = laurent_json_xy(inv.laurent);
  out["poset_size"] = inst.poset.elements.size();
  json hist = json::object();
  for (const auto& [c, k] : cycle_histogram(inst.poset)) hist[std::to_string(c)] = k;
  out["cycle_histogram"] = hist;
  return out;
}

std::string compute_text(const DimerInstance& inst,
                         const ClusterInvariants& inv) {
  std::ostringstream os;
  os << "quiver:  " << inst.quiver.to_string() << "\n";
  os << "d:       " << format_vector(inst.d) << "\n";
  os << "F:       " << inv.f_poly.to_string() << "\n";
  os << "g:       " << format_vector(inv.g_vec) << "\n";
  os << "x_d:     " << inv.laurent.to_string() << "\n";
  os << "poset:   " << inst.poset.elements.size() << " elements\n";
  os << "cycles:";
  for (const auto& [c, k] : cycle_histogram(inst.poset)) {
    os << " " << c << ":" << k;
  }
  os << "\n";
  return os.str();
}

}  // namespace dimercluster
