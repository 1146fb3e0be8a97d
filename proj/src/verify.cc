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

#include "dimercluster/verify.h"

#include <exception>
#include <functional>
#include <optional>

#include "dimercluster/invariants.h"
#include "dimercluster/mixed_dimer.h"
#include "dimercluster/tran.h"

namespace dimercluster {

bool InstanceReport::passed() const { return first_failure() == nullptr; }

const CheckResult* InstanceReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

namespace {

// Runs `body`, which returns an empty string on success, and records the
// outcome. Exceptions count as failures.
void run_check(InstanceReport& r, const std::string& name,
               const std::function<std::string()>& body) {
  CheckResult c{name, true, ""};
  try {
    c.detail = body();
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  c.pass = c.detail.empty();
  r.checks.push_back(std::move(c));
}

std::string differ(const std::string& what, const std::string& a,
                   const std::string& b) {
  return what + ": " + a + " != " + b;
}

int total(const IntVector& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::string check_poset_shape(const DimerInstance& inst) {
  const FlipPoset& p = inst.poset;
  std::vector<int> up(p.elements.size(), 0), down(p.elements.size(), 0);
  for (auto [a, b] : p.covers) {
    ++up[a];
    ++down[b];
  }
  int bottoms = 0, tops = 0;
  for (size_t i = 0; i < p.elements.size(); ++i) {
    const auto& el = p.elements[i];
    if (el.rank != total(el.e)) return "rank differs from |e| at " + format_vector(el.e);
    if (down[i] == 0) {
      ++bottoms;
      if (el.e != IntVector(inst.d.size(), 0) || el.cycles != 0) {
        return "minimal element is not M_-";
      }
    }
    if (up[i] == 0) {
      ++tops;
      if (el.e != inst.d || el.cycles != 0) return "maximal element is not e = d with weight 1";
    }
  }
  if (bottoms != 1 || tops != 1) return "poset lacks a unique bottom or top";
  return "";
}

}  // namespace

InstanceReport verify_instance(const Quiver& q, const Root& d,
                               const OracleSelection& oracles,
                               const ClusterAtlas* atlas) {
  InstanceReport r{q, d, {}};
  std::optional<DimerInstance> inst;
  ClusterInvariants inv;
  run_check(r, "build", [&] {
    inst.emplace(build_instance(q, d));
    inv = compute_invariants(*inst);
    return std::string();
  });
  if (!inst) return r;
  const BaseGraph& g = inst->graph;

  run_check(r, "poset_shape", [&] { return check_poset_shape(*inst); });
  run_check(r, "separation", [&] {
    const LaurentPoly s = separation_form(q, inv.f_poly, inv.g_vec);
    return s == inv.laurent ? "" : differ("laurent", inv.laurent.to_string(), s.to_string());
  });
  run_check(r, "roundtrip_config", [&]() -> std::string {
    for (const auto& el : inst->poset.elements) {
      if (e_from_config(g, d, el.config) != el.e) {
        return "e_from_config fails at " + format_vector(el.e);
      }
      if (config_from_e(g, d, el.e) != el.config) {
        return "config_from_e fails at " + format_vector(el.e);
      }
    }
    return "";
  });

  if (oracles.tran) {
    run_check(r, "f_tran", [&] {
      const LaurentPoly t = tran_f_polynomial(q, d);
      return t == inv.f_poly ? "" : differ("F", inv.f_poly.to_string(), t.to_string());
    });
    run_check(r, "g_tran", [&] {
      const IntVector t = tran_g_vector(q, d);
      return t == inv.g_vec ? "" : differ("g", format_vector(inv.g_vec), format_vector(t));
    });
    std::vector<IntVector> supported;
    for (const IntVector& e : box_vectors(d)) {
      if (criticality(q, d, e).supported()) supported.push_back(e);
    }
    run_check(r, "roundtrip_e", [&]() -> std::string {
      for (const IntVector& e : supported) {
        if (e_from_config(g, d, config_from_e(g, d, e)) != e) {
          return "roundtrip fails at " + format_vector(e);
        }
      }
      return "";
    });
    run_check(r, "closed_form", [&]() -> std::string {
      for (const IntVector& e : supported) {
        if (config_from_e(g, d, e) != config_from_e_by_flips(g, d, e)) {
          return "weighted flips disagree at " + format_vector(e);
        }
      }
      return "";
    });
    run_check(r, "coefficient_law", [&]() -> std::string {
      for (const IntVector& e : supported) {
        const CriticalityReport rep = criticality(q, d, e);
        int free_components = 0;
        for (int nu : rep.nu) free_components += nu == 0;
        const int c = count_cycles(g, config_from_e(g, d, e));
        if (c != free_components) {
          return "cycle count " + std::to_string(c) + " at " + format_vector(e) +
                 ", expected " + std::to_string(free_components);
        }
        if (inv.f_poly.coefficient(e) != mpz_class(1) << c) {
          return "coefficient is not 2^c at " + format_vector(e);
        }
      }
      return "";
    });
  }

  if (oracles.mutation) {
    auto it = atlas->variables.find(d);
    const ClusterVariable* cv = it == atlas->variables.end() ? nullptr : &it->second;
    const std::string missing = "mutation oracle has no variable with denominator " +
                                format_vector(d);
    run_check(r, "f_mutation", [&] {
      if (!cv) return missing;
      return cv->f_poly == inv.f_poly
                 ? std::string()
                 : differ("F", inv.f_poly.to_string(), cv->f_poly.to_string());
    });
    run_check(r, "g_mutation", [&] {
      if (!cv) return missing;
      return cv->g == inv.g_vec
                 ? std::string()
                 : differ("g", format_vector(inv.g_vec), format_vector(cv->g));
    });
    run_check(r, "laurent_mutation", [&] {
      if (!cv) return missing;
      return cv->laurent == inv.laurent
                 ? std::string()
                 : differ("laurent", inv.laurent.to_string(), cv->laurent.to_string());
    });
  }
  return r;
}

std::vector<InstanceReport> verify_orientation(const Quiver& q,
                                               const OracleSelection& oracles) {
  std::optional<ClusterAtlas> atlas;
  std::string atlas_error;
  if (oracles.mutation) {
    try {
      atlas.emplace(enumerate_cluster_variables(q));
    } catch (const std::exception& e) {
      atlas_error = e.what();
    }
  }
  std::vector<InstanceReport> out;
  for (const Root& d : positive_roots(q.n)) {
    if (oracles.mutation && !atlas) {
      InstanceReport r{q, d, {}};
      r.checks.push_back({"mutation_atlas", false, atlas_error});
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(verify_instance(q, d, oracles, atlas ? &*atlas : nullptr));
  }
  return out;
}

}  // namespace dimercluster
