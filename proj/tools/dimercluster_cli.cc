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

// Command-line front end. Exit codes: 0 ok, 1 verification mismatch,
// 2 parse error, 3 semantic input error.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dimercluster/errors.h"
#include "dimercluster/export.h"
#include "dimercluster/invariants.h"
#include "dimercluster/mixed_dimer.h"
#include "dimercluster/mutation.h"
#include "dimercluster/tran.h"
#include "dimercluster/verify.h"

namespace dc = dimercluster;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;

struct RunConfig {
  std::string quiver;
  std::string root;
  std::string format;
  std::string oracle;
  std::string n_range;
  bool lattice = false;
  bool explain = false;
  std::string output;
  unsigned jobs = 0;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw dc::SemanticError("cannot open output file " + cfg.output);
  out << text;
}

dc::OracleSelection parse_oracles(const std::string& spec) {
  dc::OracleSelection sel{false, false};
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "tran") {
      sel.tran = true;
    } else if (tok == "mutation") {
      sel.mutation = true;
    } else if (!tok.empty()) {
      throw dc::ParseError("unknown oracle '" + tok + "'");
    }
  }
  return sel;
}

// "5", "4-6" or "4,5".
std::vector<int> parse_n_range(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  auto to_int = [](const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw dc::ParseError("bad --n value '" + s + "'");
    }
    if (used != s.size()) throw dc::ParseError("bad --n value '" + s + "'");
    return v;
  };
  while (std::getline(ss, tok, ',')) {
    const size_t dash = tok.find('-');
    if (dash == std::string::npos) {
      out.push_back(to_int(tok));
    } else {
      const int lo = to_int(tok.substr(0, dash));
      const int hi = to_int(tok.substr(dash + 1));
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    }
  }
  if (out.empty()) throw dc::ParseError("empty --n range");
  for (int k : out) {
    if (k < 4) throw dc::SemanticError("type D_n requires n >= 4");
  }
  return out;
}

std::string label(const dc::IntVector& e) {
  return dc::LaurentPoly::monomial(dc::VarContext::U(static_cast<int>(e.size())), e)
      .to_string();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

json explain_json(const dc::Quiver& q, const dc::Root& d, const dc::FlipPoset& p) {
  json out = json::array();
  for (const auto& e : dc::box_vectors(d)) {
    const dc::CriticalityReport r = dc::criticality(q, d, e);
    out.push_back({{"e", e},
                   {"acceptable", r.acceptable},
                   {"s", r.s},
                   {"components", r.components},
                   {"nu", r.nu},
                   {"coeff", r.coefficient()},
                   {"in_poset", p.find(e).has_value()}});
  }
  return out;
}

std::string explain_text(const dc::Quiver& q, const dc::Root& d,
                         const dc::FlipPoset& p) {
  std::ostringstream os;
  for (const auto& e : dc::box_vectors(d)) {
    const dc::CriticalityReport r = dc::criticality(q, d, e);
    os << "e=" << dc::format_vector(e) << " acceptable=" << (r.acceptable ? "yes" : "no");
    if (r.acceptable) {
      os << " S=" << join_ints(r.s) << " components=[";
      for (size_t i = 0; i < r.components.size(); ++i) {
        os << (i ? " " : "") << join_ints(r.components[i]) << ":nu=" << r.nu[i];
      }
      os << "]";
    }
    os << " coeff=" << r.coefficient()
       << " in_poset=" << (p.find(e) ? "yes" : "no") << "\n";
  }
  return os.str();
}

int cmd_basegraph(const RunConfig& cfg) {
  const dc::Quiver q = dc::parse_quiver(cfg.quiver);
  const dc::BaseGraph g = dc::build_base_graph(q);
  std::optional<dc::NodeSet> nodes;
  std::optional<dc::MixedDimer> minimal;
  if (!cfg.root.empty()) {
    const dc::Root d = dc::parse_root(cfg.root);
    dc::require_positive_root(d, q.n);
    nodes = dc::place_nodes(g, d);
    minimal = dc::minimal_matching(g, d);
  }
  const dc::NodeSet* np = nodes ? &*nodes : nullptr;
  const dc::MixedDimer* mp = minimal ? &*minimal : nullptr;
  if (cfg.format == "json") {
    emit(cfg, dc::base_graph_json(g, np, mp).dump(2) + "\n");
  } else if (cfg.format == "dot" || cfg.format.empty()) {
    emit(cfg, dc::base_graph_dot(g, np, mp));
  } else {
    throw dc::ParseError("basegraph supports -f dot|json");
  }
  return kExitOk;
}

int cmd_compute(const RunConfig& cfg) {
  const dc::Quiver q = dc::parse_quiver(cfg.quiver);
  const dc::Root d = dc::parse_root(cfg.root);
  const dc::OracleSelection oracles = parse_oracles(cfg.oracle);
  const dc::DimerInstance inst = dc::build_instance(q, d);
  const dc::ClusterInvariants inv = dc::compute_invariants(inst);

  std::optional<dc::InstanceReport> report;
  if (oracles.tran || oracles.mutation) {
    std::optional<dc::ClusterAtlas> atlas;
    if (oracles.mutation) atlas.emplace(dc::enumerate_cluster_variables(q));
    report = dc::verify_instance(q, d, oracles, atlas ? &*atlas : nullptr);
  }

  if (cfg.format == "json") {
    json out = dc::compute_json(inst, inv);
    if (report) {
      json checks = json::array();
      for (const auto& c : report->checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      out["checks"] = checks;
    }
    if (cfg.explain) out["explain"] = explain_json(q, d, inst.poset);
    emit(cfg, out.dump(2) + "\n");
  } else if (cfg.format == "text" || cfg.format.empty()) {
    std::string text = dc::compute_text(inst, inv);
    if (report) {
      for (const auto& c : report->checks) {
        text += "check " + c.name + ": " + (c.pass ? "pass" : "FAIL " + c.detail) + "\n";
      }
    }
    if (cfg.explain) text += explain_text(q, d, inst.poset);
    emit(cfg, text);
  } else {
    throw dc::ParseError("compute supports -f text|json");
  }
  if (report && !report->passed()) {
    std::cerr << "mismatch: " << report->first_failure()->name << ": "
              << report->first_failure()->detail << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

std::string lattice_text(const dc::FlipPoset& p, const dc::LatticeReport& r) {
  if (!r.is_lattice) {
    std::string s = "not a lattice";
    if (r.offending_pair) {
      s += ", no meet or join for " + label(p.elements[r.offending_pair->first].e) +
           " and " + label(p.elements[r.offending_pair->second].e);
    }
    return s;
  }
  if (r.distributive) return "distributive lattice";
  static const char* kNames[] = {"bottom", "a", "b", "c", "top"};
  std::string s = "non-distributive, " + r.witness_kind + " witness:";
  for (size_t i = 0; i < r.witness.size(); ++i) {
    s += std::string(i ? ", " : " ") + kNames[i] + "=" + label(p.elements[r.witness[i]].e);
  }
  return s;
}

int cmd_poset(const RunConfig& cfg) {
  const dc::Quiver q = dc::parse_quiver(cfg.quiver);
  const dc::Root d = dc::parse_root(cfg.root);
  const dc::DimerInstance inst = dc::build_instance(q, d);
  std::optional<dc::LatticeReport> lat;
  if (cfg.lattice) lat = dc::is_distributive(inst.poset);
  const dc::VarContext u = dc::VarContext::U(q.n);

  if (cfg.format == "json") {
    json out = dc::poset_json(inst.poset);
    if (lat) {
      out["lattice"] = {{"is_lattice", lat->is_lattice},
                        {"distributive", lat->distributive},
                        {"witness_kind", lat->witness_kind},
                        {"witness", lat->witness},
                        {"summary", lattice_text(inst.poset, *lat)}};
    }
    emit(cfg, out.dump(2) + "\n");
  } else if (cfg.format == "dot" || cfg.format.empty()) {
    std::string dot = dc::poset_dot(inst.poset, u);
    if (lat) dot = "// " + lattice_text(inst.poset, *lat) + "\n" + dot;
    emit(cfg, dot);
  } else if (cfg.format == "text") {
    std::ostringstream os;
    os << inst.poset.elements.size() << " elements, " << inst.poset.covers.size()
       << " covers\n";
    for (const auto& el : inst.poset.elements) {
      os << "rank " << el.rank << "  " << (1L << el.cycles) << "*" << label(el.e) << "\n";
    }
    if (lat) os << lattice_text(inst.poset, *lat) << "\n";
    emit(cfg, os.str());
  } else {
    throw dc::ParseError("poset supports -f dot|json|text");
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const std::vector<int> ns = parse_n_range(cfg.n_range);
  const dc::OracleSelection oracles = parse_oracles(cfg.oracle);

  std::vector<dc::Quiver> tasks;
  for (int n : ns) {
    for (auto& q : dc::enumerate_orientations(n)) tasks.push_back(std::move(q));
  }
  std::vector<std::vector<dc::InstanceReport>> results(tasks.size());
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
  std::atomic<size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
          results[i] = dc::verify_orientation(tasks[i], oracles);
        }
      });
    }
  }

  std::map<int, std::pair<int, int>> per_n;  // n -> (instances, passed)
  json failures = json::array();
  const dc::InstanceReport* first = nullptr;
  for (const auto& batch : results) {
    for (const auto& r : batch) {
      auto& [count, passed] = per_n[r.quiver.n];
      ++count;
      if (r.passed()) {
        ++passed;
        continue;
      }
      if (!first) first = &r;
      json checks = json::array();
      for (const auto& c : r.checks) {
        if (!c.pass) checks.push_back({{"name", c.name}, {"detail", c.detail}});
      }
      failures.push_back(
          {{"quiver", r.quiver.to_string()}, {"d", r.d}, {"failed", checks}});
    }
  }

  if (cfg.format == "json") {
    json out;
    out["schema"] = dc::kJsonSchema;
    json summary = json::array();
    for (const auto& [n, cp] : per_n) {
      summary.push_back({{"n", n}, {"instances", cp.first}, {"passed", cp.second}});
    }
    out["summary"] = summary;
    out["failures"] = failures;
    emit(cfg, out.dump(2) + "\n");
  } else if (cfg.format == "text" || cfg.format.empty()) {
    std::ostringstream os;
    for (const auto& [n, cp] : per_n) {
      os << "n=" << n << ": " << cp.first << " instances, " << cp.second << " passed\n";
    }
    if (!failures.empty()) os << failures.dump(2) << "\n";
    emit(cfg, os.str());
  } else {
    throw dc::ParseError("verify supports -f text|json");
  }
  if (first) {
    const auto* c = first->first_failure();
    std::cerr << "first failure: " << first->quiver.to_string() << " d="
              << dc::format_vector(first->d) << " " << c->name << ": " << c->detail
              << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed dimer model for type D cluster algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_instance = [&](CLI::App* sub, bool root_required) {
    sub->add_option("-q,--quiver", cfg.quiver, "quiver, e.g. \"n=4; 1>0,1>2,1>3\"")
        ->required();
    auto* r = sub->add_option("-d,--root", cfg.root, "positive root, e.g. 1,1,2,1,1");
    if (root_required) r->required();
  };
  auto add_output = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("-f,--format", cfg.format, formats);
    sub->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  };

  CLI::App* basegraph = app.add_subcommand("basegraph", "export the base graph");
  add_instance(basegraph, false);
  add_output(basegraph, "dot|json");

  CLI::App* compute = app.add_subcommand("compute", "F-polynomial, g-vector, Laurent expansion");
  add_instance(compute, true);
  add_output(compute, "text|json");
  compute->add_option("--oracle", cfg.oracle, "cross-check against tran,mutation");
  compute->add_flag("--explain", cfg.explain, "list Tran's conditions for every e");

  CLI::App* poset = app.add_subcommand("poset", "flip poset Hasse diagram");
  add_instance(poset, true);
  add_output(poset, "dot|json|text");
  poset->add_flag("--lattice", cfg.lattice, "lattice and distributivity diagnostics");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive cross-check");
  verify->add_option("--n", cfg.n_range, "rank or range, e.g. 4, 4-5")->required();
  auto* oracle_opt = verify->add_option("--oracle", cfg.oracle, "subset of tran,mutation");
  add_output(verify, "text|json");
  verify->add_option("-j,--jobs", cfg.jobs, "worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*basegraph) return cmd_basegraph(cfg);
    if (*compute) return cmd_compute(cfg);
    if (*poset) return cmd_poset(cfg);
    if (oracle_opt->count() == 0) cfg.oracle = "tran,mutation";
    return cmd_verify(cfg);
  } catch (const dc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dc::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
