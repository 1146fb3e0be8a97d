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

#ifndef DIMERCLUSTER_EXPORT_H_
#define DIMERCLUSTER_EXPORT_H_

#include <string>

#include "json.hpp"

#include "dimercluster/base_graph.h"
#include "dimercluster/flip_poset.h"
#include "dimercluster/invariants.h"
#include "dimercluster/laurent.h"

namespace dimercluster {

inline constexpr int kJsonSchema = 1;

// `nodes` and `config` may be null. With nodes, node vertices carry a
// "node" attribute of "red", "blue" or "green".
nlohmann::json base_graph_json(const BaseGraph& g, const NodeSet* nodes,
                               const MixedDimer* config);
std::string base_graph_dot(const BaseGraph& g, const NodeSet* nodes,
                           const MixedDimer* config);

nlohmann::json poset_json(const FlipPoset& p);
// Nodes are labelled by the monomial u^e, with the 2^c weight when c > 0.
std::string poset_dot(const FlipPoset& p, const VarContext& ctx);

nlohmann::json laurent_json_u(const LaurentPoly& f);   // [{e, coeff}]
nlohmann::json laurent_json_xy(const LaurentPoly& p);  // [{x_exp, y_exp, coeff}]

nlohmann::json compute_json(const DimerInstance& inst,
                            const ClusterInvariants& inv);
std::string compute_text(const DimerInstance& inst,
                         const ClusterInvariants& inv);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_EXPORT_H_
