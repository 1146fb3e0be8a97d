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

#ifndef DIMERCLUSTER_VERIFY_H_
#define DIMERCLUSTER_VERIFY_H_

#include <string>
#include <vector>

#include "dimercluster/mutation.h"
#include "dimercluster/quiver.h"

namespace dimercluster {

struct OracleSelection {
  bool tran = true;
  bool mutation = true;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // empty when passing
};

struct InstanceReport {
  Quiver quiver;
  Root d;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
};

// Check names, in the order they are reported:
//   poset_shape       unique bottom M_- and top, both weight 1; rank = |e|
//   separation        laurent_expansion == F(y_hat) * x^g
//   roundtrip_config  config_from_e(e_from_config(D)) == D on the poset
//   f_tran, g_tran    dimer F and g against Tran        (tran)
//   roundtrip_e       e_from_config(config_from_e(e)) == e, supported e
//   closed_form       config_from_e agrees with weighted flips, supported e
//   coefficient_law   cycles(D) == #components with nu = 0   (tran)
//   f_mutation, g_mutation, laurent_mutation               (mutation)
// `atlas` must be non-null when oracles.mutation is set.
InstanceReport verify_instance(const Quiver& q, const Root& d,
                               const OracleSelection& oracles,
                               const ClusterAtlas* atlas);

// All positive roots for one orientation, building the atlas once.
std::vector<InstanceReport> verify_orientation(const Quiver& q,
                                               const OracleSelection& oracles);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_VERIFY_H_
