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

#ifndef DIMERCLUSTER_TRAN_H_
#define DIMERCLUSTER_TRAN_H_

#include <utility>
#include <vector>

#include "dimercluster/laurent.h"
#include "dimercluster/quiver.h"

namespace dimercluster {

// Arithmetic description of the F-polynomial support: an e-vector is
// supported iff 0 <= e <= d, every arrow is acceptable, and each component
// of S touches at most one critical arrow.
struct CriticalityReport {
  IntVector e;
  bool acceptable = false;
  std::vector<int> s;                         // {i : (d_i, e_i) = (2, 1)}
  std::vector<std::vector<int>> components;   // components of S
  std::vector<int> nu;                        // critical arrows per component
  std::vector<std::pair<int, int>> critical_arrows;

  bool supported() const;
  // 2^(number of components with nu = 0); zero when unsupported.
  long coefficient() const;
};

// Every arrow i -> j satisfies e_i - e_j <= max(d_i - d_j, 0).
// Throws SemanticError when e leaves the box [0, d].
bool is_acceptable(const Quiver& q, const Root& d, const IntVector& e);

CriticalityReport criticality(const Quiver& q, const Root& d,
                              const IntVector& e);

// Sum of coefficient() * u^e over the box.
LaurentPoly tran_f_polynomial(const Quiver& q, const Root& d);

// The g-vector in the convention where each arrow tail i -> j gains d_j.
IntVector tran_g_vector(const Quiver& q, const Root& d);

// Iterates the box [0, d] in lexicographic order.
std::vector<IntVector> box_vectors(const Root& d);

}  // namespace dimercluster

#endif  // DIMERCLUSTER_TRAN_H_
