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

#include "dimercluster/invariants.h"

#include "gtest/gtest.h"
#include "dimercluster/errors.h"
#include "dimercluster/mutation.h"
#include "test_support.h"

namespace dimercluster {
namespace {

using ::dimercluster::testing::kD5Quiver;
using ::dimercluster::testing::kD5Root;
using ::dimercluster::testing::kD6Quiver;
using ::dimercluster::testing::kD6Root;
using ::dimercluster::testing::kD6WeightQuiver;
using ::dimercluster::testing::parse_poly;

const VarContext kXY5 = VarContext::XY(5);

TEST(YHatTest, D5Values) {
  const auto y = y_hat(parse_quiver(kD5Quiver));
  ASSERT_EQ(y.size(), 5u);
  EXPECT_EQ(y[0], parse_poly(kXY5, "y0*x1^-1"));
  EXPECT_EQ(y[1], parse_poly(kXY5, "y1*x0*x2^-1"));
  EXPECT_EQ(y[2], parse_poly(kXY5, "y2*x1*x3^-1*x4"));
  EXPECT_EQ(y[3], parse_poly(kXY5, "y3*x2"));
  EXPECT_EQ(y[4], parse_poly(kXY5, "y4*x2^-1"));
}

TEST(InvariantsTest, D5Instance) {
  const ClusterInvariants inv = compute_invariants(parse_quiver(kD5Quiver), kD5Root);
  EXPECT_EQ(inv.f_poly.num_terms(), 13u);
  EXPECT_EQ(inv.g_vec, IntVector({-1, 0, 0, 1, -1}));
  EXPECT_EQ(inv.laurent.coefficient({-1, 0, 0, 1, -1, 0, 0, 0, 0, 0}), 1);
  EXPECT_EQ(inv.laurent.coefficient({0, 0, -2, 0, 0, 1, 1, 1, 0, 1}), 2);
}

TEST(InvariantsTest, MinimalMatchingWeight) {
  const DimerInstance inst = build_instance(parse_quiver(kD6WeightQuiver), kD6Root);
  EXPECT_EQ(height_monomial(inst.graph, inst.weights, inst.minimal),
            parse_poly(VarContext::XY(6), "x1^3*x2^2*x3^2"));
  EXPECT_EQ(g_vector(inst), IntVector({-1, 2, 0, 0, -1, -1}));
}

TEST(InvariantsTest, RejectsNonRoots) {
  EXPECT_THROW(build_instance(parse_quiver(kD5Quiver), {9, 9, 9, 9, 9}), SemanticError);
  EXPECT_THROW(build_instance(parse_quiver(kD6Quiver), kD5Root), SemanticError);
}

TEST(InvariantsTest, SimpleRootIsOneExchange) {
  for (const Quiver& q : enumerate_orientations(5)) {
    const PrincipalSeed s0 = initial_principal_seed(q);
    for (int k = 0; k < 5; ++k) {
      Root d(5, 0);
      d[k] = 1;
      EXPECT_EQ(laurent_expansion(build_instance(q, d)), mutate_seed(s0, k).cluster[k])
          << q.to_string() << " k=" << k;
    }
  }
}

class PropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(PropertyTest, SeparationOfAdditionsAndPositivity) {
  const int n = GetParam();
  for (const Quiver& q : enumerate_orientations(n)) {
    for (const Root& d : positive_roots(n)) {
      SCOPED_TRACE(q.to_string() + " " + format_vector(d));
      const DimerInstance inst = build_instance(q, d);
      const ClusterInvariants inv = compute_invariants(inst);
      EXPECT_EQ(inv.laurent, separation_form(q, inv.f_poly, inv.g_vec));

      mpz_class weight_sum = 0, f_at_one = 0;
      for (const auto& el : inst.poset.elements) weight_sum += mpz_class(1) << el.cycles;
      for (const auto& [e, c] : inv.f_poly.terms()) {
        f_at_one += c;
        EXPECT_EQ(mpz_popcount(c.get_mpz_t()), 1u);
      }
      EXPECT_EQ(f_at_one, weight_sum);

      // Setting y = 1 leaves a subtraction-free Laurent polynomial in x.
      std::vector<LaurentPoly> images;
      const VarContext xy = VarContext::XY(n);
      for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::variable(xy, i));
      for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::constant(xy, 1));
      const LaurentPoly at_one = inv.laurent.substitute(images, xy);
      for (const auto& [e, c] : at_one.terms()) {
        EXPECT_GT(c, 0);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallRanks, PropertyTest, ::testing::Values(4, 5, 6));

}  // namespace
}  // namespace dimercluster
