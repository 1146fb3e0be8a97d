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

#include "dimercluster/tran.h"

#include "gtest/gtest.h"
#include "test_support.h"

namespace dimercluster {
namespace {

using ::dimercluster::testing::kD5Quiver;
using ::dimercluster::testing::kD5Root;
using ::dimercluster::testing::kD6Quiver;
using ::dimercluster::testing::kD6Root;
using ::dimercluster::testing::kD6WeightQuiver;
using ::dimercluster::testing::parse_poly;

bool is_power_of_two(const mpz_class& c) {
  return c > 0 && mpz_popcount(c.get_mpz_t()) == 1;
}

TEST(BoxVectorsTest, SizeIsProductOfDPlusOne) {
  EXPECT_EQ(box_vectors({1, 1, 2, 1, 1}).size(), 48u);
  EXPECT_EQ(box_vectors({0, 1, 0, 0}).size(), 2u);
}

TEST(AcceptableTest, ArrowCondition) {
  const Quiver q = parse_quiver("n=4; 1>0,1>2,1>3");
  const Root d = {1, 1, 1, 1};
  // 1 -> 0 needs e_1 - e_0 <= max(d_1 - d_0, 0) = 0.
  EXPECT_FALSE(is_acceptable(q, d, {0, 1, 0, 0}));
  EXPECT_TRUE(is_acceptable(q, d, {1, 0, 0, 0}));
  EXPECT_TRUE(is_acceptable(q, d, {1, 1, 1, 1}));
}

TEST(CriticalityTest, TwoCriticalArrowsAtAComponent) {
  const Quiver q = parse_quiver(kD6Quiver);
  const CriticalityReport r = criticality(q, kD6Root, {0, 0, 1, 1, 0, 0});
  EXPECT_TRUE(r.acceptable);
  EXPECT_EQ(r.s, std::vector<int>({2, 3}));
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0], std::vector<int>({2, 3}));
  EXPECT_EQ(r.nu, std::vector<int>({2}));
  EXPECT_FALSE(r.supported());
  EXPECT_EQ(r.coefficient(), 0);
}

TEST(CriticalityTest, FreeComponentDoublesTheCoefficient) {
  const Quiver q = parse_quiver(kD6WeightQuiver);
  const CriticalityReport r = criticality(q, kD6Root, {0, 0, 1, 2, 1, 1});
  EXPECT_TRUE(r.supported());
  EXPECT_EQ(r.s, std::vector<int>({2}));
  EXPECT_EQ(r.nu, std::vector<int>({0}));
  EXPECT_EQ(r.coefficient(), 2);
}

TEST(TranFTest, SimpleRoots) {
  for (const Quiver& q : enumerate_orientations(5)) {
    for (int k = 0; k < 5; ++k) {
      Root d(5, 0);
      d[k] = 1;
      LaurentPoly expect = LaurentPoly::constant(VarContext::U(5), 1) +
                           LaurentPoly::variable(VarContext::U(5), k);
      EXPECT_EQ(tran_f_polynomial(q, d), expect);
    }
  }
}

TEST(TranFTest, D5Instance) {
  const VarContext u = VarContext::U(5);
  EXPECT_EQ(tran_f_polynomial(parse_quiver(kD5Quiver), kD5Root),
            parse_poly(u,
                       "1 + u0 + u4 + u0*u1 + u0*u4 + u2*u4 + u0*u1*u4 + u0*u1*u2 + "
                       "u0*u2*u4 + 2*u0*u1*u2*u4 + u0*u1*u2*u3*u4 + u0*u1*u2^2*u4 + "
                       "u0*u1*u2^2*u3*u4"));
}

TEST(TranFTest, CoefficientsArePowersOfTwoWithUnitEnds) {
  for (int n = 4; n <= 6; ++n) {
    for (const Quiver& q : enumerate_orientations(n)) {
      for (const Root& d : positive_roots(n)) {
        const LaurentPoly f = tran_f_polynomial(q, d);
        EXPECT_EQ(f.coefficient(IntVector(n, 0)), 1);
        EXPECT_EQ(f.coefficient(d), 1);
        for (const auto& [e, c] : f.terms()) EXPECT_TRUE(is_power_of_two(c));
      }
    }
  }
}

TEST(TranGTest, KnownVectors) {
  EXPECT_EQ(tran_g_vector(parse_quiver(kD5Quiver), kD5Root), IntVector({-1, 0, 0, 1, -1}));
  EXPECT_EQ(tran_g_vector(parse_quiver(kD6WeightQuiver), kD6Root),
            IntVector({-1, 2, 0, 0, -1, -1}));
}

TEST(TranGTest, SimpleRootCountsIncomingArrows) {
  // g(e_k) = -e_k + sum over arrows j -> k of e_j.
  const Quiver q = parse_quiver("n=4; 1>0,1>2,3>1");
  EXPECT_EQ(tran_g_vector(q, {0, 1, 0, 0}), IntVector({0, -1, 0, 1}));
  EXPECT_EQ(tran_g_vector(q, {1, 0, 0, 0}), IntVector({-1, 1, 0, 0}));
  EXPECT_EQ(tran_g_vector(q, {0, 0, 0, 1}), IntVector({0, 0, 0, -1}));
}

}  // namespace
}  // namespace dimercluster
