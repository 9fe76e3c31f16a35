// Copyright 2026 The Split-Rephrase Toolkit Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "splitrephrase/annotation.h"
#include "splitrephrase/correlation.h"
#include "test_support.h"

namespace splitrephrase {
namespace {

using V = std::vector<double>;

TEST(AverageRanks, TiesShareMeanRank) {
  EXPECT_EQ(average_ranks(V{10, 20, 20, 5}), V({2, 3.5, 3.5, 1}));
  EXPECT_EQ(average_ranks(V{1, 1, 1}), V({2, 2, 2}));
}

TEST(Spearman, FrozenTiedExample) {
  const V x = {1, 2, 2, 3};
  const V y = {1, 3, 2, 4};
  const auto r = spearman(x, y, PValueMethod::kTApproximation);
  EXPECT_NEAR(r.rho, 0.9486832980505139, 1e-12);
  EXPECT_NEAR(r.p_value, 0.05131670194948612, 1e-9);
  EXPECT_FALSE(r.significant);
  EXPECT_EQ(r.n, 4u);
}

TEST(Spearman, FrozenTApproximationAboveExactLimit) {
  V x, y;
  for (int i = 1; i <= 12; ++i) x.push_back(i);
  y = {2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11};
  const auto r = spearman(x, y);
  EXPECT_EQ(r.method, PValueMethod::kTApproximation);
  EXPECT_NEAR(r.rho, 0.9580419580419581, 1e-12);
  EXPECT_NEAR(r.p_value, 9.5435818268384e-07, 1e-12);
  EXPECT_TRUE(r.significant);
}

TEST(Spearman, AutomaticUsesExactForSmallN) {
  const V x = {1, 2, 3, 4, 5};
  const V y = {1, 2, 3, 4, 5};
  const auto r = spearman(x, y);
  EXPECT_EQ(r.method, PValueMethod::kExactPermutation);
  EXPECT_DOUBLE_EQ(r.rho, 1.0);
  EXPECT_NEAR(r.p_value, 2.0 / 120.0, 1e-12);
}

TEST(Spearman, Errors) {
  EXPECT_THROW(spearman(V{1, 2, 3}, V{1, 2}), Error);
  EXPECT_THROW(spearman(V{1, 2}, V{1, 2}), Error);
  EXPECT_THROW(spearman(V{1, 1, 1}, V{1, 2, 3}), Error);
  V big(11);
  for (size_t i = 0; i < big.size(); ++i) big[i] = double(i);
  EXPECT_THROW(spearman(big, big, PValueMethod::kExactPermutation), Error);
}

TEST(SpearmanProperties, ExactMatchesPermutationOracle) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> value(0, 4);
  int checked = 0;
  while (checked < 60) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    V x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = value(rng);
      y[i] = value(rng);
    }
    CorrelationResult r;
    try {
      r = spearman(x, y, PValueMethod::kExactPermutation);
    } catch (const Error&) {
      continue;  // constant draw
    }
    ++checked;
    EXPECT_NEAR(r.p_value, testing::oracle_permutation_p(x, y), 1e-12);
  }
}

TEST(SpearmanProperties, MonotoneInvarianceAndAntisymmetry) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 30)(rng);
    V x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = g(rng);
      y[i] = x[i] + g(rng);
    }
    const auto base = spearman(x, y);
    V x_exp(n), y_neg(n);
    for (int i = 0; i < n; ++i) {
      x_exp[i] = std::exp(x[i]) * 3.0 + 1.0;
      y_neg[i] = -y[i];
    }
    EXPECT_NEAR(spearman(x_exp, y).rho, base.rho, 1e-12);
    const auto flipped = spearman(x, y_neg);
    EXPECT_NEAR(flipped.rho, -base.rho, 1e-12);
    EXPECT_NEAR(flipped.p_value, base.p_value, 1e-9);
    EXPECT_NEAR(spearman(y, x).rho, base.rho, 1e-12);
    EXPECT_GE(base.rho, -1.0);
    EXPECT_LE(base.rho, 1.0);
    EXPECT_GE(base.p_value, 0.0);
    EXPECT_LE(base.p_value, 1.0);
    EXPECT_EQ(base.significant, base.p_value < kSignificanceLevel);
  }
}

}  // namespace
}  // namespace splitrephrase
