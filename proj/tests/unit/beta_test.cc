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
#include "splitrephrase/beta.h"

namespace splitrephrase {
namespace {

RatingRecord rating(const std::string& rewrite, bool correct) {
  RatingRecord r;
  r.rewrite_id = rewrite;
  r.sensical = 5;
  r.grammatical = correct ? 5 : 4;
  return r;
}

std::vector<RatingRecord> group(const std::string& id, int correct) {
  std::vector<RatingRecord> out;
  for (int i = 0; i < 3; ++i) out.push_back(rating(id, i < correct));
  return out;
}

TEST(FitBeta, LaplaceSmoothedShapes) {
  const auto f = fit_beta(3, 16, 16);
  EXPECT_DOUBLE_EQ(f.alpha, 17.0);
  EXPECT_DOUBLE_EQ(f.beta, 1.0);
  const auto empty = fit_beta(0, 0, 0);
  EXPECT_DOUBLE_EQ(empty.mean(), 0.5);
  EXPECT_THROW(fit_beta(0, 2, 3), Error);
  EXPECT_THROW(fit_beta(0, 2, -1), Error);
}

TEST(FitBeta, MeanIsRuleOfSuccession) {
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_DOUBLE_EQ(fit_beta(0, n, k).mean(), (k + 1.0) / (n + 2.0));
    }
  }
}

TEST(BetaQuantile, FrozenOracleValues) {
  // Independently computed inverse CDFs.
  EXPECT_NEAR(beta_quantile(fit_beta(3, 16, 16), 0.1), 0.8733261623828433, 1e-9);
  EXPECT_NEAR(beta_quantile(fit_beta(0, 16, 0), 0.9), 0.12667383761715667, 1e-9);
  EXPECT_NEAR(beta_quantile(fit_beta(1, 6, 2), 0.5), 0.3641160864480825, 1e-9);
  EXPECT_NEAR(beta_cdf(fit_beta(1, 6, 2), 0.3), 0.3529305, 1e-9);
  EXPECT_THROW(beta_quantile(fit_beta(0, 1, 1), 0.0), Error);
  EXPECT_THROW(beta_quantile(fit_beta(0, 1, 1), 1.0), Error);
}

TEST(BetaQuantile, MonotoneInQAndInvertsCdf) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    const int k = std::uniform_int_distribution<int>(0, n)(rng);
    const auto f = fit_beta(0, n, k);
    double prev = 0.0;
    for (double q = 0.05; q < 1.0; q += 0.05) {
      const double x = beta_quantile(f, q);
      EXPECT_GE(x, prev);
      EXPECT_NEAR(beta_cdf(f, x), q, 1e-8);
      prev = x;
    }
    EXPECT_LE(beta_quantile(f, 0.1), beta_quantile(f, 0.9));
  }
}

TEST(BetaPdf, IntegratesToOneAndHandlesEndpoints) {
  for (auto [n, k] : {std::pair{0, 0}, {16, 16}, {16, 0}, {9, 4}}) {
    const auto f = fit_beta(0, n, k);
    double area = 0.0;
    const int steps = 20000;
    for (int i = 0; i < steps; ++i) {
      area += 0.5 * (beta_pdf(f, double(i) / steps) + beta_pdf(f, double(i + 1) / steps)) /
              steps;
    }
    EXPECT_NEAR(area, 1.0, 1e-3);
  }
  EXPECT_DOUBLE_EQ(beta_pdf(fit_beta(0, 16, 16), 1.0), 17.0);
  EXPECT_DOUBLE_EQ(beta_pdf(fit_beta(0, 16, 16), 0.0), 0.0);
  EXPECT_DOUBLE_EQ(beta_pdf(fit_beta(0, 1, 1), 1.5), 0.0);
}

TEST(BucketAndFit, CountsCorrectCrowdRatings) {
  std::map<std::string, std::vector<RatingRecord>> crowd = {
      {"a", group("a", 3)}, {"b", group("b", 3)}, {"c", group("c", 0)},
      {"d", group("d", 2)}, {"e", group("e", 1)}};
  std::map<std::string, bool> expert = {
      {"a", true}, {"b", false}, {"c", false}, {"d", true}};
  const auto fits = bucket_and_fit(crowd, expert);
  EXPECT_EQ(fits[3].support_count, 2);
  EXPECT_EQ(fits[3].success_count, 1);
  EXPECT_EQ(fits[2].support_count, 1);
  EXPECT_EQ(fits[1].support_count, 0);  // "e" has no expert verdict
  EXPECT_EQ(fits[0].support_count, 1);
  EXPECT_EQ(fits[0].success_count, 0);
  for (int b = 0; b < kBucketCount; ++b) EXPECT_EQ(fits[b].bucket, b);
}

TEST(BucketAndFit, RejectsBadGroupsAndOrphans) {
  std::map<std::string, std::vector<RatingRecord>> crowd = {{"a", group("a", 3)}};
  crowd["a"].pop_back();
  try {
    bucket_and_fit(crowd, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos);
  }
  crowd["a"] = group("a", 3);
  EXPECT_THROW(bucket_and_fit(crowd, {{"zzz", true}}), Error);
}

}  // namespace
}  // namespace splitrephrase
