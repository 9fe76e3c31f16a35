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

// Crowd reliability: bucket expert-checked rewrites by how many of their three
// crowd ratings are correct, then fit a Laplace-smoothed Beta per bucket.

#ifndef SPLITREPHRASE_BETA_H_
#define SPLITREPHRASE_BETA_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitrephrase/ratings.h"

namespace splitrephrase {

inline constexpr int kBucketCount = 4;
inline constexpr size_t kCrowdRatingsPerRewrite = 3;

struct BetaFit {
  double alpha = 1.0;
  double beta = 1.0;
  int bucket = 0;
  int support_count = 0;  // n
  int success_count = 0;  // k

  double mean() const { return alpha / (alpha + beta); }
};

// Beta(k + 1, n - k + 1). Throws Error unless 0 <= k <= n.
BetaFit fit_beta(int bucket, int n, int k);

// Returns one fit per bucket 0..3, in bucket order. Throws Error naming the
// rewrite when a crowd group does not hold exactly three ratings, or when an
// expert verdict refers to a rewrite absent from the crowd data.
std::array<BetaFit, kBucketCount> bucket_and_fit(
    const std::map<std::string, std::vector<RatingRecord>>& crowd,
    const std::map<std::string, bool>& expert_correct);

double beta_pdf(const BetaFit& fit, double x);
double beta_cdf(const BetaFit& fit, double x);

// Inverse CDF by bisection to absolute tolerance 1e-9. Throws Error unless
// 0 < q < 1.
double beta_quantile(const BetaFit& fit, double q);

nlohmann::json to_json(const BetaFit& fit);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_BETA_H_
