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

#include "splitrephrase/beta.h"

#include <cmath>
#include <limits>

#include "splitrephrase/annotation.h"
#include "splitrephrase/special_functions.h"

namespace splitrephrase {

BetaFit fit_beta(int bucket, int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error("Beta fit needs 0 <= k <= n, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  }
  BetaFit fit;
  fit.bucket = bucket;
  fit.support_count = n;
  fit.success_count = k;
  fit.alpha = k + 1.0;
  fit.beta = n - k + 1.0;
  return fit;
}

std::array<BetaFit, kBucketCount> bucket_and_fit(
    const std::map<std::string, std::vector<RatingRecord>>& crowd,
    const std::map<std::string, bool>& expert_correct) {
  for (const auto& [rewrite_id, records] : crowd) {
    if (records.size() != kCrowdRatingsPerRewrite) {
      throw Error("rewrite '" + rewrite_id + "' has " +
                  std::to_string(records.size()) +
                  " crowd ratings, expected 3");
    }
  }
  std::array<int, kBucketCount> n{};
  std::array<int, kBucketCount> k{};
  for (const auto& [rewrite_id, correct] : expert_correct) {
    auto it = crowd.find(rewrite_id);
    if (it == crowd.end()) {
      throw Error("expert verdict for rewrite '" + rewrite_id +
                  "' has no crowd ratings");
    }
    int bucket = 0;
    for (const auto& r : it->second) bucket += is_correct(r);
    ++n[bucket];
    k[bucket] += correct;
  }
  std::array<BetaFit, kBucketCount> fits;
  for (int b = 0; b < kBucketCount; ++b) fits[b] = fit_beta(b, n[b], k[b]);
  return fits;
}

double beta_pdf(const BetaFit& fit, double x) {
  const double a = fit.alpha;
  const double b = fit.beta;
  if (x < 0.0 || x > 1.0) return 0.0;
  // Endpoints: finite only when the matching shape is >= 1.
  if (x == 0.0 || x == 1.0) {
    const double shape = x == 0.0 ? a : b;
    if (shape < 1.0) return std::numeric_limits<double>::infinity();
    if (shape > 1.0) return 0.0;
    const double other = x == 0.0 ? b : a;
    return other;  // Beta(1, c) density at 0 is c
  }
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  return std::exp(log_norm + (a - 1.0) * std::log(x) +
                  (b - 1.0) * std::log1p(-x));
}

double beta_cdf(const BetaFit& fit, double x) {
  return regularized_incomplete_beta(fit.alpha, fit.beta, x);
}

double beta_quantile(const BetaFit& fit, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error("Beta quantile needs 0 < q < 1");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (beta_cdf(fit, mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

nlohmann::json to_json(const BetaFit& fit) {
  return {{"bucket", fit.bucket},
          {"support_count", fit.support_count},
          {"success_count", fit.success_count},
          {"alpha", fit.alpha},
          {"beta", fit.beta}};
}

}  // namespace splitrephrase
