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

// Spearman rank correlation with a two-sided significance test.

#ifndef SPLITREPHRASE_CORRELATION_H_
#define SPLITREPHRASE_CORRELATION_H_

#include <span>
#include <string>
#include <vector>

namespace splitrephrase {

inline constexpr double kSignificanceLevel = 0.05;
inline constexpr size_t kExactPermutationLimit = 10;

enum class PValueMethod {
  kAutomatic,         // exact for n <= 10, t-approximation above
  kTApproximation,
  kExactPermutation,  // n <= 10 only
};

struct CorrelationResult {
  double rho = 0.0;
  double p_value = 1.0;
  bool significant = false;  // p_value < 0.05
  size_t n = 0;
  PValueMethod method = PValueMethod::kAutomatic;  // the one actually used
};

std::string to_string(PValueMethod method);

// 1-based ranks, ties get the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of the average ranks. Throws Error when lengths
// differ, n < 3, or either input is constant.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           PValueMethod method = PValueMethod::kAutomatic);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_CORRELATION_H_
