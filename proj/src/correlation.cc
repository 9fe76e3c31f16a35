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

#include "splitrephrase/correlation.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "splitrephrase/annotation.h"
#include "splitrephrase/special_functions.h"

namespace splitrephrase {
namespace {

double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  const double r = sab / std::sqrt(saa * sbb);
  return std::clamp(r, -1.0, 1.0);
}

double t_approximation(double rho, size_t n) {
  const double df = static_cast<double>(n) - 2.0;
  if (std::fabs(rho) >= 1.0) return 0.0;
  const double t = rho * std::sqrt(df / (1.0 - rho * rho));
  return std::clamp(student_t_two_sided(t, df), 0.0, 1.0);
}

// Share of permutations of y's ranks whose |rho| reaches the observed one.
double exact_permutation(std::vector<double> rx, std::vector<double> ry,
                         double rho) {
  const size_t n = ry.size();
  const double threshold = std::fabs(rho) - 1e-12;
  size_t hits = 0;
  size_t total = 0;
  auto visit = [&] {
    ++total;
    if (std::fabs(pearson(rx, ry)) >= threshold) ++hits;
  };
  // Heap's algorithm, iterative; handles repeated (tied) ranks as distinct
  // positions so each of the n! orderings is counted once.
  std::vector<size_t> c(n, 0);
  visit();
  size_t i = 1;
  while (i < n) {
    if (c[i] < i) {
      std::swap(ry[i % 2 == 0 ? 0 : c[i]], ry[i]);
      visit();
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace

std::string to_string(PValueMethod method) {
  switch (method) {
    case PValueMethod::kAutomatic:
      return "automatic";
    case PValueMethod::kTApproximation:
      return "t-approximation";
    case PValueMethod::kExactPermutation:
      return "exact-permutation";
  }
  return "unknown";
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           PValueMethod method) {
  if (x.size() != y.size()) {
    throw Error("spearman: " + std::to_string(x.size()) + " vs " +
                std::to_string(y.size()) + " values");
  }
  if (x.size() < 3) throw Error("spearman: need at least 3 pairs");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v[0]; });
  };
  if (constant(x) || constant(y)) {
    throw Error("spearman: constant input, rho undefined");
  }
  CorrelationResult out;
  out.n = x.size();
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  out.rho = pearson(rx, ry);

  if (method == PValueMethod::kAutomatic) {
    method = out.n <= kExactPermutationLimit ? PValueMethod::kExactPermutation
                                             : PValueMethod::kTApproximation;
  }
  if (method == PValueMethod::kExactPermutation) {
    if (out.n > kExactPermutationLimit) {
      throw Error("spearman: exact permutation limited to n <= 10");
    }
    out.p_value = exact_permutation(rx, ry, out.rho);
  } else {
    out.p_value = t_approximation(out.rho, out.n);
  }
  out.method = method;
  out.significant = out.p_value < kSignificanceLevel;
  return out;
}

}  // namespace splitrephrase
