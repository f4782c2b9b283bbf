// Copyright 2026 The SemJudge Authors.
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

#include "semjudge/stats/bias.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "semjudge/error.h"
#include "semjudge/stats/rng.h"

namespace semjudge::stats {
namespace {

struct Split {
  std::size_t n1 = 0;
  std::size_t n0 = 0;
  double sum1 = 0.0;
  double sum0 = 0.0;
};

Split Check(std::span<const double> ni, std::span<const int> aligned) {
  if (ni.size() != aligned.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "iconicity inputs differ in length");
  }
  Split s;
  for (std::size_t k = 0; k < ni.size(); ++k) {
    if (aligned[k] != 0 && aligned[k] != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "alignment labels must be 0 or 1");
    }
    if (!std::isfinite(ni[k])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "net iconicity values must be finite");
    }
    if (aligned[k] == 1) {
      ++s.n1;
      s.sum1 += ni[k];
    } else {
      ++s.n0;
      s.sum0 += ni[k];
    }
  }
  if (s.n1 == 0 || s.n0 == 0) {
    throw Error(ErrorCode::kUndefined,
                s.n1 == 0 ? "no aligned instances" : "no misaligned instances");
  }
  return s;
}

double DeltaOf(const Split& s) {
  return s.sum1 / static_cast<double>(s.n1) -
         s.sum0 / static_cast<double>(s.n0);
}

// Type-7 (linear interpolation) sample quantile of sorted values.
double Quantile(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double IconicityDelta(std::span<const double> ni,
                      std::span<const int> aligned) {
  return DeltaOf(Check(ni, aligned));
}

double PermutationTestDelta(std::span<const double> ni,
                            std::span<const int> aligned, std::size_t n_perm,
                            std::uint64_t seed) {
  const Split s = Check(ni, aligned);
  if (n_perm == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_perm must be at least 1");
  }
  // For fixed subset sizes delta is increasing in the aligned-subset sum,
  // so permutations are compared on that sum. The tolerance absorbs
  // summation-order rounding so that exact ties count as ">=".
  double magnitude = 0.0;
  for (double v : ni) magnitude += std::abs(v);
  const double tolerance = 1e-10 * (1.0 + magnitude);

  std::vector<double> values(ni.begin(), ni.end());
  Rng rng(seed);
  std::size_t at_least = 0;
  for (std::size_t p = 0; p < n_perm; ++p) {
    // Partial Fisher-Yates: the first n1 slots form a uniform random subset.
    double sum1 = 0.0;
    for (std::size_t i = 0; i < s.n1; ++i) {
      const std::size_t j = i + rng.UniformIndex(values.size() - i);
      std::swap(values[i], values[j]);
      sum1 += values[i];
    }
    if (sum1 >= s.sum1 - tolerance) ++at_least;
  }
  return static_cast<double>(1 + at_least) / static_cast<double>(1 + n_perm);
}

BootstrapBound BootstrapLowerCi(std::span<const double> ni,
                                std::span<const int> aligned,
                                std::size_t n_boot, double alpha,
                                std::uint64_t seed) {
  Check(ni, aligned);
  if (n_boot == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_boot must be at least 1");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  }
  const std::size_t n = ni.size();
  const std::size_t max_redraws = 1000 * n_boot;
  Rng rng(seed);
  BootstrapBound bound;
  std::vector<double> deltas;
  deltas.reserve(n_boot);
  while (deltas.size() < n_boot) {
    Split s;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t pick = rng.UniformIndex(n);
      if (aligned[pick] == 1) {
        ++s.n1;
        s.sum1 += ni[pick];
      } else {
        ++s.n0;
        s.sum0 += ni[pick];
      }
    }
    if (s.n1 == 0 || s.n0 == 0) {
      if (++bound.redraws > max_redraws) {
        throw Error(ErrorCode::kUndefined,
                    "bootstrap: too many resamples with an empty subset");
      }
      continue;
    }
    deltas.push_back(DeltaOf(s));
  }
  std::sort(deltas.begin(), deltas.end());
  bound.lower = Quantile(deltas, alpha);
  return bound;
}

double CohensD(std::span<const double> ni, std::span<const int> aligned) {
  const Split s = Check(ni, aligned);
  if (s.n1 < 2 || s.n0 < 2) {
    throw Error(ErrorCode::kUndefined,
                "cohens_d needs at least 2 instances in each subset");
  }
  const double m1 = s.sum1 / static_cast<double>(s.n1);
  const double m0 = s.sum0 / static_cast<double>(s.n0);
  double ss1 = 0.0, ss0 = 0.0;
  for (std::size_t k = 0; k < ni.size(); ++k) {
    const double d = ni[k] - (aligned[k] == 1 ? m1 : m0);
    (aligned[k] == 1 ? ss1 : ss0) += d * d;
  }
  const double pooled =
      (ss1 + ss0) / static_cast<double>(s.n1 + s.n0 - 2);
  if (pooled <= 0.0) {
    throw Error(ErrorCode::kUndefined, "cohens_d: zero pooled variance");
  }
  return (m1 - m0) / std::sqrt(pooled);
}

BiasTestResult RunBiasTest(std::span<const double> ni,
                           std::span<const int> aligned,
                           const BiasTestOptions& options) {
  const Split s = Check(ni, aligned);
  BiasTestResult result;
  result.delta = DeltaOf(s);
  result.n_aligned = s.n1;
  result.n_misaligned = s.n0;
  result.p_value = PermutationTestDelta(ni, aligned, options.n_perm,
                                        options.seed);
  const BootstrapBound bound = BootstrapLowerCi(
      ni, aligned, options.n_boot, options.alpha, options.seed + 1);
  result.ci_lower = bound.lower;
  result.bootstrap_redraws = bound.redraws;
  try {
    result.cohens_d = CohensD(ni, aligned);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUndefined) throw;
  }
  return result;
}

std::string SignificanceStars(double p_value) {
  if (p_value < 0.01) return "**";
  if (p_value < 0.05) return "*";
  return "";
}

}  // namespace semjudge::stats
