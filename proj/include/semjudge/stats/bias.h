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

// One-sided test of whether aligned instances carry higher net iconicity
// than misaligned ones. `aligned` holds 1 for instances where the
// evaluator agreed with the human majority and 0 otherwise.

#ifndef SEMJUDGE_STATS_BIAS_H_
#define SEMJUDGE_STATS_BIAS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace semjudge::stats {

double IconicityDelta(std::span<const double> ni, std::span<const int> aligned);

// Add-one permutation p-value for H1: delta > 0.
double PermutationTestDelta(std::span<const double> ni,
                            std::span<const int> aligned, std::size_t n_perm,
                            std::uint64_t seed);

struct BootstrapBound {
  double lower = 0.0;
  std::size_t redraws = 0;  // resamples discarded for an empty subset
};

// Percentile lower bound of the one-sided (1 - alpha) interval [lower, inf).
BootstrapBound BootstrapLowerCi(std::span<const double> ni,
                                std::span<const int> aligned,
                                std::size_t n_boot, double alpha,
                                std::uint64_t seed);

// Delta over the pooled sample standard deviation.
double CohensD(std::span<const double> ni, std::span<const int> aligned);

struct BiasTestOptions {
  std::size_t n_perm = 10000;
  std::size_t n_boot = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
};

struct BiasTestResult {
  double delta = 0.0;
  double p_value = 1.0;
  double ci_lower = 0.0;
  std::optional<double> cohens_d;  // nullopt when a subset has < 2 items
                                   // or the pooled variance is zero
  std::size_t n_aligned = 0;
  std::size_t n_misaligned = 0;
  std::size_t bootstrap_redraws = 0;
};

BiasTestResult RunBiasTest(std::span<const double> ni,
                           std::span<const int> aligned,
                           const BiasTestOptions& options = {});

// "**" for p < 0.01, "*" for p < 0.05, otherwise empty.
std::string SignificanceStars(double p_value);

}  // namespace semjudge::stats

#endif  // SEMJUDGE_STATS_BIAS_H_
