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

// Conventional ground-space metrics: score an artifact by its distance to
// the prompt's ground vector (context-conditioned) or to a fixed ideal
// prior (context-free). Scores are negated distances, so higher is better.

#ifndef SEMJUDGE_BASELINE_SCORERS_H_
#define SEMJUDGE_BASELINE_SCORERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semjudge::baseline {

struct GroundVector {
  std::vector<double> values;
  std::string space_id;
};

struct GroundPrior {
  GroundVector vector;
};

enum class Distance { kCosine, kEuclidean };
std::string_view DistanceName(Distance distance);
std::optional<Distance> DistanceFromString(std::string_view name);

// Throws Error(kInvalidArgument) on space or length mismatch, non-finite or
// empty vectors, and zero vectors under the cosine distance.
double GroundDistance(const GroundVector& a, const GroundVector& b,
                      Distance distance);

double ContextConditionedScore(const GroundVector& prompt_ground,
                               const GroundVector& artifact_ground,
                               Distance distance = Distance::kCosine);

double ContextFreeScore(const GroundPrior& prior,
                        const GroundVector& artifact_ground,
                        Distance distance = Distance::kCosine);

enum class Verdict { kA, kB, kTie };
std::string_view VerdictName(Verdict verdict);

inline constexpr double kDefaultTieEpsilon = 1e-9;

Verdict ScoreToVerdict(double score_a, double score_b,
                       double tie_epsilon = kDefaultTieEpsilon);

}  // namespace semjudge::baseline

#endif  // SEMJUDGE_BASELINE_SCORERS_H_
