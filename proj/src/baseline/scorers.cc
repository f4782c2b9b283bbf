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

#include "semjudge/baseline/scorers.h"

#include <algorithm>
#include <cmath>

#include "semjudge/error.h"

namespace semjudge::baseline {
namespace {

void CheckComparable(const GroundVector& a, const GroundVector& b) {
  if (a.space_id != b.space_id) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground vectors come from different spaces: '" + a.space_id +
                    "' vs '" + b.space_id + "'");
  }
  if (a.values.empty() || a.values.size() != b.values.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground vectors differ in length (" +
                    std::to_string(a.values.size()) + " vs " +
                    std::to_string(b.values.size()) + ")");
  }
  for (const auto* v : {&a.values, &b.values}) {
    for (double x : *v) {
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "ground vector has a non-finite entry");
      }
    }
  }
}

}  // namespace

std::string_view DistanceName(Distance distance) {
  return distance == Distance::kCosine ? "cosine" : "euclidean";
}

std::optional<Distance> DistanceFromString(std::string_view name) {
  if (name == "cosine") return Distance::kCosine;
  if (name == "euclidean") return Distance::kEuclidean;
  return std::nullopt;
}

double GroundDistance(const GroundVector& a, const GroundVector& b,
                      Distance distance) {
  CheckComparable(a, b);
  if (distance == Distance::kEuclidean) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      const double d = a.values[i] - b.values[i];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    na += a.values[i] * a.values[i];
    nb += b.values[i] * b.values[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cosine distance is undefined for a zero vector");
  }
  const double cosine = std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
  return 1.0 - cosine;
}

double ContextConditionedScore(const GroundVector& prompt_ground,
                               const GroundVector& artifact_ground,
                               Distance distance) {
  return -GroundDistance(prompt_ground, artifact_ground, distance);
}

double ContextFreeScore(const GroundPrior& prior,
                        const GroundVector& artifact_ground, Distance distance) {
  return -GroundDistance(prior.vector, artifact_ground, distance);
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kA: return "A";
    case Verdict::kB: return "B";
    case Verdict::kTie: return "Tie";
  }
  return "Tie";
}

Verdict ScoreToVerdict(double score_a, double score_b, double tie_epsilon) {
  if (!std::isfinite(score_a) || !std::isfinite(score_b)) {
    throw Error(ErrorCode::kInvalidArgument, "scores must be finite");
  }
  if (!(tie_epsilon >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tie epsilon must be >= 0");
  }
  if (score_a - score_b > tie_epsilon) return Verdict::kA;
  if (score_b - score_a > tie_epsilon) return Verdict::kB;
  return Verdict::kTie;
}

}  // namespace semjudge::baseline
