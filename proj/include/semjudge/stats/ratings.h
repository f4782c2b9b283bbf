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

#ifndef SEMJUDGE_STATS_RATINGS_H_
#define SEMJUDGE_STATS_RATINGS_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semjudge/error.h"

namespace semjudge::stats {

struct PairOutcome {
  enum class Winner { kI, kJ };

  std::string model_i;
  std::string model_j;
  Winner winner = Winner::kI;
  std::string prompt_id;
};

struct RatingTable {
  std::map<std::string, double> ratings;  // Elo scale, mean 1500
  bool regularized = false;
  std::size_t iterations = 0;
};

struct FitOptions {
  // Adds one virtual half-win and half-loss between every pair of models,
  // which guarantees a finite maximum-likelihood estimate.
  bool regularize = false;
  double tolerance = 1e-10;
  std::size_t max_iterations = 200000;
};

class RatingFitError : public Error {
 public:
  enum class Kind { kDisconnected, kDivergent };

  RatingFitError(Kind kind, std::vector<std::vector<std::string>> groups,
                 const std::string& message)
      : Error(ErrorCode::kUndefined, message),
        kind_(kind),
        groups_(std::move(groups)) {}

  Kind kind() const { return kind_; }
  // kDisconnected: the connected components.
  // kDivergent: a single group holding the degenerate model(s).
  const std::vector<std::vector<std::string>>& groups() const {
    return groups_;
  }

 private:
  Kind kind_;
  std::vector<std::vector<std::string>> groups_;
};

// Bradley-Terry maximum likelihood via minorization-maximization, mapped to
// the Elo scale as 1500 + (400 / ln 10) * (theta - mean theta). The result
// depends only on the multiset of outcomes, not on their order.
RatingTable FitRatings(const std::vector<PairOutcome>& outcomes,
                       const FitOptions& options = {});

// Implied probability that a player rated r_i beats one rated r_j.
double WinProbability(double r_i, double r_j);

}  // namespace semjudge::stats

#endif  // SEMJUDGE_STATS_RATINGS_H_
