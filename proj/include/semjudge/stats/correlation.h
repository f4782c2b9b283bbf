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

#ifndef SEMJUDGE_STATS_CORRELATION_H_
#define SEMJUDGE_STATS_CORRELATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semjudge::stats {

// Kendall's tau-b with the usual tie corrections, computed in O(n log n)
// (Knight's merge-sort algorithm). Throws Error(kUndefined) when either
// side is entirely tied, Error(kInvalidArgument) on length mismatch or n < 2.
double KendallTauB(std::span<const double> x, std::span<const double> y);

// Average (mid-) ranks, 1-based.
std::vector<double> MidRanks(std::span<const double> values);

// Pearson correlation of mid-ranks.
double SpearmanRho(std::span<const double> x, std::span<const double> y);

// Lin's concordance correlation with population (1/n) moments.
double LinCcc(std::span<const double> x, std::span<const double> y);

// Judgments are encoded +1 (first image preferred), -1 (second) and 0
// (abstain, entering tau-b as a tie).
struct PromptTau {
  std::string prompt_id;
  std::size_t n_tasks = 0;
  std::optional<double> tau;  // nullopt when undefined for this prompt
};

struct KrccSummary {
  double mean_tau = 0.0;
  std::size_t prompts_used = 0;
  std::size_t prompts_excluded = 0;
  std::vector<PromptTau> per_prompt;  // sorted by prompt_id
};

// Tau-b within each prompt group, averaged over prompts where it is defined.
// With `pooled` set, a single tau-b over all tasks is reported instead.
// Throws Error(kUndefined) when no task is covered by both maps or no prompt
// yields a defined tau.
KrccSummary PerPromptKrcc(const std::map<std::string, int>& evaluator,
                          const std::map<std::string, int>& human,
                          const std::map<std::string, std::string>& grouping,
                          bool pooled = false);

}  // namespace semjudge::stats

#endif  // SEMJUDGE_STATS_CORRELATION_H_
