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

#ifndef SEMJUDGE_BENCH_RUNNER_H_
#define SEMJUDGE_BENCH_RUNNER_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/bench/benchmark.h"
#include "semjudge/bench/evaluators.h"

namespace semjudge::bench {

enum class Aggregation { kMajority, kFirst };

inline constexpr std::string_view kAggregationRule =
    "majority over repetitions, ties resolved by repetition 0";
inline constexpr std::string_view kFirstRule = "repetition 0 only";

std::string_view AggregationRule(Aggregation aggregation);
std::optional<Aggregation> AggregationFromString(std::string_view name);

struct RunOptions {
  std::size_t repetitions = 3;
  std::size_t parallelism = 1;
  std::uint64_t seed = 0;
  // Restrict 2AFC runs to tasks QC marked reliable.
  bool only_reliable = true;
  // Wall-clock stamps make otherwise identical records differ, so they are
  // opt-in.
  bool record_timestamps = false;
  Aggregation aggregation = Aggregation::kMajority;
};

struct TaskRun {
  std::string task_id;
  std::string initiative_id;
  bool swapped = false;  // image_b was shown first
  // Per repetition, in task orientation (A = image_a); nullopt = abstain.
  std::vector<std::optional<core::Choice2>> repetitions;
  std::optional<core::Choice2> verdict;
  std::vector<nlohmann::json> transcripts;
  std::vector<std::vector<std::string>> cache_keys;
  std::vector<std::string> errors;  // one per failed repetition
};

struct VqaRun {
  std::string question_id;
  std::array<int, 4> permutation{};  // shown position -> original index
  std::vector<std::optional<codec::VqaChoice>> repetitions;  // original letters
  std::optional<codec::VqaChoice> answer;
  bool correct = false;
  std::vector<nlohmann::json> transcripts;
  std::vector<std::vector<std::string>> cache_keys;
  std::vector<std::string> errors;
};

struct RunRecord {
  std::string evaluator_id;
  std::string protocol;  // "2afc" or "vqa"
  std::uint64_t seed = 0;
  std::size_t repetitions = 0;
  std::string aggregation{kAggregationRule};
  std::vector<TaskRun> tasks;      // sorted by task_id
  std::vector<VqaRun> questions;   // sorted by question_id
  std::optional<std::string> started_at;
  std::optional<std::string> finished_at;
};

// Presentation order of a task: true when image_b is shown first.
bool PresentSwapped(std::uint64_t seed, const std::string& task_id);

// Choice permutation of a VQA item: shown position -> original index.
std::array<int, 4> ChoicePermutation(std::uint64_t seed,
                                     const std::string& question_id);

// Majority over the non-abstained repetitions; ties fall back to
// repetition 0 (which may itself be an abstention).
template <typename T>
std::optional<T> AggregateRepetitions(const std::vector<std::optional<T>>& reps);

template <typename T>
std::optional<T> Aggregate(const std::vector<std::optional<T>>& reps,
                           Aggregation aggregation) {
  if (aggregation == Aggregation::kFirst) {
    return reps.empty() ? std::nullopt : reps.front();
  }
  return AggregateRepetitions(reps);
}

RunRecord Run2afc(const Benchmark& benchmark, Evaluator& evaluator,
                  const RunOptions& options);

RunRecord RunVqa(const Benchmark& benchmark, Evaluator& evaluator,
                 const RunOptions& options);

nlohmann::json RunRecordToJson(const RunRecord& record);

// ---------------------------------------------------------------------------

template <typename T>
std::optional<T> AggregateRepetitions(const std::vector<std::optional<T>>& reps) {
  if (reps.empty()) return std::nullopt;
  std::vector<std::pair<T, std::size_t>> counts;
  for (const auto& r : reps) {
    if (!r) continue;
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& c) { return c.first == *r; });
    if (it == counts.end()) {
      counts.emplace_back(*r, 1);
    } else {
      ++it->second;
    }
  }
  std::optional<T> best;
  std::size_t best_count = 0;
  bool tied = false;
  for (const auto& [value, count] : counts) {
    if (count > best_count) {
      best = value;
      best_count = count;
      tied = false;
    } else if (count == best_count) {
      tied = true;
    }
  }
  return tied ? reps.front() : best;
}

}  // namespace semjudge::bench

#endif  // SEMJUDGE_BENCH_RUNNER_H_
