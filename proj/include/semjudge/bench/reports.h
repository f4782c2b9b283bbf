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

#ifndef SEMJUDGE_BENCH_REPORTS_H_
#define SEMJUDGE_BENCH_REPORTS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "semjudge/bench/benchmark.h"
#include "semjudge/bench/runner.h"
#include "semjudge/stats/bias.h"
#include "semjudge/stats/correlation.h"
#include "semjudge/stats/ratings.h"

namespace semjudge::bench {

struct AlignmentOptions {
  bool pooled_krcc = false;
};

struct AlignmentReport {
  std::string evaluator_id;
  std::size_t n_tasks = 0;
  std::size_t n_abstain = 0;
  stats::KrccSummary krcc;
  double srcc = 0.0;
  double ccc = 0.0;
  stats::RatingTable human_elo;
  stats::RatingTable run_elo;
  bool pooled = false;
};

// KRCC on per-prompt judgments, SRCC and CCC on Elo tables fit separately
// to the human references and the run verdicts. Elo fits fall back to the
// virtual-tie regularizer when the plain estimate diverges; the table's
// `regularized` flag records it. Throws Error(kUndefined) with context when
// a statistic is undefined and Error(kData) when the run misses tasks.
AlignmentReport ComputeAlignment(const RunRecord& run, const Benchmark& benchmark,
                                 const AlignmentOptions& options = {});

struct BiasReport {
  std::string evaluator_id;
  std::optional<stats::BiasTestResult> result;
  std::string status;  // "ok" or the reason the test is undefined
};

// Throws Error(kData) listing tasks without complete ground profiles.
BiasReport ComputeIconicityBias(const RunRecord& run, const Benchmark& benchmark,
                                const stats::BiasTestOptions& options = {});

struct VqaReport {
  std::string evaluator_id;
  std::size_t n_questions = 0;
  std::size_t n_correct = 0;
  std::size_t n_abstain = 0;
  double accuracy = 0.0;
};

VqaReport ComputeVqaAccuracy(const RunRecord& run);

// The one-line summary printed by the CLI.
std::string AlignmentRow(const AlignmentReport& report);
std::string VqaRow(const VqaReport& report);

std::string AlignmentCsv(const AlignmentReport& report, const BiasReport* bias);
std::string AlignmentText(const AlignmentReport& report, const BiasReport* bias);
std::string VqaCsv(const VqaReport& report);
std::string VqaText(const VqaReport& report);

// Writes `content` to `path` through a temporary file and rename.
void WriteTextFile(const std::filesystem::path& path, const std::string& content);

}  // namespace semjudge::bench

#endif  // SEMJUDGE_BENCH_REPORTS_H_
