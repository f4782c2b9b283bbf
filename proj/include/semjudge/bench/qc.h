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

#ifndef SEMJUDGE_BENCH_QC_H_
#define SEMJUDGE_BENCH_QC_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/bench/benchmark.h"

namespace semjudge::bench {

struct QcOptions {
  // A task is reliable when its majority fraction is >= this value, so
  // exactly 60% agreement is kept.
  double agreement_threshold = 0.60;
  std::size_t min_reliable = 4;
  // Tasks without votes stay in the benchmark as unreliable; with this set
  // they raise Error(kData) instead.
  bool reject_voteless = false;
};

struct TaskQc {
  std::string task_id;
  std::string initiative_id;
  std::size_t votes = 0;
  double agreement = 0.0;
  std::optional<core::Choice2> majority;
  bool reliable = false;
};

struct QcReport {
  QcOptions options;
  std::vector<TaskQc> tasks;
  std::map<std::string, std::size_t> reliable_per_initiative;
  std::vector<std::string> dropped_initiatives;
  std::size_t kept_tasks = 0;
  std::optional<double> light_kappa;  // mean Cohen's kappa over annotator pairs
};

struct QcResult {
  Benchmark benchmark;
  QcReport report;
};

QcResult QcFilter(const Benchmark& benchmark, const QcOptions& options = {});

nlohmann::json QcReportToJson(const QcReport& report);

}  // namespace semjudge::bench

#endif  // SEMJUDGE_BENCH_QC_H_
