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

#include "semjudge/bench/qc.h"

#include <algorithm>
#include <set>

#include "semjudge/stats/agreement.h"

namespace semjudge::bench {

QcResult QcFilter(const Benchmark& benchmark, const QcOptions& options) {
  if (!(options.agreement_threshold >= 0.0 && options.agreement_threshold <= 1.0)) {
    throw Error(ErrorCode::kConfig, "agreement threshold must lie in [0, 1]");
  }
  QcReport report;
  report.options = options;
  std::map<std::string, std::map<std::string, std::string>> labels;
  std::vector<bool> reliable(benchmark.tasks.size(), false);

  for (const Initiative& init : benchmark.initiatives) {
    report.reliable_per_initiative[init.initiative_id] = 0;
  }
  for (std::size_t k = 0; k < benchmark.tasks.size(); ++k) {
    const Task2afc& task = benchmark.tasks[k];
    TaskQc entry{task.task_id, task.initiative_id, task.human_votes.size(), 0.0,
                 std::nullopt, false};
    if (task.human_votes.empty()) {
      if (options.reject_voteless) {
        throw Error(ErrorCode::kData, "task " + task.task_id + " has no votes");
      }
    } else {
      std::vector<core::Choice2> votes;
      for (const Vote& v : task.human_votes) {
        votes.push_back(v.choice);
        labels[v.annotator_id][task.task_id] = std::string(core::Choice2Name(v.choice));
      }
      const auto majority = stats::MajorityVote(votes);
      entry.agreement = majority.agreement;
      entry.majority = majority.winner;
      entry.reliable = majority.winner.has_value() &&
                       majority.agreement >= options.agreement_threshold;
    }
    reliable[k] = entry.reliable;
    if (entry.reliable) ++report.reliable_per_initiative[task.initiative_id];
    report.tasks.push_back(std::move(entry));
  }

  std::set<std::string> kept;
  for (const auto& [id, count] : report.reliable_per_initiative) {
    if (count >= options.min_reliable) {
      kept.insert(id);
    } else {
      report.dropped_initiatives.push_back(id);
    }
  }

  QcResult result{Benchmark{}, {}};
  Benchmark& out = result.benchmark;
  out.root = benchmark.root;
  out.has_profiles = benchmark.has_profiles;
  out.tasks_enumerated = benchmark.tasks_enumerated;
  for (const Initiative& init : benchmark.initiatives) {
    if (kept.count(init.initiative_id)) out.initiatives.push_back(init);
  }
  for (std::size_t k = 0; k < benchmark.tasks.size(); ++k) {
    const Task2afc& task = benchmark.tasks[k];
    if (!kept.count(task.initiative_id)) continue;
    // Unreliable tasks with votes are removed; vote-less ones stay flagged.
    if (!reliable[k] && !task.human_votes.empty()) continue;
    Task2afc copy = task;
    copy.reliable = reliable[k];
    if (copy.reliable) ++report.kept_tasks;
    out.tasks.push_back(std::move(copy));
  }
  for (const VqaItem& item : benchmark.vqa) {
    if (kept.count(item.initiative_id)) out.vqa.push_back(item);
  }
  report.light_kappa = stats::LightKappa(labels);
  result.report = std::move(report);
  return result;
}

nlohmann::json QcReportToJson(const QcReport& report) {
  nlohmann::json tasks = nlohmann::json::array();
  for (const TaskQc& t : report.tasks) {
    tasks.push_back({{"task_id", t.task_id},
                     {"initiative_id", t.initiative_id},
                     {"votes", t.votes},
                     {"agreement", t.agreement},
                     {"majority", t.majority ? nlohmann::json(std::string(
                                                   core::Choice2Name(*t.majority)))
                                             : nlohmann::json()},
                     {"reliable", t.reliable}});
  }
  return {{"agreement_threshold", report.options.agreement_threshold},
          {"min_reliable", report.options.min_reliable},
          {"tasks", std::move(tasks)},
          {"reliable_per_initiative", report.reliable_per_initiative},
          {"dropped_initiatives", report.dropped_initiatives},
          {"kept_tasks", report.kept_tasks},
          {"light_kappa", report.light_kappa ? nlohmann::json(*report.light_kappa)
                                             : nlohmann::json()}};
}

}  // namespace semjudge::bench
