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

#include "semjudge/bench/reports.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

namespace semjudge::bench {
namespace {

std::string Fixed(double value, int digits = 3) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  // Avoid printing "-0.000".
  std::string out = buffer;
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);
  }
  return out;
}

std::string Pad(const std::string& text, std::size_t width, bool right = true) {
  if (text.size() >= width) return text;
  const std::string fill(width - text.size(), ' ');
  return right ? fill + text : text + fill;
}

stats::RatingTable FitWithFallback(const std::vector<stats::PairOutcome>& outcomes) {
  try {
    return stats::FitRatings(outcomes);
  } catch (const stats::RatingFitError&) {
    stats::FitOptions options;
    options.regularize = true;
    return stats::FitRatings(outcomes, options);
  }
}

template <typename F>
auto WithContext(const std::string& what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), what + ": " + e.what());
  }
}

std::map<std::string, const Task2afc*> TaskIndex(const Benchmark& benchmark) {
  std::map<std::string, const Task2afc*> index;
  for (const Task2afc& t : benchmark.tasks) index[t.task_id] = &t;
  return index;
}

const Task2afc& Lookup(const std::map<std::string, const Task2afc*>& index,
                       const std::string& task_id) {
  auto it = index.find(task_id);
  if (it == index.end()) {
    throw Error(ErrorCode::kData, "run references unknown task " + task_id);
  }
  return *it->second;
}

std::string ModelOf(const Benchmark& benchmark, const Task2afc& task,
                    const std::string& image_id) {
  return benchmark.FindInitiative(task.initiative_id)->FindImage(image_id)->model_id;
}

}  // namespace

AlignmentReport ComputeAlignment(const RunRecord& run, const Benchmark& benchmark,
                                 const AlignmentOptions& options) {
  if (run.protocol != "2afc") {
    throw Error(ErrorCode::kInvalidArgument, "alignment needs a 2AFC run");
  }
  const auto index = TaskIndex(benchmark);
  std::set<std::string> covered;
  for (const TaskRun& t : run.tasks) covered.insert(t.task_id);
  std::size_t missing = 0;
  for (const Task2afc& t : benchmark.tasks) {
    if (t.reliable && !covered.count(t.task_id)) ++missing;
  }
  if (missing > 0) {
    throw Error(ErrorCode::kData, "run does not cover " + std::to_string(missing) +
                                      " reliable task(s)");
  }

  AlignmentReport report;
  report.evaluator_id = run.evaluator_id;
  report.pooled = options.pooled_krcc;
  std::map<std::string, int> evaluator, human;
  std::map<std::string, std::string> grouping;
  std::vector<stats::PairOutcome> human_outcomes, run_outcomes;
  for (const TaskRun& t : run.tasks) {
    const Task2afc& task = Lookup(index, t.task_id);
    const std::optional<core::Choice2> reference = HumanReference(task);
    if (!reference) continue;
    ++report.n_tasks;
    const std::string model_a = ModelOf(benchmark, task, task.image_a);
    const std::string model_b = ModelOf(benchmark, task, task.image_b);
    auto outcome = [&](core::Choice2 c) {
      return stats::PairOutcome{model_a, model_b,
                                c == core::Choice2::kA ? stats::PairOutcome::Winner::kI
                                                       : stats::PairOutcome::Winner::kJ,
                                task.initiative_id};
    };
    human[t.task_id] = *reference == core::Choice2::kA ? 1 : -1;
    human_outcomes.push_back(outcome(*reference));
    grouping[t.task_id] = task.initiative_id;
    if (t.verdict) {
      evaluator[t.task_id] = *t.verdict == core::Choice2::kA ? 1 : -1;
      run_outcomes.push_back(outcome(*t.verdict));
    } else {
      evaluator[t.task_id] = 0;
      ++report.n_abstain;
    }
  }

  report.krcc = WithContext("KRCC", [&] {
    return stats::PerPromptKrcc(evaluator, human, grouping, options.pooled_krcc);
  });
  if (run_outcomes.empty()) {
    throw Error(ErrorCode::kUndefined, "Elo: the run has no non-abstained verdicts");
  }
  report.human_elo = WithContext("human Elo", [&] { return FitWithFallback(human_outcomes); });
  report.run_elo = WithContext("run Elo", [&] { return FitWithFallback(run_outcomes); });

  std::vector<double> human_ratings, run_ratings;
  for (const auto& [model, rating] : report.human_elo.ratings) {
    auto it = report.run_elo.ratings.find(model);
    if (it == report.run_elo.ratings.end()) continue;
    human_ratings.push_back(rating);
    run_ratings.push_back(it->second);
  }
  report.srcc = WithContext("SRCC", [&] { return stats::SpearmanRho(run_ratings, human_ratings); });
  report.ccc = WithContext("CCC", [&] { return stats::LinCcc(run_ratings, human_ratings); });
  return report;
}

BiasReport ComputeIconicityBias(const RunRecord& run, const Benchmark& benchmark,
                                const stats::BiasTestOptions& options) {
  const auto index = TaskIndex(benchmark);
  std::vector<double> ni;
  std::vector<int> aligned;
  std::vector<std::string> uncovered;
  for (const TaskRun& t : run.tasks) {
    const Task2afc& task = Lookup(index, t.task_id);
    const std::optional<core::Choice2> reference = HumanReference(task);
    if (!reference) continue;
    const Initiative* init = benchmark.FindInitiative(task.initiative_id);
    auto a = init->image_profiles.find(task.image_a);
    auto b = init->image_profiles.find(task.image_b);
    if (!init->prompt_profile || a == init->image_profiles.end() ||
        b == init->image_profiles.end()) {
      uncovered.push_back(task.task_id);
      continue;
    }
    ni.push_back(core::InstanceNetIconicity(*init->prompt_profile, a->second, b->second));
    aligned.push_back(t.verdict && *t.verdict == *reference ? 1 : 0);
  }
  if (!uncovered.empty()) {
    std::string message = "ground profiles missing for " +
                          std::to_string(uncovered.size()) + " task(s):";
    for (const std::string& id : uncovered) message += " " + id;
    throw Error(ErrorCode::kData, message);
  }
  BiasReport report;
  report.evaluator_id = run.evaluator_id;
  const std::size_t n_aligned = std::count(aligned.begin(), aligned.end(), 1);
  if (ni.empty()) {
    report.status = "undefined: no tasks with a human reference";
  } else if (n_aligned == ni.size()) {
    report.status = "undefined: misaligned subset empty";
  } else if (n_aligned == 0) {
    report.status = "undefined: aligned subset empty";
  } else {
    report.result = stats::RunBiasTest(ni, aligned, options);
    report.status = "ok";
  }
  return report;
}

VqaReport ComputeVqaAccuracy(const RunRecord& run) {
  if (run.protocol != "vqa") {
    throw Error(ErrorCode::kInvalidArgument, "accuracy needs a VQA run");
  }
  VqaReport report;
  report.evaluator_id = run.evaluator_id;
  report.n_questions = run.questions.size();
  for (const VqaRun& q : run.questions) {
    if (q.correct) ++report.n_correct;
    if (!q.answer) ++report.n_abstain;
  }
  if (report.n_questions == 0) {
    throw Error(ErrorCode::kUndefined, "accuracy undefined: no VQA questions");
  }
  report.accuracy = static_cast<double>(report.n_correct) /
                    static_cast<double>(report.n_questions);
  return report;
}

std::string AlignmentRow(const AlignmentReport& r) {
  return r.evaluator_id + "  KRCC " + Fixed(r.krcc.mean_tau) + "  SRCC " +
         Fixed(r.srcc) + "  CCC " + Fixed(r.ccc);
}

std::string VqaRow(const VqaReport& r) {
  return r.evaluator_id + "  VQA " + Fixed(100.0 * r.accuracy, 1) + "% (" +
         std::to_string(r.n_correct) + "/" + std::to_string(r.n_questions) + ")";
}

std::string AlignmentCsv(const AlignmentReport& r, const BiasReport* bias) {
  std::string out =
      "evaluator,tasks,abstain,krcc,srcc,ccc,prompts_used,prompts_excluded,"
      "human_elo_regularized,run_elo_regularized";
  if (bias) out += ",bias_status,delta,p_value,ci_lower,cohens_d,n_aligned,n_misaligned";
  out += "\n";
  out += r.evaluator_id + "," + std::to_string(r.n_tasks) + "," +
         std::to_string(r.n_abstain) + "," + Fixed(r.krcc.mean_tau, 6) + "," +
         Fixed(r.srcc, 6) + "," + Fixed(r.ccc, 6) + "," +
         std::to_string(r.krcc.prompts_used) + "," +
         std::to_string(r.krcc.prompts_excluded) + "," +
         (r.human_elo.regularized ? "true" : "false") + "," +
         (r.run_elo.regularized ? "true" : "false");
  if (bias) {
    out += "," + bias->status;
    if (const auto& b = bias->result) {
      out += "," + Fixed(b->delta, 6) + "," + Fixed(b->p_value, 6) + "," +
             Fixed(b->ci_lower, 6) + "," + (b->cohens_d ? Fixed(*b->cohens_d, 6) : "") +
             "," + std::to_string(b->n_aligned) + "," + std::to_string(b->n_misaligned);
    } else {
      out += ",,,,,,";
    }
  }
  return out + "\n";
}

std::string AlignmentText(const AlignmentReport& r, const BiasReport* bias) {
  std::string out;
  out += Pad("evaluator", 24, false) + Pad("tasks", 7) + Pad("abstain", 9) +
         Pad("KRCC", 8) + Pad("SRCC", 8) + Pad("CCC", 8) + "\n";
  out += Pad(r.evaluator_id, 24, false) + Pad(std::to_string(r.n_tasks), 7) +
         Pad(std::to_string(r.n_abstain), 9) + Pad(Fixed(r.krcc.mean_tau), 8) +
         Pad(Fixed(r.srcc), 8) + Pad(Fixed(r.ccc), 8) + "\n\n";

  out += std::string("KRCC ") + (r.pooled ? "pooled" : "per prompt") + ": " +
         std::to_string(r.krcc.prompts_used) + " used, " +
         std::to_string(r.krcc.prompts_excluded) + " excluded\n";
  for (const stats::PromptTau& p : r.krcc.per_prompt) {
    out += "  " + Pad(p.prompt_id, 22, false) + Pad(std::to_string(p.n_tasks), 5) +
           Pad(p.tau ? Fixed(*p.tau) : std::string("undefined"), 11) + "\n";
  }
  out += "\nElo" + std::string(r.human_elo.regularized || r.run_elo.regularized
                                   ? " (virtual-tie regularizer applied)"
                                   : "") +
         "\n";
  out += "  " + Pad("model", 22, false) + Pad("human", 10) + Pad("run", 10) + "\n";
  for (const auto& [model, rating] : r.human_elo.ratings) {
    auto it = r.run_elo.ratings.find(model);
    out += "  " + Pad(model, 22, false) + Pad(Fixed(rating, 1), 10) +
           Pad(it == r.run_elo.ratings.end() ? std::string("-") : Fixed(it->second, 1), 10) +
           "\n";
  }
  if (bias) {
    out += "\nIconicity bias: ";
    if (const auto& b = bias->result) {
      out += "delta " + Fixed(b->delta) + stats::SignificanceStars(b->p_value) +
             "  p " + Fixed(b->p_value, 4) + "  CI [" + Fixed(b->ci_lower) +
             ", inf)  d " + (b->cohens_d ? Fixed(*b->cohens_d) : std::string("undefined")) +
             "  aligned " + std::to_string(b->n_aligned) + "  misaligned " +
             std::to_string(b->n_misaligned) + "\n";
    } else {
      out += bias->status + "\n";
    }
  }
  return out;
}

std::string VqaCsv(const VqaReport& r) {
  return "evaluator,questions,correct,abstain,accuracy\n" + r.evaluator_id + "," +
         std::to_string(r.n_questions) + "," + std::to_string(r.n_correct) + "," +
         std::to_string(r.n_abstain) + "," + Fixed(r.accuracy, 6) + "\n";
}

std::string VqaText(const VqaReport& r) {
  return Pad("evaluator", 24, false) + Pad("questions", 11) + Pad("correct", 9) +
         Pad("abstain", 9) + Pad("accuracy", 10) + "\n" +
         Pad(r.evaluator_id, 24, false) + Pad(std::to_string(r.n_questions), 11) +
         Pad(std::to_string(r.n_correct), 9) + Pad(std::to_string(r.n_abstain), 9) +
         Pad(Fixed(100.0 * r.accuracy, 1) + "%", 10) + "\n";
}

void WriteTextFile(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kConfig, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorCode::kConfig, "cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) throw Error(ErrorCode::kConfig, "cannot write " + path.string());
}

}  // namespace semjudge::bench
