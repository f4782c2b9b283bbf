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

#include "semjudge/bench/runner.h"

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <functional>
#include <numeric>
#include <mutex>
#include <span>
#include <thread>

#include "semjudge/stats/rng.h"

namespace semjudge::bench {
namespace {

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// Runs fn(0..count-1) on up to `parallelism` threads. Each index writes
// only its own slot, so results do not depend on scheduling.
void ParallelFor(std::size_t count, std::size_t parallelism,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(parallelism, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

void CheckOptions(const RunOptions& options) {
  if (options.repetitions == 0) {
    throw Error(ErrorCode::kConfig, "repetitions must be at least 1");
  }
  if (options.parallelism == 0) {
    throw Error(ErrorCode::kConfig, "parallelism must be at least 1");
  }
}

}  // namespace

std::string_view AggregationRule(Aggregation aggregation) {
  return aggregation == Aggregation::kFirst ? kFirstRule : kAggregationRule;
}

std::optional<Aggregation> AggregationFromString(std::string_view name) {
  if (name == "majority") return Aggregation::kMajority;
  if (name == "first") return Aggregation::kFirst;
  return std::nullopt;
}

bool PresentSwapped(std::uint64_t seed, const std::string& task_id) {
  return (StableHash({"order", std::to_string(seed), task_id}) & 1) != 0;
}

std::array<int, 4> ChoicePermutation(std::uint64_t seed,
                                     const std::string& question_id) {
  std::array<int, 4> perm{0, 1, 2, 3};
  stats::Rng rng(StableHash({"choices", std::to_string(seed), question_id}));
  rng.Shuffle(std::span<int>(perm));
  return perm;
}

RunRecord Run2afc(const Benchmark& benchmark, Evaluator& evaluator,
                  const RunOptions& options) {
  CheckOptions(options);
  RunRecord record;
  record.evaluator_id = evaluator.Id();
  record.protocol = "2afc";
  record.seed = options.seed;
  record.repetitions = options.repetitions;
  record.aggregation = AggregationRule(options.aggregation);
  if (options.record_timestamps) record.started_at = UtcNow();

  std::vector<const Task2afc*> tasks;
  for (const Task2afc& task : benchmark.tasks) {
    if (!options.only_reliable || task.reliable) tasks.push_back(&task);
  }
  record.tasks.resize(tasks.size());

  ParallelFor(tasks.size(), options.parallelism, [&](std::size_t k) {
    const Task2afc& task = *tasks[k];
    const Initiative* init = benchmark.FindInitiative(task.initiative_id);
    if (init == nullptr) {
      throw Error(ErrorCode::kData, "task " + task.task_id + " lost its initiative");
    }
    TaskRun& run = record.tasks[k];
    run.task_id = task.task_id;
    run.initiative_id = task.initiative_id;
    run.swapped = PresentSwapped(options.seed, task.task_id);
    const ImageRef* first = init->FindImage(run.swapped ? task.image_b : task.image_a);
    const ImageRef* second = init->FindImage(run.swapped ? task.image_a : task.image_b);
    const judge::ImagePayload image_first = judge::LoadImage(first->file);
    const judge::ImagePayload image_second = judge::LoadImage(second->file);

    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
      const PairView view{&task, init, first, second, &image_first, &image_second,
                          run.swapped, rep};
      std::optional<core::Choice2> verdict;
      nlohmann::json transcript;
      std::vector<std::string> keys;
      try {
        PairJudgment j = evaluator.JudgePair(view);
        if (j.choice) verdict = run.swapped ? core::Flip(*j.choice) : *j.choice;
        transcript = std::move(j.transcript);
        keys = std::move(j.cache_keys);
      } catch (const std::exception& e) {
        run.errors.push_back("repetition " + std::to_string(rep) + ": " + e.what());
      }
      run.repetitions.push_back(verdict);
      run.transcripts.push_back(std::move(transcript));
      run.cache_keys.push_back(std::move(keys));
    }
    run.verdict = Aggregate(run.repetitions, options.aggregation);
  });

  if (options.record_timestamps) record.finished_at = UtcNow();
  return record;
}

RunRecord RunVqa(const Benchmark& benchmark, Evaluator& evaluator,
                 const RunOptions& options) {
  CheckOptions(options);
  RunRecord record;
  record.evaluator_id = evaluator.Id();
  record.protocol = "vqa";
  record.seed = options.seed;
  record.repetitions = options.repetitions;
  record.aggregation = AggregationRule(options.aggregation);
  if (options.record_timestamps) record.started_at = UtcNow();
  record.questions.resize(benchmark.vqa.size());

  ParallelFor(benchmark.vqa.size(), options.parallelism, [&](std::size_t k) {
    const VqaItem& item = benchmark.vqa[k];
    const Initiative* init = benchmark.FindInitiative(item.initiative_id);
    if (init == nullptr) {
      throw Error(ErrorCode::kData, "question " + item.question_id + " lost its initiative");
    }
    VqaRun& run = record.questions[k];
    run.question_id = item.question_id;
    run.permutation = ChoicePermutation(options.seed, item.question_id);

    std::vector<judge::ImagePayload> payloads;
    for (const std::string& id : item.image_ids) {
      payloads.push_back(judge::LoadImage(init->FindImage(id)->file));
    }
    VqaView view;
    view.item = &item;
    view.initiative = init;
    for (const auto& p : payloads) view.images.push_back(&p);
    for (std::size_t shown = 0; shown < 4; ++shown) {
      const int original = run.permutation[shown];
      view.shown_choices[shown] = item.choices[original];
      if (original == static_cast<int>(item.answer)) {
        view.shown_answer = static_cast<codec::VqaChoice>(shown);
      }
    }
    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
      view.repetition = rep;
      std::optional<codec::VqaChoice> answer;
      nlohmann::json transcript;
      std::vector<std::string> keys;
      try {
        VqaJudgment j = evaluator.AnswerVqa(view);
        if (j.choice) {
          answer = static_cast<codec::VqaChoice>(run.permutation[static_cast<int>(*j.choice)]);
        }
        transcript = std::move(j.transcript);
        keys = std::move(j.cache_keys);
      } catch (const std::exception& e) {
        run.errors.push_back("repetition " + std::to_string(rep) + ": " + e.what());
      }
      run.repetitions.push_back(answer);
      run.transcripts.push_back(std::move(transcript));
      run.cache_keys.push_back(std::move(keys));
    }
    run.answer = Aggregate(run.repetitions, options.aggregation);
    run.correct = run.answer && *run.answer == item.answer;
  });

  if (options.record_timestamps) record.finished_at = UtcNow();
  return record;
}

nlohmann::json RunRecordToJson(const RunRecord& record) {
  auto choice2 = [](const std::optional<core::Choice2>& c) {
    return c ? nlohmann::json(std::string(core::Choice2Name(*c))) : nlohmann::json("abstain");
  };
  auto letter = [](const std::optional<codec::VqaChoice>& c) {
    return c ? nlohmann::json(std::string(codec::VqaChoiceName(*c))) : nlohmann::json("abstain");
  };
  nlohmann::json out = {{"evaluator_id", record.evaluator_id},
                        {"protocol", record.protocol},
                        {"seed", record.seed},
                        {"repetitions", record.repetitions},
                        {"aggregation", record.aggregation}};
  if (record.started_at) out["started_at"] = *record.started_at;
  if (record.finished_at) out["finished_at"] = *record.finished_at;
  if (record.protocol == "2afc") {
    nlohmann::json tasks = nlohmann::json::array();
    for (const TaskRun& t : record.tasks) {
      nlohmann::json reps = nlohmann::json::array();
      for (const auto& r : t.repetitions) reps.push_back(choice2(r));
      tasks.push_back({{"task_id", t.task_id},
                       {"initiative_id", t.initiative_id},
                       {"shown_first", t.swapped ? "image_b" : "image_a"},
                       {"repetitions", reps},
                       {"verdict", choice2(t.verdict)},
                       {"cache_keys", t.cache_keys},
                       {"transcripts", t.transcripts},
                       {"errors", t.errors}});
    }
    out["tasks"] = std::move(tasks);
  } else {
    nlohmann::json questions = nlohmann::json::array();
    for (const VqaRun& q : record.questions) {
      nlohmann::json reps = nlohmann::json::array();
      for (const auto& r : q.repetitions) reps.push_back(letter(r));
      questions.push_back({{"question_id", q.question_id},
                           {"permutation", q.permutation},
                           {"repetitions", reps},
                           {"answer", letter(q.answer)},
                           {"correct", q.correct},
                           {"cache_keys", q.cache_keys},
                           {"transcripts", q.transcripts},
                           {"errors", q.errors}});
    }
    out["questions"] = std::move(questions);
  }
  return out;
}

}  // namespace semjudge::bench
