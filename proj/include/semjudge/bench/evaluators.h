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

// Evaluators see tasks in presentation order: `shown_a` is whatever image
// the harness placed first, which may be the task's image_b.

#ifndef SEMJUDGE_BENCH_EVALUATORS_H_
#define SEMJUDGE_BENCH_EVALUATORS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/baseline/scorers.h"
#include "semjudge/baseline/vector_io.h"
#include "semjudge/bench/benchmark.h"
#include "semjudge/judge/chat.h"
#include "semjudge/judge/config.h"

namespace semjudge::bench {

struct PairView {
  const Task2afc* task = nullptr;
  const Initiative* initiative = nullptr;
  const ImageRef* shown_a = nullptr;
  const ImageRef* shown_b = nullptr;
  const judge::ImagePayload* image_a = nullptr;
  const judge::ImagePayload* image_b = nullptr;
  bool swapped = false;  // shown_a is the task's image_b
  std::size_t repetition = 0;
};

struct PairJudgment {
  std::optional<core::Choice2> choice;  // in shown order; nullopt = abstain
  nlohmann::json transcript;            // null when the evaluator has none
  std::vector<std::string> cache_keys;
};

struct VqaView {
  const VqaItem* item = nullptr;
  const Initiative* initiative = nullptr;
  std::vector<const judge::ImagePayload*> images;
  std::array<std::string, 4> shown_choices;  // after shuffling
  codec::VqaChoice shown_answer = codec::VqaChoice::kA;  // key after shuffling
  std::size_t repetition = 0;
};

struct VqaJudgment {
  std::optional<codec::VqaChoice> choice;  // shown letter; nullopt = abstain
  nlohmann::json transcript;
  std::vector<std::string> cache_keys;
};

// Implementations must tolerate concurrent calls. Throwing marks the
// repetition as abstained and the message is kept in the run record.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual std::string Id() const = 0;
  virtual PairJudgment JudgePair(const PairView& view);
  virtual VqaJudgment AnswerVqa(const VqaView& view);
};

// Full three-stage pipeline against a chat backend. Each repetition uses
// seed + repetition so that repeated runs are distinct requests.
class SemJudgeEvaluator : public Evaluator {
 public:
  SemJudgeEvaluator(judge::Backend& backend, std::string model_id,
                    judge::JudgeConfig config);

  std::string Id() const override { return "semjudge:" + model_id_; }
  PairJudgment JudgePair(const PairView& view) override;
  VqaJudgment AnswerVqa(const VqaView& view) override;

 private:
  judge::JudgeConfig ConfigFor(std::size_t repetition) const;

  judge::Backend& backend_;
  std::string model_id_;
  judge::JudgeConfig config_;
};

// Per-task verdicts from a JSONL file {task_id, verdict: "A"|"B"|"abstain"}
// where A is the task's image_a. Missing tasks abstain.
class ImportEvaluator : public Evaluator {
 public:
  ImportEvaluator(std::string id, std::map<std::string, std::optional<core::Choice2>> verdicts);
  static ImportEvaluator FromFile(const std::filesystem::path& path);

  std::string Id() const override { return id_; }
  PairJudgment JudgePair(const PairView& view) override;

 private:
  std::string id_;
  std::map<std::string, std::optional<core::Choice2>> verdicts_;
};

enum class BaselineMode { kContextConditioned, kContextFree };

// Ground-space scorer: prompt vectors are keyed by initiative_id, image
// vectors by "{initiative_id}/{image_id}" (falling back to image_id).
class BaselineEvaluator : public Evaluator {
 public:
  BaselineEvaluator(std::string id, baseline::EmbeddingProvider& provider,
                    BaselineMode mode, std::optional<baseline::GroundPrior> prior,
                    baseline::Distance distance,
                    double tie_epsilon = baseline::kDefaultTieEpsilon);

  std::string Id() const override { return id_; }
  PairJudgment JudgePair(const PairView& view) override;

 private:
  baseline::GroundVector ImageVector(const PairView& view, const ImageRef& image,
                                     const judge::ImagePayload& payload);

  std::string id_;
  baseline::EmbeddingProvider& provider_;
  BaselineMode mode_;
  std::optional<baseline::GroundPrior> prior_;
  baseline::Distance distance_;
  double tie_epsilon_;
};

// Coin flips keyed by (seed, task or question id, repetition).
class RandomEvaluator : public Evaluator {
 public:
  explicit RandomEvaluator(std::uint64_t seed) : seed_(seed) {}

  std::string Id() const override { return "random"; }
  PairJudgment JudgePair(const PairView& view) override;
  VqaJudgment AnswerVqa(const VqaView& view) override;

 private:
  std::uint64_t seed_;
};

// Reads the human reference (2AFC) or the answer key (VQA). An upper bound
// used to validate the reporting path.
class OracleEvaluator : public Evaluator {
 public:
  std::string Id() const override { return "oracle"; }
  PairJudgment JudgePair(const PairView& view) override;
  VqaJudgment AnswerVqa(const VqaView& view) override;
};

// Deterministic 64-bit value derived from SHA-256 of the joined parts.
std::uint64_t StableHash(const std::vector<std::string>& parts);

}  // namespace semjudge::bench

#endif  // SEMJUDGE_BENCH_EVALUATORS_H_
