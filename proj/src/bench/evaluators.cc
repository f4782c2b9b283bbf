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

#include "semjudge/bench/evaluators.h"

#include <fstream>

#include "semjudge/judge/digest.h"
#include "semjudge/judge/engine.h"
#include "semjudge/judge/judge_output.h"
#include "semjudge/judge/response_cache.h"

namespace semjudge::bench {
namespace {

std::vector<std::string> CacheKeysOf(const std::vector<judge::StageTranscript>& list,
                                     const std::string& model,
                                     const judge::JudgeConfig& config) {
  std::vector<std::string> keys;
  for (const auto& t : list) {
    keys.push_back(judge::RequestDigest(
        {model, t.request_turns, config.temperature, config.seed}));
  }
  return keys;
}

codec::VqaChoice LetterAt(std::size_t index) {
  return static_cast<codec::VqaChoice>(index);
}

}  // namespace

PairJudgment Evaluator::JudgePair(const PairView&) {
  throw Error(ErrorCode::kConfig, Id() + " does not support 2AFC tasks");
}

VqaJudgment Evaluator::AnswerVqa(const VqaView&) {
  throw Error(ErrorCode::kConfig, Id() + " does not support VQA items");
}

std::uint64_t StableHash(const std::vector<std::string>& parts) {
  std::string joined;
  for (const std::string& p : parts) {
    joined += std::to_string(p.size());
    joined += ':';
    joined += p;
  }
  const std::string hex = judge::Sha256Hex(joined);
  return std::stoull(hex.substr(0, 16), nullptr, 16);
}

SemJudgeEvaluator::SemJudgeEvaluator(judge::Backend& backend, std::string model_id,
                                     judge::JudgeConfig config)
    : backend_(backend), model_id_(std::move(model_id)), config_(std::move(config)) {
  judge::ValidateJudgeConfig(config_);
}

judge::JudgeConfig SemJudgeEvaluator::ConfigFor(std::size_t repetition) const {
  judge::JudgeConfig config = config_;
  if (config.seed) *config.seed += static_cast<std::int64_t>(repetition);
  return config;
}

PairJudgment SemJudgeEvaluator::JudgePair(const PairView& view) {
  const judge::JudgeConfig config = ConfigFor(view.repetition);
  judge::Engine engine(backend_, model_id_, config);
  std::optional<judge::ImagePayload> prompt_image;
  if (view.initiative->prompt_image) {
    prompt_image = judge::LoadImage(*view.initiative->prompt_image);
  }
  const judge::JudgeResult result = engine.Judge2afc(
      view.initiative->prompt_text, *view.image_a, *view.image_b, prompt_image);
  return {result.output.verdict, judge::JudgeResultToJson(result),
          CacheKeysOf(result.transcripts, model_id_, config)};
}

VqaJudgment SemJudgeEvaluator::AnswerVqa(const VqaView& view) {
  const judge::JudgeConfig config = ConfigFor(view.repetition);
  judge::Engine engine(backend_, model_id_, config);
  std::vector<judge::ImagePayload> images;
  for (const auto* image : view.images) images.push_back(*image);
  const std::vector<std::string> choices(view.shown_choices.begin(),
                                         view.shown_choices.end());
  const judge::VqaResult result = engine.AnswerVqa(images, view.item->stem, choices);
  return {result.choice, judge::TranscriptsToJson(result.transcripts),
          CacheKeysOf(result.transcripts, model_id_, config)};
}

ImportEvaluator::ImportEvaluator(
    std::string id, std::map<std::string, std::optional<core::Choice2>> verdicts)
    : id_(std::move(id)), verdicts_(std::move(verdicts)) {}

ImportEvaluator ImportEvaluator::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read verdict file " + path.string());
  std::map<std::string, std::optional<core::Choice2>> verdicts;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (core::Trim(line).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(n);
    const nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("task_id") ||
        !doc["task_id"].is_string() || !doc.contains("verdict") ||
        !doc["verdict"].is_string()) {
      throw Error(ErrorCode::kSchema,
                  where + ": expected {\"task_id\": .., \"verdict\": \"A\"|\"B\"|\"abstain\"}");
    }
    const std::string v = doc["verdict"].get<std::string>();
    std::optional<core::Choice2> choice;
    if (v == "A") {
      choice = core::Choice2::kA;
    } else if (v == "B") {
      choice = core::Choice2::kB;
    } else if (v != "abstain") {
      throw Error(ErrorCode::kSchema, where + ": verdict must be A, B or abstain");
    }
    if (!verdicts.emplace(doc["task_id"].get<std::string>(), choice).second) {
      throw Error(ErrorCode::kSchema, where + ": duplicate task_id");
    }
  }
  return ImportEvaluator("import:" + path.stem().string(), std::move(verdicts));
}

PairJudgment ImportEvaluator::JudgePair(const PairView& view) {
  PairJudgment out;
  auto it = verdicts_.find(view.task->task_id);
  if (it != verdicts_.end() && it->second) {
    out.choice = view.swapped ? core::Flip(*it->second) : *it->second;
  }
  return out;
}

BaselineEvaluator::BaselineEvaluator(std::string id,
                                     baseline::EmbeddingProvider& provider,
                                     BaselineMode mode,
                                     std::optional<baseline::GroundPrior> prior,
                                     baseline::Distance distance, double tie_epsilon)
    : id_(std::move(id)),
      provider_(provider),
      mode_(mode),
      prior_(std::move(prior)),
      distance_(distance),
      tie_epsilon_(tie_epsilon) {
  if (mode_ == BaselineMode::kContextFree && !prior_) {
    throw Error(ErrorCode::kConfig, "a context-free baseline needs a ground prior");
  }
}

baseline::GroundVector BaselineEvaluator::ImageVector(const PairView& view,
                                                      const ImageRef& image,
                                                      const judge::ImagePayload& payload) {
  try {
    return provider_.Embed(view.initiative->initiative_id + "/" + image.image_id,
                           nullptr, &payload);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kData) throw;
    return provider_.Embed(image.image_id, nullptr, &payload);
  }
}

PairJudgment BaselineEvaluator::JudgePair(const PairView& view) {
  const baseline::GroundVector a = ImageVector(view, *view.shown_a, *view.image_a);
  const baseline::GroundVector b = ImageVector(view, *view.shown_b, *view.image_b);
  double score_a = 0.0, score_b = 0.0;
  if (mode_ == BaselineMode::kContextConditioned) {
    const baseline::GroundVector prompt = provider_.Embed(
        view.initiative->initiative_id, &view.initiative->prompt_text, nullptr);
    score_a = baseline::ContextConditionedScore(prompt, a, distance_);
    score_b = baseline::ContextConditionedScore(prompt, b, distance_);
  } else {
    score_a = baseline::ContextFreeScore(*prior_, a, distance_);
    score_b = baseline::ContextFreeScore(*prior_, b, distance_);
  }
  PairJudgment out;
  out.transcript = {{"score_a", score_a}, {"score_b", score_b}};
  switch (baseline::ScoreToVerdict(score_a, score_b, tie_epsilon_)) {
    case baseline::Verdict::kA: out.choice = core::Choice2::kA; break;
    case baseline::Verdict::kB: out.choice = core::Choice2::kB; break;
    case baseline::Verdict::kTie: break;
  }
  return out;
}

PairJudgment RandomEvaluator::JudgePair(const PairView& view) {
  const std::uint64_t h = StableHash({"2afc", std::to_string(seed_), view.task->task_id,
                                      std::to_string(view.repetition)});
  return {(h & 1) ? core::Choice2::kB : core::Choice2::kA, nullptr, {}};
}

VqaJudgment RandomEvaluator::AnswerVqa(const VqaView& view) {
  const std::uint64_t h = StableHash({"vqa", std::to_string(seed_), view.item->question_id,
                                      std::to_string(view.repetition)});
  return {LetterAt(h % 4), nullptr, {}};
}

PairJudgment OracleEvaluator::JudgePair(const PairView& view) {
  PairJudgment out;
  if (auto reference = HumanReference(*view.task)) {
    out.choice = view.swapped ? core::Flip(*reference) : *reference;
  }
  return out;
}

VqaJudgment OracleEvaluator::AnswerVqa(const VqaView& view) {
  return {view.shown_answer, nullptr, {}};
}

}  // namespace semjudge::bench
