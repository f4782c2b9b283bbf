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

#include "semjudge/judge/engine.h"

#include <cctype>

#include "semjudge/judge/digest.h"

namespace semjudge::judge {
namespace {

bool IsIdChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool CitesId(std::string_view sentence, std::string_view id) {
  if (id.empty()) return false;
  for (std::size_t pos = sentence.find(id); pos != std::string_view::npos;
       pos = sentence.find(id, pos + 1)) {
    const bool left_ok = pos == 0 || !IsIdChar(sentence[pos - 1]);
    const std::size_t end = pos + id.size();
    const bool right_ok = end == sentence.size() || !IsIdChar(sentence[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool terminal = c == '\n' ||
                          ((c == '.' || c == '!' || c == '?') &&
                           (i + 1 == text.size() ||
                            std::isspace(static_cast<unsigned char>(text[i + 1]))));
    if (terminal) {
      const std::string_view piece = core::Trim(text.substr(start, i + 1 - start));
      if (!piece.empty()) sentences.emplace_back(piece);
      start = i + 1;
    }
  }
  const std::string_view tail = core::Trim(text.substr(start));
  if (!tail.empty()) sentences.emplace_back(tail);
  return sentences;
}

std::vector<ChatTurn> Concat(std::vector<ChatTurn> a,
                             const std::vector<ChatTurn>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ChatTurn AssistantTurn(const std::string& text) {
  return ChatTurn{Role::kAssistant, text, {}};
}

}  // namespace

void ValidateJudgeConfig(const JudgeConfig& config) {
  if (config.max_repairs > kMaxRepairsLimit) {
    throw Error(ErrorCode::kConfig,
                "max_repairs must be at most " + std::to_string(kMaxRepairsLimit));
  }
  if (!(config.temperature >= 0.0)) {
    throw Error(ErrorCode::kConfig, "temperature must be non-negative");
  }
}

Engine::Engine(Backend& backend, std::string model_id, JudgeConfig config)
    : backend_(backend), model_id_(std::move(model_id)), config_(std::move(config)) {
  ValidateJudgeConfig(config_);
}

std::string Engine::Call(const std::vector<ChatTurn>& turns) {
  CheckTurns(turns);
  return backend_.Complete(
      ChatRequest{model_id_, turns, config_.temperature, config_.seed});
}

JudgeResult Engine::Judge2afc(const std::string& prompt_sign,
                              const ImagePayload& image_a,
                              const ImagePayload& image_b,
                              const std::optional<ImagePayload>& prompt_image) {
  if (core::Trim(prompt_sign).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "prompt sign is empty");
  }
  if (image_a.bytes.empty() || image_b.bytes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "artifact image is empty");
  }
  JudgeResult result;
  std::vector<StageTranscript>& transcripts = result.transcripts;
  try {
    // Stage 1: prompt semiosis.
    StageInputs inputs;
    inputs.prompt = prompt_sign;
    inputs.prompt_image = prompt_image;
    const std::vector<ChatTurn> turns1 =
        RenderStagePrompt(Stage::kPromptHsg, inputs, config_);
    const codec::HsgParseOptions prompt_options{config_.complexity, std::nullopt};
    auto [prompt_hsg, t1] = InvokeWithRepair<core::Hsg>(
        Stage::kPromptHsg, {}, turns1, [&](std::string_view text) {
          return codec::ParsePromptHsg(text, prompt_options);
        });
    t1.parsed = codec::HsgToJson(prompt_hsg);
    const std::vector<ChatTurn> history =
        Concat(turns1, {AssistantTurn(t1.raw_response)});
    transcripts.push_back(std::move(t1));

    // Stage 2: artifact semiosis, conditioned on the prompt analysis.
    inputs.image_a = image_a;
    inputs.image_b = image_b;
    const std::vector<ChatTurn> turns2 =
        RenderStagePrompt(Stage::kArtifactHsg, inputs, config_);
    const codec::PairParseOptions pair_options{
        config_.complexity, SniffImageSize(image_a.bytes),
        SniffImageSize(image_b.bytes)};
    auto [pair, t2] = InvokeWithRepair<codec::HsgPair>(
        Stage::kArtifactHsg, history, turns2, [&](std::string_view text) {
          return codec::ParseArtifactHsgPair(text, pair_options);
        });
    t2.parsed = nlohmann::json::array(
        {codec::HsgToJson(pair.a), codec::HsgToJson(pair.b)});
    const std::vector<ChatTurn> history2 =
        Concat(Concat(history, turns2), {AssistantTurn(t2.raw_response)});
    transcripts.push_back(std::move(t2));

    result.output.cascade_a = core::ComposeCascade(prompt_hsg, pair.a);
    result.output.cascade_b = core::ComposeCascade(prompt_hsg, pair.b);

    // Stage 3: judgment over the threaded context.
    inputs.input_hsg = codec::CanonicalSerialize(prompt_hsg);
    inputs.output_hsg_a = codec::CanonicalSerialize(pair.a);
    inputs.output_hsg_b = codec::CanonicalSerialize(pair.b);
    const std::vector<ChatTurn> turns3 =
        RenderStagePrompt(Stage::kJudgment, inputs, config_);
    const codec::VerdictParseOptions verdict_options{config_.lenient_winner};
    auto [verdict, t3] = InvokeWithRepair<codec::VerdictDoc>(
        Stage::kJudgment, history2, turns3, [&](std::string_view text) {
          return codec::ParseVerdict(text, verdict_options);
        });
    t3.parsed = {{"discussion", verdict.discussion},
                 {"winner", std::string(core::Choice2Name(verdict.winner))}};
    transcripts.push_back(std::move(t3));

    result.output.verdict = verdict.winner;
    result.output.discussion = verdict.discussion;
    result.output.evidence = ExtractEvidence(verdict, result.output.cascade_a,
                                             result.output.cascade_b);
  } catch (StageError& e) {
    e.PrependTranscripts(transcripts);
    throw;
  }
  return result;
}

VqaResult Engine::AnswerVqa(const std::vector<ImagePayload>& images,
                            const std::string& stem,
                            const std::vector<std::string>& choices) {
  if (choices.size() != static_cast<std::size_t>(codec::kVqaChoiceCount)) {
    throw Error(ErrorCode::kInvalidArgument,
                "a VQA item needs exactly 4 choices, got " +
                    std::to_string(choices.size()));
  }
  if (images.empty() || images.size() > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a VQA item takes one or two images");
  }
  VqaResult result;
  std::vector<ChatTurn> context;
  try {
    if (config_.hsg_assisted_vqa) {
      std::vector<ChatTurn> turns;
      StageTranscript transcript;
      if (images.size() == 1) {
        turns = RenderSingleArtifactPrompt(images[0], config_);
        const codec::HsgParseOptions options{config_.complexity,
                                             SniffImageSize(images[0].bytes)};
        auto [hsg, t] = InvokeWithRepair<core::Hsg>(
            Stage::kArtifactHsg, {}, turns, [&](std::string_view text) {
              return codec::ParseArtifactHsg(text, options);
            });
        t.parsed = codec::HsgToJson(hsg);
        transcript = std::move(t);
      } else {
        StageInputs inputs;
        inputs.image_a = images[0];
        inputs.image_b = images[1];
        turns = RenderStagePrompt(Stage::kArtifactHsg, inputs, config_);
        const codec::PairParseOptions options{config_.complexity,
                                              SniffImageSize(images[0].bytes),
                                              SniffImageSize(images[1].bytes)};
        auto [pair, t] = InvokeWithRepair<codec::HsgPair>(
            Stage::kArtifactHsg, {}, turns, [&](std::string_view text) {
              return codec::ParseArtifactHsgPair(text, options);
            });
        t.parsed = nlohmann::json::array(
            {codec::HsgToJson(pair.a), codec::HsgToJson(pair.b)});
        transcript = std::move(t);
      }
      context = Concat(turns, {AssistantTurn(transcript.raw_response)});
      result.transcripts.push_back(std::move(transcript));
    }
    std::array<std::string, 4> four;
    std::copy(choices.begin(), choices.end(), four.begin());
    const std::vector<ChatTurn> turns = RenderVqaPrompt(images, stem, four);
    auto [choice, t] = InvokeWithRepair<codec::VqaChoice>(
        Stage::kVqa, context, turns,
        [](std::string_view text) { return codec::ParseVqaAnswer(text); });
    t.parsed = {{"answer", std::string(codec::VqaChoiceName(choice))}};
    result.choice = choice;
    result.transcripts.push_back(std::move(t));
  } catch (StageError& e) {
    e.PrependTranscripts(result.transcripts);
    throw;
  }
  return result;
}

std::vector<core::EvidenceItem> ExtractEvidence(const codec::VerdictDoc& verdict,
                                                const core::Cascade& cascade_a,
                                                const core::Cascade& cascade_b) {
  std::vector<core::EvidenceItem> evidence;
  if (!verdict.evidence.empty()) {
    for (const core::EvidenceItem& item : verdict.evidence) {
      if (core::ResolvesIn(item.node_ref, cascade_a, cascade_b)) {
        evidence.push_back(item);
      }
    }
    return evidence;
  }
  const std::vector<std::string> sentences = SplitSentences(verdict.discussion);
  for (const core::TaggedNode& tagged :
       core::DisjointNodeUnion(cascade_a, cascade_b)) {
    const core::NodeRef ref{tagged.tag, tagged.node.node_id};
    const bool seen = std::any_of(
        evidence.begin(), evidence.end(),
        [&](const core::EvidenceItem& e) { return e.node_ref == ref; });
    if (seen) continue;
    std::string rationale;
    for (const std::string& sentence : sentences) {
      if (!CitesId(sentence, ref.node_id)) continue;
      if (!rationale.empty()) rationale += ' ';
      rationale += sentence;
    }
    if (!rationale.empty()) evidence.push_back({ref, std::move(rationale)});
  }
  return evidence;
}

}  // namespace semjudge::judge
