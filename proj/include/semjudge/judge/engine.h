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

#ifndef SEMJUDGE_JUDGE_ENGINE_H_
#define SEMJUDGE_JUDGE_ENGINE_H_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/codec/hsg_codec.h"
#include "semjudge/core/semiotic.h"
#include "semjudge/error.h"
#include "semjudge/judge/chat.h"
#include "semjudge/judge/config.h"
#include "semjudge/judge/prompts.h"

namespace semjudge::judge {

struct StageTranscript {
  Stage stage = Stage::kPromptHsg;
  std::vector<ChatTurn> request_turns;  // turns of the first request
  std::string raw_response;             // final response, verbatim
  std::size_t repairs_used = 0;
  std::vector<std::string> attempts;    // every response, in order
  nlohmann::json parsed;                // accepted value, null on failure
};

// A stage failed. code() is kTransport or kRepairExhausted (or the code of
// whatever else the backend threw); transcripts() holds every stage run so
// far, the failing one last.
class StageError : public Error {
 public:
  StageError(ErrorCode code, Stage stage, const std::string& message,
             std::vector<StageTranscript> transcripts)
      : Error(code, std::string(StageName(stage)) + ": " + message),
        stage_(stage),
        transcripts_(std::move(transcripts)) {}

  Stage stage() const { return stage_; }
  const std::vector<StageTranscript>& transcripts() const {
    return transcripts_;
  }
  // Adds the transcripts of stages that completed before this one.
  void PrependTranscripts(const std::vector<StageTranscript>& earlier) {
    transcripts_.insert(transcripts_.begin(), earlier.begin(), earlier.end());
  }

 private:
  Stage stage_;
  std::vector<StageTranscript> transcripts_;
};

template <typename T>
using StageParser = std::function<codec::ParseResult<T>(std::string_view)>;

struct JudgeResult {
  core::JudgeOutput output;
  std::vector<StageTranscript> transcripts;  // PromptHsg, ArtifactHsg, Judgment
};

struct VqaResult {
  codec::VqaChoice choice = codec::VqaChoice::kA;
  std::vector<StageTranscript> transcripts;
};

class Engine {
 public:
  // Throws Error(kConfig) on an invalid config.
  Engine(Backend& backend, std::string model_id, JudgeConfig config);

  // Sends `context` + `turns`; on schema violations appends the response and
  // a repair turn and tries again, up to config.max_repairs times.
  template <typename T>
  std::pair<T, StageTranscript> InvokeWithRepair(
      Stage stage, const std::vector<ChatTurn>& context,
      const std::vector<ChatTurn>& turns, const StageParser<T>& parser);

  JudgeResult Judge2afc(const std::string& prompt_sign,
                        const ImagePayload& image_a,
                        const ImagePayload& image_b,
                        const std::optional<ImagePayload>& prompt_image = {});

  // `images` holds one image, or two for pair-comparison items.
  VqaResult AnswerVqa(const std::vector<ImagePayload>& images,
                      const std::string& stem,
                      const std::vector<std::string>& choices);

  const JudgeConfig& config() const { return config_; }

 private:
  std::string Call(const std::vector<ChatTurn>& turns);

  Backend& backend_;
  std::string model_id_;
  JudgeConfig config_;
};

// Node-level evidence for a verdict. An explicit evidence list is used when
// present (entries naming unknown nodes are dropped); otherwise every
// sentence of the discussion citing a node_id becomes that node's rationale.
std::vector<core::EvidenceItem> ExtractEvidence(
    const codec::VerdictDoc& verdict, const core::Cascade& cascade_a,
    const core::Cascade& cascade_b);

// ---------------------------------------------------------------------------

template <typename T>
std::pair<T, StageTranscript> Engine::InvokeWithRepair(
    Stage stage, const std::vector<ChatTurn>& context,
    const std::vector<ChatTurn>& turns, const StageParser<T>& parser) {
  StageTranscript transcript;
  transcript.stage = stage;
  std::vector<ChatTurn> request = context;
  request.insert(request.end(), turns.begin(), turns.end());
  transcript.request_turns = request;

  for (std::size_t attempt = 0;; ++attempt) {
    std::string response;
    try {
      response = Call(request);
    } catch (const StageError&) {
      throw;
    } catch (const Error& e) {
      throw StageError(e.code(), stage, e.what(), {transcript});
    }
    transcript.attempts.push_back(response);
    transcript.raw_response = response;
    codec::ParseResult<T> parsed = parser(response);
    if (parsed.ok()) {
      transcript.repairs_used = attempt;
      return {std::move(*parsed.value), std::move(transcript)};
    }
    if (attempt == config_.max_repairs) {
      transcript.repairs_used = attempt;
      throw StageError(ErrorCode::kRepairExhausted, stage,
                       "no schema-valid response after " +
                           std::to_string(attempt + 1) + " calls:\n" +
                           codec::FormatHints(parsed.violations),
                       {transcript});
    }
    request.push_back(ChatTurn{Role::kAssistant, response, {}});
    request.push_back(RenderRepairTurn(parsed.violations));
  }
}

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_ENGINE_H_
