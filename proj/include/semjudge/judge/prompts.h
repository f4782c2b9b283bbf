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

// Stage instructions. The wording of the three SemJudge stages is fixed;
// only the placeholders and the complexity note vary.

#ifndef SEMJUDGE_JUDGE_PROMPTS_H_
#define SEMJUDGE_JUDGE_PROMPTS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semjudge/codec/hsg_codec.h"
#include "semjudge/judge/chat.h"
#include "semjudge/judge/config.h"

namespace semjudge::judge {

enum class Stage { kPromptHsg, kArtifactHsg, kJudgment, kVqa };
std::string_view StageName(Stage stage);  // "PromptHsg", ...

inline constexpr std::string_view kImageTokenA = "<image A>";
inline constexpr std::string_view kImageTokenB = "<image B>";

// Distinctive phrases of each stage, used by the scripted backend.
inline constexpr std::string_view kPromptHsgMarker = "The sign is: ";
inline constexpr std::string_view kArtifactPairMarker =
    "decode their semiotic structure as two HSGs";
inline constexpr std::string_view kArtifactSingleMarker =
    "decode its semiotic structure as one HSG";
inline constexpr std::string_view kJudgmentMarker =
    "decide which generated image better fulfills";
inline constexpr std::string_view kVqaMarker =
    "Answer the multiple-choice question";
inline constexpr std::string_view kRepairMarker =
    "Your previous response could not be used";

struct StageInputs {
  std::optional<std::string> prompt;              // [$PROMPT]
  std::optional<ImagePayload> prompt_image;       // optional prompt-side image
  std::optional<ImagePayload> image_a;            // [$IMAGE_A]
  std::optional<ImagePayload> image_b;            // [$IMAGE_B]
  std::optional<std::string> input_hsg;           // [$INPUT_HSG]
  std::optional<std::string> output_hsg_a;        // [$OUTPUT_HSG_A]
  std::optional<std::string> output_hsg_b;        // [$OUTPUT_HSG_B]
};

// The turns a stage adds to the threaded context. Throws
// Error(kInvalidArgument) naming the first placeholder without input.
std::vector<ChatTurn> RenderStagePrompt(Stage stage, const StageInputs& inputs,
                                        const JudgeConfig& config);

// Single-image artifact HSG request used by HSG-assisted VQA.
std::vector<ChatTurn> RenderSingleArtifactPrompt(const ImagePayload& image,
                                                 const JudgeConfig& config);

// The question sees only the image(s), the stem and the choices.
std::vector<ChatTurn> RenderVqaPrompt(const std::vector<ImagePayload>& images,
                                      const std::string& stem,
                                      const std::array<std::string, 4>& choices);

ChatTurn RenderRepairTurn(const std::vector<codec::SchemaViolation>& violations);

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_PROMPTS_H_
