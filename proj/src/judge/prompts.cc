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

#include "semjudge/judge/prompts.h"

#include "semjudge/error.h"

namespace semjudge::judge {
namespace {

constexpr std::string_view kPromptHsgSystem =
    "You are an expert Computational Semiotician acting as an interpreter. "
    "Your task is to analyze a sign, namely the user input prompt (text or "
    "text+image), and infer the user's intention as a structured Hierarchical "
    "Semiosis Graph (HSG) whose nodes represent triadic semiosis: sign, "
    "object, and interpretant.\n\n"
    "The prompt follows Peircean triadic semiosis. For the root and each child "
    "node, identify: (i) the sign as the relevant textual or multimodal "
    "feature, (ii) the object as the target reality or conceptual subject, "
    "(iii) the interpretant as the target effect or mental conception, and "
    "(iv) the expected grounds connecting sign to object: iconic, indexical, "
    "or symbolic. During input analysis, expected grounds are inferred "
    "guidelines rather than hard constraints.\n\n"
    "1. Analyze the prompt holistically to identify the global object, "
    "dominant interpretant, and expected grounds. 2. Decompose the prompt into "
    "3--5 critical sub-signs using concise descriptions. 3. State how each "
    "sub-sign contributes to the root node, such as elaboration, "
    "contextualization, or stylization.\n\n"
    "Return a valid JSON object only. The root node is hsg_root with node_id, "
    "a semiosis object containing sign_description, inferred_object, "
    "interpretant, and expected_grounds, plus a children list of sub-sign "
    "nodes and their relation_to_root.";

constexpr std::string_view kArtifactPairInstruction =
    "You are an expert Computational Semiotician acting as a visual "
    "interpreter. Your task is to analyze a pair of generated images produced "
    "from the same prompt and decode their semiotic structure as two HSGs.\n\n"
    "As in the input-sign analysis, follow Peircean triadic semiosis. For the "
    "root node and each visual child node, identify sign, object, "
    "interpretant, and grounds.\n\n"
    "1. Analyze each generated image holistically to identify the overarching "
    "object, dominant interpretant, and primary grounds. 2. Decompose each "
    "image into 3--5 visual sub-signs and analyze their triadic semiosis. "
    "3. When a sub-sign is localizable, provide up to three bounding boxes in "
    "image coordinates [x_min, y_min, x_max, y_max] relative to the full "
    "image. 4. State how each sub-sign contributes to the global "
    "meaning-making, such as contextualization, contrast, or thematic "
    "reinforcement.\n\n"
    "Return two valid JSON objects only, one for image A and one for image B. "
    "Each should contain an hsg_root with root-level semiosis fields, child "
    "nodes, optional bounding_box entries for localizable elements, and "
    "relation_to_root.";

constexpr std::string_view kArtifactSingleInstruction =
    "You are an expert Computational Semiotician acting as a visual "
    "interpreter. Your task is to analyze a generated image and decode its "
    "semiotic structure as one HSG.\n\n"
    "Follow Peircean triadic semiosis. For the root node and each visual "
    "child node, identify sign, object, interpretant, and grounds.\n\n"
    "1. Analyze the image holistically to identify the overarching object, "
    "dominant interpretant, and primary grounds. 2. Decompose the image into "
    "3--5 visual sub-signs and analyze their triadic semiosis. 3. When a "
    "sub-sign is localizable, provide up to three bounding boxes in image "
    "coordinates [x_min, y_min, x_max, y_max] relative to the full image. "
    "4. State how each sub-sign contributes to the global meaning-making.\n\n"
    "Return one valid JSON object only, containing an hsg_root with "
    "root-level semiosis fields, child nodes, optional bounding_box entries "
    "for localizable elements, and relation_to_root.";

constexpr std::string_view kJudgmentInstruction =
    "Given the raw input and the reconstructed HSGs for the user input and "
    "the two model outputs, decide which generated image better fulfills the "
    "user's intended object in the input semiosis. The HSGs are used as "
    "structured evidence for comparison.";

constexpr std::string_view kJudgmentFormat =
    "Return a valid JSON object only with fields discussion and winner. The "
    "discussion should give the verbatim decision process with reference to "
    "the input and output HSGs, and winner must be either \"A\" or \"B\". "
    "Cite HSG nodes by their node_id.";

std::string ComplexityNote(core::Complexity complexity) {
  if (complexity == core::Complexity::kComplex) {
    return "Use at most 5 sub-signs per HSG and give detailed descriptions.";
  }
  return "Use at most 3 sub-signs per HSG and keep descriptions succinct.";
}

template <typename T>
const T& Require(const std::optional<T>& value, std::string_view placeholder) {
  if (!value) {
    throw Error(ErrorCode::kInvalidArgument,
                "missing input for placeholder " + std::string(placeholder));
  }
  return *value;
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kPromptHsg: return "PromptHsg";
    case Stage::kArtifactHsg: return "ArtifactHsg";
    case Stage::kJudgment: return "Judgment";
    case Stage::kVqa: return "Vqa";
  }
  return "PromptHsg";
}

std::vector<ChatTurn> RenderStagePrompt(Stage stage, const StageInputs& inputs,
                                        const JudgeConfig& config) {
  std::vector<ChatTurn> turns;
  switch (stage) {
    case Stage::kPromptHsg: {
      const std::string& prompt = Require(inputs.prompt, "[$PROMPT]");
      turns.push_back({Role::kSystem,
                       std::string(kPromptHsgSystem) + "\n\n" +
                           ComplexityNote(config.complexity),
                       {}});
      ChatTurn user{Role::kUser,
                    std::string(kPromptHsgMarker) + prompt + ".", {}};
      if (inputs.prompt_image) user.images.push_back(*inputs.prompt_image);
      turns.push_back(std::move(user));
      break;
    }
    case Stage::kArtifactHsg: {
      const ImagePayload& a = Require(inputs.image_a, "[$IMAGE_A]");
      const ImagePayload& b = Require(inputs.image_b, "[$IMAGE_B]");
      turns.push_back({Role::kUser,
                       std::string(kArtifactPairInstruction) + "\n\n" +
                           ComplexityNote(config.complexity) + "\n\n" +
                           std::string(kPromptHsgMarker) + "A: " +
                           std::string(kImageTokenA) + " B: " +
                           std::string(kImageTokenB) + ".",
                       {a, b}});
      break;
    }
    case Stage::kJudgment: {
      const std::string& input = Require(inputs.input_hsg, "[$INPUT_HSG]");
      const std::string& out_a = Require(inputs.output_hsg_a, "[$OUTPUT_HSG_A]");
      const std::string& out_b = Require(inputs.output_hsg_b, "[$OUTPUT_HSG_B]");
      std::string text(kJudgmentInstruction);
      if (inputs.prompt) text += "\n\nUser input: " + *inputs.prompt;
      text += "\n\nInput HSG: " + input;
      text += "\nOutput HSG A: " + out_a;
      text += "\nOutput HSG B: " + out_b;
      ChatTurn user{Role::kUser, std::string(), {}};
      if (config.judge_sees_images) {
        const ImagePayload& a = Require(inputs.image_a, "[$IMAGE_A]");
        const ImagePayload& b = Require(inputs.image_b, "[$IMAGE_B]");
        text += "\nImage A: " + std::string(kImageTokenA) +
                " Image B: " + std::string(kImageTokenB);
        user.images = {a, b};
      }
      text += "\n\n" + std::string(kJudgmentFormat);
      user.text = std::move(text);
      turns.push_back(std::move(user));
      break;
    }
    case Stage::kVqa:
      throw Error(ErrorCode::kInvalidArgument,
                  "VQA prompts are rendered with RenderVqaPrompt");
  }
  return turns;
}

std::vector<ChatTurn> RenderSingleArtifactPrompt(const ImagePayload& image,
                                                 const JudgeConfig& config) {
  return {ChatTurn{Role::kUser,
                   std::string(kArtifactSingleInstruction) + "\n\n" +
                       ComplexityNote(config.complexity) + "\n\n" +
                       std::string(kPromptHsgMarker) +
                       std::string(kImageTokenA) + ".",
                   {image}}};
}

std::vector<ChatTurn> RenderVqaPrompt(const std::vector<ImagePayload>& images,
                                      const std::string& stem,
                                      const std::array<std::string, 4>& choices) {
  if (images.empty() || images.size() > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a VQA question takes one or two images");
  }
  std::string text(kVqaMarker);
  text += " about the image";
  text += images.size() == 2 ? "s (image a: " + std::string(kImageTokenA) +
                                   ", image b: " + std::string(kImageTokenB) +
                                   ")."
                             : " " + std::string(kImageTokenA) + ".";
  text += "\n\nQuestion: " + stem + "\n";
  static constexpr char kLetters[] = "ABCD";
  for (std::size_t i = 0; i < choices.size(); ++i) {
    text += std::string(1, kLetters[i]) + ". " + choices[i] + "\n";
  }
  text += "\nReturn a valid JSON object only: {\"answer\": \"A\"|\"B\"|\"C\"|\"D\"}.";
  return {ChatTurn{Role::kUser, std::move(text), images}};
}

ChatTurn RenderRepairTurn(const std::vector<codec::SchemaViolation>& violations) {
  std::string text(kRepairMarker);
  text += " because it does not match the required schema:\n";
  text += codec::FormatHints(violations);
  text += "\nRespond again with valid JSON only, no prose and no code fences.";
  return ChatTurn{Role::kUser, std::move(text), {}};
}

}  // namespace semjudge::judge
