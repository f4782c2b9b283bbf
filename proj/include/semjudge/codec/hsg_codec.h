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

// JSON wire formats for prompt HSGs, artifact HSG pairs, 2AFC verdicts and
// VQA answers. Parsers never throw on bad model output: every problem found
// is returned as a SchemaViolation whose hint is fed back through the repair
// loop.

#ifndef SEMJUDGE_CODEC_HSG_CODEC_H_
#define SEMJUDGE_CODEC_HSG_CODEC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/core/semiotic.h"

namespace semjudge::codec {

struct SchemaViolation {
  std::string json_path;  // e.g. "hsg_root.children[2].bounding_box"
  std::string rule;
  std::string hint;  // one sentence, embeddable in a repair prompt

  friend bool operator==(const SchemaViolation&,
                         const SchemaViolation&) = default;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<SchemaViolation> violations;

  bool ok() const { return value.has_value(); }
};

struct HsgParseOptions {
  core::Complexity complexity = core::Complexity::kStandard;
  // Enables normalized-coordinate conversion and clamping for artifacts.
  std::optional<core::ImageSize> image_size;
};

ParseResult<core::Hsg> ParsePromptHsg(std::string_view text,
                                      const HsgParseOptions& options = {});

// A single artifact HSG document (single-image VQA assistance).
ParseResult<core::Hsg> ParseArtifactHsg(std::string_view text,
                                        const HsgParseOptions& options = {});

struct HsgPair {
  core::Hsg a;
  core::Hsg b;
};

struct PairParseOptions {
  core::Complexity complexity = core::Complexity::kStandard;
  std::optional<core::ImageSize> image_a;
  std::optional<core::ImageSize> image_b;
};

// Accepts two concatenated objects or a two-element array of objects.
ParseResult<HsgPair> ParseArtifactHsgPair(std::string_view text,
                                          const PairParseOptions& options = {});

struct VerdictDoc {
  std::string discussion;
  core::Choice2 winner = core::Choice2::kA;
  // Optional "evidence" array: [{"cascade":"A","node_id":..,"rationale":..}].
  std::vector<core::EvidenceItem> evidence;
};

struct VerdictParseOptions {
  // Accepts "a"/"b" (and surrounding whitespace) when set.
  bool lenient_winner = false;
};

ParseResult<VerdictDoc> ParseVerdict(std::string_view text,
                                     const VerdictParseOptions& options = {});

enum class VqaChoice { kA, kB, kC, kD };
inline constexpr int kVqaChoiceCount = 4;
std::string_view VqaChoiceName(VqaChoice choice);
std::optional<VqaChoice> VqaChoiceFromString(std::string_view letter);

// {"answer":"C"} or a bare letter.
ParseResult<VqaChoice> ParseVqaAnswer(std::string_view text);

// Tree form used by the canonical serializer (keys sorted by nlohmann's
// std::map-backed objects).
nlohmann::json HsgToJson(const core::Hsg& hsg);

// Deterministic, whitespace-free UTF-8 JSON with sorted keys.
std::string CanonicalSerialize(const core::Hsg& hsg);

// Joined hints of every violation, one per line.
std::string FormatHints(const std::vector<SchemaViolation>& violations);

}  // namespace semjudge::codec

#endif  // SEMJUDGE_CODEC_HSG_CODEC_H_
