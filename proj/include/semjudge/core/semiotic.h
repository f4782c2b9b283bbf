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

// Peircean semiosis types: triads, grounds, hierarchical semiosis graphs
// (HSGs) and the two-stage cascades built from them, plus the pure
// functions over those values.

#ifndef SEMJUDGE_CORE_SEMIOTIC_H_
#define SEMJUDGE_CORE_SEMIOTIC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semjudge::core {

enum class GroundKind { kIconic, kIndexical, kSymbolic };

// Lower-case wire name: "iconic", "indexical", "symbolic".
std::string_view GroundKindName(GroundKind kind);
// Case-insensitive lookup; nullopt for anything else.
std::optional<GroundKind> GroundKindFromString(std::string_view name);

// Expert-averaged 7-point Likert ratings; fractional values allowed.
struct GroundProfile {
  double icn = 1.0;
  double idx = 1.0;
  double sym = 1.0;

  friend bool operator==(const GroundProfile&, const GroundProfile&) = default;
};

inline constexpr double kLikertMin = 1.0;
inline constexpr double kLikertMax = 7.0;

bool IsValidProfile(const GroundProfile& profile);

// One triad. On prompt-side nodes `grounds` holds the expected grounds.
struct Semiosis {
  std::string sign_description;
  std::string inferred_object;  // the immediate object
  std::string interpretant;
  std::set<GroundKind> grounds;

  friend bool operator==(const Semiosis&, const Semiosis&) = default;
};

// Pixel coordinates, origin at the top-left corner.
struct BoundingBox {
  std::int64_t x_min = 0;
  std::int64_t y_min = 0;
  std::int64_t x_max = 0;
  std::int64_t y_max = 0;

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct ImageSize {
  std::int64_t width = 0;
  std::int64_t height = 0;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Clips `box` to [0,width]x[0,height]. The result may be degenerate.
BoundingBox ClampToImage(const BoundingBox& box, const ImageSize& size);

// Converts normalized [0,1] coordinates to pixels (rounded to nearest).
BoundingBox FromNormalized(double x_min, double y_min, double x_max,
                           double y_max, const ImageSize& size);

inline constexpr std::size_t kMaxBoxesPerNode = 3;

struct HsgNode {
  std::string node_id;
  Semiosis semiosis;
  std::string relation_to_root;  // empty on the root
  std::vector<BoundingBox> bounding_boxes;

  friend bool operator==(const HsgNode&, const HsgNode&) = default;
};

enum class HsgSide { kPrompt, kArtifact };
enum class Complexity { kStandard, kComplex };

std::string_view ComplexityName(Complexity complexity);
std::optional<Complexity> ComplexityFromString(std::string_view name);

// Children cap: 3 for Standard, 5 for Complex.
std::size_t MaxChildren(Complexity complexity);
// Below this many children the graph is valid but flagged with a warning.
inline constexpr std::size_t kRecommendedMinChildren = 3;

// Depth-1 rooted tree: edges only between the root and each child.
struct Hsg {
  HsgNode root;
  std::vector<HsgNode> children;
  HsgSide side = HsgSide::kPrompt;
  Complexity complexity = Complexity::kStandard;

  std::size_t node_count() const { return 1 + children.size(); }
  // Root first, then children in order.
  std::vector<const HsgNode*> nodes() const;
  const HsgNode* FindNode(std::string_view node_id) const;

  friend bool operator==(const Hsg&, const Hsg&) = default;
};

struct Violation {
  std::string node_id;  // empty for graph-level rules
  std::string field;    // offending field relative to the node, or ""
  std::string rule;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;

  bool ok() const { return violations.empty(); }
};

// Every violation of the HSG invariants. Never throws. When `image_size` is
// given, boxes that fall entirely outside the image are reported.
ValidationReport ValidateHsg(const Hsg& hsg,
                             std::optional<ImageSize> image_size = {});

// Prompt HSG followed by one or more artifact HSGs. This build only creates
// two-stage cascades but the type admits longer chains.
struct Cascade {
  std::vector<Hsg> stages;

  std::size_t node_count() const;
  friend bool operator==(const Cascade&, const Cascade&) = default;
};

// Throws Error(kSideMismatch) or Error(kInvalidHsg).
Cascade ComposeCascade(const Hsg& prompt_hsg, const Hsg& artifact_hsg);

enum class CascadeTag { kA, kB };
std::string_view CascadeTagName(CascadeTag tag);

struct TaggedNode {
  CascadeTag tag = CascadeTag::kA;
  std::size_t stage = 0;
  HsgNode node;

  friend bool operator==(const TaggedNode&, const TaggedNode&) = default;
};

// Every node of both cascades exactly once, tagged by origin; colliding
// node_ids (and shared prompt stages) are kept as distinct entries.
std::vector<TaggedNode> DisjointNodeUnion(const Cascade& cascade_a,
                                          const Cascade& cascade_b);

struct NodeRef {
  CascadeTag tag = CascadeTag::kA;
  std::string node_id;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct EvidenceItem {
  NodeRef node_ref;
  std::string rationale;

  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

enum class Choice2 { kA, kB };
std::string_view Choice2Name(Choice2 choice);
Choice2 Flip(Choice2 choice);

struct JudgeOutput {
  Cascade cascade_a;
  Cascade cascade_b;
  std::vector<EvidenceItem> evidence;
  Choice2 verdict = Choice2::kA;
  std::string discussion;

  friend bool operator==(const JudgeOutput&, const JudgeOutput&) = default;
};

// True when `ref` names a node in the referenced cascade.
bool ResolvesIn(const NodeRef& ref, const Cascade& cascade_a,
                const Cascade& cascade_b);

// Icn - (Idx + Sym) / 2, in [-6, 6] for valid profiles.
double NetIconicity(const GroundProfile& profile);

// NI(prompt) + (NI(a) + NI(b)) / 2; symmetric in a and b.
double InstanceNetIconicity(const GroundProfile& prompt,
                            const GroundProfile& a, const GroundProfile& b);

// Whitespace trim used for the non-empty text invariants.
std::string_view Trim(std::string_view text);

}  // namespace semjudge::core

#endif  // SEMJUDGE_CORE_SEMIOTIC_H_
