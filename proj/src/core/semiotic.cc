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

#include "semjudge/core/semiotic.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_set>

#include "semjudge/error.h"

namespace semjudge::core {
namespace {

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

void CheckNode(const HsgNode& node, bool is_root, const Hsg& hsg,
               const std::optional<ImageSize>& image_size,
               std::vector<Violation>& out) {
  auto add = [&](std::string field, std::string rule, std::string message) {
    out.push_back({node.node_id, std::move(field), std::move(rule),
                   std::move(message)});
  };
  if (Trim(node.node_id).empty()) {
    add("node_id", "empty-node-id", "node_id must be non-empty");
  }
  const Semiosis& s = node.semiosis;
  if (Trim(s.sign_description).empty()) {
    add("semiosis.sign_description", "empty-field", "sign_description must be non-empty");
  }
  if (Trim(s.inferred_object).empty()) {
    add("semiosis.inferred_object", "empty-field", "inferred_object must be non-empty");
  }
  if (Trim(s.interpretant).empty()) {
    add("semiosis.interpretant", "empty-field", "interpretant must be non-empty");
  }
  if (s.grounds.empty()) {
    add("semiosis.grounds", "empty-grounds", "grounds must name at least one ground kind");
  }
  if (is_root && !Trim(node.relation_to_root).empty()) {
    add("relation_to_root", "root-relation", "the root node must not carry relation_to_root");
  }
  if (!is_root && Trim(node.relation_to_root).empty()) {
    add("relation_to_root", "missing-relation", "child node must state relation_to_root");
  }
  if (hsg.side == HsgSide::kPrompt && !node.bounding_boxes.empty()) {
    add("bounding_box", "prompt-side-box", "prompt-side nodes carry no bounding boxes");
  }
  if (node.bounding_boxes.size() > kMaxBoxesPerNode) {
    add("bounding_box", "box-count", "node has " + std::to_string(node.bounding_boxes.size()) +
                         " bounding boxes; at most 3 allowed");
  }
  for (const BoundingBox& box : node.bounding_boxes) {
    if (box.x_min < 0 || box.y_min < 0 || box.x_max < 0 || box.y_max < 0) {
      add("bounding_box", "negative-coordinate", "box coordinates must be non-negative");
    }
    if (box.x_min == box.x_max) {
      add("bounding_box", "degenerate-box", "degenerate box: x_min == x_max");
    } else if (box.x_min > box.x_max) {
      add("bounding_box", "inverted-box", "inverted box: x_min > x_max");
    }
    if (box.y_min == box.y_max) {
      add("bounding_box", "degenerate-box", "degenerate box: y_min == y_max");
    } else if (box.y_min > box.y_max) {
      add("bounding_box", "inverted-box", "inverted box: y_min > y_max");
    }
    if (image_size && box.x_min < box.x_max && box.y_min < box.y_max) {
      const BoundingBox clamped = ClampToImage(box, *image_size);
      if (clamped.x_min >= clamped.x_max || clamped.y_min >= clamped.y_max) {
        add("bounding_box", "box-outside-image", "box lies outside the image extent");
      }
    }
  }
}

}  // namespace

std::string_view GroundKindName(GroundKind kind) {
  switch (kind) {
    case GroundKind::kIconic: return "iconic";
    case GroundKind::kIndexical: return "indexical";
    case GroundKind::kSymbolic: return "symbolic";
  }
  return "iconic";
}

std::optional<GroundKind> GroundKindFromString(std::string_view name) {
  const std::string lowered = Lower(Trim(name));
  if (lowered == "iconic") return GroundKind::kIconic;
  if (lowered == "indexical") return GroundKind::kIndexical;
  if (lowered == "symbolic") return GroundKind::kSymbolic;
  return std::nullopt;
}

bool IsValidProfile(const GroundProfile& p) {
  auto in_range = [](double v) {
    return std::isfinite(v) && v >= kLikertMin && v <= kLikertMax;
  };
  return in_range(p.icn) && in_range(p.idx) && in_range(p.sym);
}

BoundingBox ClampToImage(const BoundingBox& box, const ImageSize& size) {
  auto clamp = [](std::int64_t v, std::int64_t hi) {
    return std::clamp<std::int64_t>(v, 0, std::max<std::int64_t>(hi, 0));
  };
  return {clamp(box.x_min, size.width), clamp(box.y_min, size.height),
          clamp(box.x_max, size.width), clamp(box.y_max, size.height)};
}

BoundingBox FromNormalized(double x_min, double y_min, double x_max,
                           double y_max, const ImageSize& size) {
  auto px = [](double v, std::int64_t extent) {
    return static_cast<std::int64_t>(std::llround(v * static_cast<double>(extent)));
  };
  return {px(x_min, size.width), px(y_min, size.height),
          px(x_max, size.width), px(y_max, size.height)};
}

std::string_view ComplexityName(Complexity complexity) {
  return complexity == Complexity::kStandard ? "standard" : "complex";
}

std::optional<Complexity> ComplexityFromString(std::string_view name) {
  const std::string lowered = Lower(Trim(name));
  if (lowered == "standard") return Complexity::kStandard;
  if (lowered == "complex") return Complexity::kComplex;
  return std::nullopt;
}

std::size_t MaxChildren(Complexity complexity) {
  return complexity == Complexity::kStandard ? 3 : 5;
}

std::vector<const HsgNode*> Hsg::nodes() const {
  std::vector<const HsgNode*> out;
  out.reserve(node_count());
  out.push_back(&root);
  for (const HsgNode& child : children) out.push_back(&child);
  return out;
}

const HsgNode* Hsg::FindNode(std::string_view node_id) const {
  for (const HsgNode* node : nodes()) {
    if (node->node_id == node_id) return node;
  }
  return nullptr;
}

ValidationReport ValidateHsg(const Hsg& hsg,
                             std::optional<ImageSize> image_size) {
  ValidationReport report;
  CheckNode(hsg.root, /*is_root=*/true, hsg, image_size, report.violations);
  for (const HsgNode& child : hsg.children) {
    CheckNode(child, /*is_root=*/false, hsg, image_size, report.violations);
  }

  std::unordered_set<std::string> seen;
  for (const HsgNode* node : hsg.nodes()) {
    if (Trim(node->node_id).empty()) continue;
    if (!seen.insert(node->node_id).second) {
      report.violations.push_back(
          {node->node_id, "node_id", "duplicate-node-id",
           "node_id \"" + node->node_id + "\" is not unique"});
    }
  }

  const std::size_t cap = MaxChildren(hsg.complexity);
  if (hsg.children.empty()) {
    report.violations.push_back(
        {"", "children", "child-count", "child-count below minimum 1"});
  } else if (hsg.children.size() > cap) {
    report.violations.push_back(
        {"", "children", "child-count",
         "child-count exceeds " +
             std::string(hsg.complexity == Complexity::kStandard ? "Standard"
                                                                 : "Complex") +
             " bound " + std::to_string(cap)});
  } else if (hsg.children.size() < kRecommendedMinChildren) {
    report.warnings.push_back(
        {"", "children", "child-count-low",
         "only " + std::to_string(hsg.children.size()) +
             " sub-signs; 3 or more are recommended"});
  }
  return report;
}

std::size_t Cascade::node_count() const {
  std::size_t total = 0;
  for (const Hsg& stage : stages) total += stage.node_count();
  return total;
}

Cascade ComposeCascade(const Hsg& prompt_hsg, const Hsg& artifact_hsg) {
  if (prompt_hsg.side != HsgSide::kPrompt) {
    throw Error(ErrorCode::kSideMismatch,
                "first cascade stage must be a prompt-side HSG");
  }
  if (artifact_hsg.side != HsgSide::kArtifact) {
    throw Error(ErrorCode::kSideMismatch,
                "second cascade stage must be an artifact-side HSG");
  }
  for (const Hsg* hsg : {&prompt_hsg, &artifact_hsg}) {
    const ValidationReport report = ValidateHsg(*hsg);
    if (!report.ok()) {
      const Violation& first = report.violations.front();
      throw Error(ErrorCode::kInvalidHsg,
                  std::string(hsg->side == HsgSide::kPrompt ? "prompt"
                                                            : "artifact") +
                      " HSG is invalid (" + first.rule + "): " +
                      first.message);
    }
  }
  return Cascade{{prompt_hsg, artifact_hsg}};
}

std::string_view CascadeTagName(CascadeTag tag) {
  return tag == CascadeTag::kA ? "A" : "B";
}

std::vector<TaggedNode> DisjointNodeUnion(const Cascade& cascade_a,
                                          const Cascade& cascade_b) {
  std::vector<TaggedNode> out;
  out.reserve(cascade_a.node_count() + cascade_b.node_count());
  for (auto [tag, cascade] : {std::pair{CascadeTag::kA, &cascade_a},
                              std::pair{CascadeTag::kB, &cascade_b}}) {
    for (std::size_t stage = 0; stage < cascade->stages.size(); ++stage) {
      for (const HsgNode* node : cascade->stages[stage].nodes()) {
        out.push_back({tag, stage, *node});
      }
    }
  }
  return out;
}

std::string_view Choice2Name(Choice2 choice) {
  return choice == Choice2::kA ? "A" : "B";
}

Choice2 Flip(Choice2 choice) {
  return choice == Choice2::kA ? Choice2::kB : Choice2::kA;
}

bool ResolvesIn(const NodeRef& ref, const Cascade& cascade_a,
                const Cascade& cascade_b) {
  const Cascade& cascade = ref.tag == CascadeTag::kA ? cascade_a : cascade_b;
  return std::any_of(cascade.stages.begin(), cascade.stages.end(),
                     [&](const Hsg& hsg) {
                       return hsg.FindNode(ref.node_id) != nullptr;
                     });
}

double NetIconicity(const GroundProfile& p) {
  return p.icn - 0.5 * (p.idx + p.sym);
}

double InstanceNetIconicity(const GroundProfile& prompt,
                            const GroundProfile& a, const GroundProfile& b) {
  return NetIconicity(prompt) + 0.5 * (NetIconicity(a) + NetIconicity(b));
}

std::string_view Trim(std::string_view text) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

}  // namespace semjudge::core
