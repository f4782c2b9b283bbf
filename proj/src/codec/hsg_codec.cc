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

#include "semjudge/codec/hsg_codec.h"

#include <cmath>
#include <utility>

#include "semjudge/codec/json_extract.h"

namespace semjudge::codec {
namespace {

using nlohmann::json;
using core::BoundingBox;
using core::GroundKind;
using core::Hsg;
using core::HsgNode;
using core::HsgSide;

constexpr std::string_view kPromptGroundsKey = "expected_grounds";
constexpr std::string_view kArtifactGroundsKey = "grounds";

std::string_view GroundsKey(HsgSide side) {
  return side == HsgSide::kPrompt ? kPromptGroundsKey : kArtifactGroundsKey;
}

std::string JoinPath(const std::string& base, std::string_view key) {
  if (base.empty()) return std::string(key);
  return base + "." + std::string(key);
}

std::string IndexPath(const std::string& base, std::size_t index) {
  return base + "[" + std::to_string(index) + "]";
}

bool IsUnder(const std::string& path, const std::string& ancestor) {
  if (path == ancestor) return true;
  if (path.size() <= ancestor.size()) return false;
  if (path.compare(0, ancestor.size(), ancestor) != 0) return false;
  const char next = path[ancestor.size()];
  return next == '.' || next == '[';
}

const char* TypeName(const json& value) {
  return value.type_name();
}

// Walks one HSG document, building the most complete Hsg it can while
// recording structural violations; semantic rules are delegated to
// core::ValidateHsg afterwards.
class HsgWalker {
 public:
  HsgWalker(HsgSide side, core::Complexity complexity,
            std::optional<core::ImageSize> image_size, std::string prefix,
            std::vector<SchemaViolation>& sink)
      : side_(side),
        complexity_(complexity),
        image_size_(image_size),
        prefix_(std::move(prefix)),
        sink_(sink) {}

  std::optional<Hsg> Parse(const json& doc) {
    const std::size_t first_violation = sink_.size();
    if (!doc.is_object()) {
      Add(prefix_.empty() ? "$" : prefix_, "wrong-type",
          "Return a JSON object whose only top-level key is hsg_root.");
      return std::nullopt;
    }
    const std::string root_path = JoinPath(prefix_, "hsg_root");
    auto it = doc.find("hsg_root");
    if (it == doc.end()) {
      Add(root_path, "missing-key",
          "The document is missing key hsg_root, so add it at the top level.");
      return std::nullopt;
    }
    if (!it->is_object()) {
      Add(root_path, "wrong-type",
          std::string("Make hsg_root a JSON object instead of ") +
              TypeName(*it) + ".");
      return std::nullopt;
    }

    Hsg hsg;
    hsg.side = side_;
    hsg.complexity = complexity_;
    hsg.root = ParseNode(*it, root_path, /*is_root=*/true);
    node_paths_.push_back(root_path);

    const std::string children_path = JoinPath(root_path, "children");
    auto children = it->find("children");
    if (children == it->end()) {
      Add(children_path, "missing-key",
          "Add a children list of sub-sign nodes under hsg_root.");
    } else if (!children->is_array()) {
      Add(children_path, "wrong-type", "Make hsg_root.children a JSON array.");
    } else {
      for (std::size_t i = 0; i < children->size(); ++i) {
        const std::string child_path = IndexPath(children_path, i);
        const json& child = (*children)[i];
        if (!child.is_object()) {
          Add(child_path, "wrong-type",
              "Make every entry of hsg_root.children a JSON object.");
          continue;
        }
        hsg.children.push_back(ParseNode(child, child_path, false));
        node_paths_.push_back(child_path);
      }
    }

    const std::vector<std::string> structural = CollectPaths(first_violation);
    const core::ValidationReport report = core::ValidateHsg(hsg, image_size_);
    for (const core::Violation& v : report.violations) {
      const std::string path = SemanticPath(v, hsg, root_path);
      if (Covered(path, v.rule, structural)) continue;
      Add(path, v.rule, "Fix " + path + ": " + v.message + ".");
    }
    if (sink_.size() != first_violation) return std::nullopt;
    return hsg;
  }

 private:
  void Add(std::string path, std::string rule, std::string hint) {
    sink_.push_back({std::move(path), std::move(rule), std::move(hint)});
  }

  std::vector<std::string> CollectPaths(std::size_t from) const {
    std::vector<std::string> paths;
    for (std::size_t i = from; i < sink_.size(); ++i) {
      paths.push_back(sink_[i].json_path);
    }
    return paths;
  }

  static bool Covered(const std::string& path, const std::string& rule,
                      const std::vector<std::string>& structural) {
    for (const std::string& s : structural) {
      if (IsUnder(path, s)) return true;
      // Unknown ground names already explain an empty ground set.
      if (rule == "empty-grounds" && IsUnder(s, path)) return true;
    }
    return false;
  }

  std::string SemanticPath(const core::Violation& v, const Hsg& hsg,
                           const std::string& root_path) const {
    std::string base = root_path;
    if (!v.node_id.empty() || v.field != "children") {
      const auto nodes = hsg.nodes();
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i]->node_id == v.node_id) {
          base = node_paths_[i];
          break;
        }
      }
    }
    std::string field = v.field;
    if (field == "semiosis.grounds") {
      field = "semiosis." + std::string(GroundsKey(side_));
    }
    return field.empty() ? base : JoinPath(base, field);
  }

  std::string ReadString(const json& object, std::string_view key,
                         const std::string& path, bool required) {
    const std::string field_path = JoinPath(path, key);
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) {
      if (required) {
        Add(field_path, "missing-key",
            "Add the required string field " + std::string(key) + " at " +
                path + ".");
      }
      return {};
    }
    if (!it->is_string()) {
      Add(field_path, "wrong-type",
          "Make " + field_path + " a string instead of " + TypeName(*it) +
              ".");
      return {};
    }
    return it->get<std::string>();
  }

  HsgNode ParseNode(const json& object, const std::string& path,
                    bool is_root) {
    HsgNode node;
    node.node_id = ReadString(object, "node_id", path, /*required=*/true);

    const std::string semiosis_path = JoinPath(path, "semiosis");
    auto semiosis = object.find("semiosis");
    if (semiosis == object.end()) {
      Add(semiosis_path, "missing-key",
          "Add a semiosis object with sign_description, inferred_object, "
          "interpretant and " +
              std::string(GroundsKey(side_)) + " at " + path + ".");
    } else if (!semiosis->is_object()) {
      Add(semiosis_path, "wrong-type",
          "Make " + semiosis_path + " a JSON object.");
    } else {
      node.semiosis.sign_description =
          ReadString(*semiosis, "sign_description", semiosis_path, true);
      node.semiosis.inferred_object =
          ReadString(*semiosis, "inferred_object", semiosis_path, true);
      node.semiosis.interpretant =
          ReadString(*semiosis, "interpretant", semiosis_path, true);
      ParseGrounds(*semiosis, semiosis_path, node.semiosis);
    }

    if (is_root) {
      auto rel = object.find("relation_to_root");
      if (rel != object.end() && rel->is_string()) {
        node.relation_to_root = rel->get<std::string>();
      }
    } else {
      node.relation_to_root =
          ReadString(object, "relation_to_root", path, /*required=*/true);
      auto nested = object.find("children");
      if (nested != object.end() && !nested->is_null() &&
          !(nested->is_array() && nested->empty())) {
        Add(JoinPath(path, "children"), "nesting-depth",
            "Keep sub-sign nodes flat by removing the nested children list "
            "at " +
                path + ".");
      }
    }

    auto boxes = object.find("bounding_box");
    if (boxes != object.end() && !boxes->is_null()) {
      const std::string box_path = JoinPath(path, "bounding_box");
      if (side_ == HsgSide::kPrompt) {
        if (!(boxes->is_array() && boxes->empty())) {
          Add(box_path, "prompt-side-box",
              "Remove bounding_box from " + path +
                  " because prompt-side nodes carry no boxes.");
        }
      } else {
        ParseBoxes(*boxes, box_path, node);
      }
    }
    return node;
  }

  void ParseGrounds(const json& semiosis, const std::string& semiosis_path,
                    core::Semiosis& out) {
    const std::string_view preferred = GroundsKey(side_);
    const std::string_view alias = side_ == HsgSide::kPrompt
                                       ? kArtifactGroundsKey
                                       : kPromptGroundsKey;
    auto it = semiosis.find(preferred);
    auto alt = semiosis.find(alias);
    const std::string preferred_path = JoinPath(semiosis_path, preferred);
    if (it != semiosis.end() && alt != semiosis.end()) {
      Add(JoinPath(semiosis_path, alias), "conflicting-keys",
          "Use only " + std::string(preferred) + " (not both " +
              std::string(preferred) + " and " + std::string(alias) +
              ") at " + semiosis_path + ".");
    }
    std::string path = preferred_path;
    if (it == semiosis.end() && alt != semiosis.end()) {
      it = alt;
      path = JoinPath(semiosis_path, alias);
    }
    if (it == semiosis.end()) {
      Add(preferred_path, "missing-key",
          "Add " + std::string(preferred) +
              " listing iconic, indexical or symbolic at " + semiosis_path +
              ".");
      return;
    }
    if (!it->is_array()) {
      Add(path, "wrong-type",
          "Make " + path + " an array of ground names.");
      return;
    }
    for (std::size_t j = 0; j < it->size(); ++j) {
      const json& g = (*it)[j];
      std::optional<GroundKind> kind;
      if (g.is_string()) kind = core::GroundKindFromString(g.get<std::string>());
      if (!kind) {
        Add(IndexPath(path, j), "unknown-ground",
            "Use only \"iconic\", \"indexical\" or \"symbolic\" in " + path +
                ".");
        continue;
      }
      out.grounds.insert(*kind);
    }
  }

  void ParseBoxes(const json& value, const std::string& box_path,
                  HsgNode& node) {
    if (!value.is_array()) {
      Add(box_path, "wrong-type",
          "Make " + box_path +
              " a list of [x_min, y_min, x_max, y_max] arrays.");
      return;
    }
    if (value.empty()) return;
    if (value.front().is_number()) {
      ParseBox(value, box_path, node);
      return;
    }
    for (std::size_t k = 0; k < value.size(); ++k) {
      ParseBox(value[k], IndexPath(box_path, k), node);
    }
  }

  void ParseBox(const json& value, const std::string& path, HsgNode& node) {
    if (!value.is_array() || value.size() != 4) {
      Add(path, "box-shape",
          "Write each box at " + path + " as [x_min, y_min, x_max, y_max].");
      return;
    }
    double raw[4];
    bool integral = true;
    for (std::size_t c = 0; c < 4; ++c) {
      if (!value[c].is_number()) {
        Add(path, "box-shape",
            "Use numeric pixel coordinates in " + path + ".");
        return;
      }
      raw[c] = value[c].get<double>();
      if (!std::isfinite(raw[c]) || std::floor(raw[c]) != raw[c]) {
        integral = false;
      }
    }
    BoundingBox box;
    if (integral) {
      box = {static_cast<std::int64_t>(raw[0]), static_cast<std::int64_t>(raw[1]),
             static_cast<std::int64_t>(raw[2]), static_cast<std::int64_t>(raw[3])};
    } else {
      bool normalized = true;
      for (double v : raw) normalized = normalized && v >= 0.0 && v <= 1.0;
      if (!normalized || !image_size_) {
        Add(path, "non-integer-coordinate",
            "Give integer pixel coordinates for the box at " + path + ".");
        return;
      }
      box = core::FromNormalized(raw[0], raw[1], raw[2], raw[3], *image_size_);
    }
    if (image_size_ && box.x_min < box.x_max && box.y_min < box.y_max) {
      const BoundingBox clamped = core::ClampToImage(box, *image_size_);
      if (clamped.x_min < clamped.x_max && clamped.y_min < clamped.y_max) {
        box = clamped;
      }
    }
    node.bounding_boxes.push_back(box);
  }

  HsgSide side_;
  core::Complexity complexity_;
  std::optional<core::ImageSize> image_size_;
  std::string prefix_;
  std::vector<SchemaViolation>& sink_;
  std::vector<std::string> node_paths_;
};

ParseResult<Hsg> ParseSingle(std::string_view text, HsgSide side,
                             const HsgParseOptions& options) {
  ParseResult<Hsg> result;
  std::optional<json> doc = ExtractFirstJsonObject(text);
  if (!doc) {
    result.violations.push_back(
        {"$", "invalid-json",
         "Return a valid JSON object only, with no text outside it."});
    return result;
  }
  HsgWalker walker(side, options.complexity, options.image_size, "",
                   result.violations);
  result.value = walker.Parse(*doc);
  return result;
}

json NodeToJson(const HsgNode& node, HsgSide side, bool is_root) {
  json grounds = json::array();
  for (GroundKind kind : node.semiosis.grounds) {
    grounds.push_back(std::string(core::GroundKindName(kind)));
  }
  json semiosis = json::object();
  semiosis["sign_description"] = node.semiosis.sign_description;
  semiosis["inferred_object"] = node.semiosis.inferred_object;
  semiosis["interpretant"] = node.semiosis.interpretant;
  semiosis[std::string(GroundsKey(side))] = std::move(grounds);

  json out = json::object();
  out["node_id"] = node.node_id;
  out["semiosis"] = std::move(semiosis);
  if (!is_root || !node.relation_to_root.empty()) {
    out["relation_to_root"] = node.relation_to_root;
  }
  if (!node.bounding_boxes.empty()) {
    json boxes = json::array();
    for (const BoundingBox& b : node.bounding_boxes) {
      boxes.push_back(json::array({b.x_min, b.y_min, b.x_max, b.y_max}));
    }
    out["bounding_box"] = std::move(boxes);
  }
  return out;
}

}  // namespace

ParseResult<Hsg> ParsePromptHsg(std::string_view text,
                                const HsgParseOptions& options) {
  return ParseSingle(text, HsgSide::kPrompt, options);
}

ParseResult<Hsg> ParseArtifactHsg(std::string_view text,
                                  const HsgParseOptions& options) {
  return ParseSingle(text, HsgSide::kArtifact, options);
}

ParseResult<HsgPair> ParseArtifactHsgPair(std::string_view text,
                                          const PairParseOptions& options) {
  ParseResult<HsgPair> result;
  std::vector<json> docs;
  for (json& value : ExtractJsonValues(text)) {
    if (value.is_object()) {
      docs.push_back(std::move(value));
    } else if (value.is_array() && !value.empty()) {
      bool all_objects = true;
      for (const json& e : value) all_objects = all_objects && e.is_object();
      if (!all_objects) continue;
      for (json& e : value) docs.push_back(std::move(e));
    }
  }
  if (docs.size() != 2) {
    result.violations.push_back(
        {"$", "document-count",
         "Expected 2 HSG documents, found " + std::to_string(docs.size()) +
             "; return one JSON object for image A and one for image B."});
    return result;
  }
  HsgWalker walker_a(HsgSide::kArtifact, options.complexity, options.image_a,
                     "[0]", result.violations);
  std::optional<Hsg> a = walker_a.Parse(docs[0]);
  HsgWalker walker_b(HsgSide::kArtifact, options.complexity, options.image_b,
                     "[1]", result.violations);
  std::optional<Hsg> b = walker_b.Parse(docs[1]);
  if (a && b) result.value = HsgPair{std::move(*a), std::move(*b)};
  return result;
}

ParseResult<VerdictDoc> ParseVerdict(std::string_view text,
                                     const VerdictParseOptions& options) {
  ParseResult<VerdictDoc> result;
  auto& sink = result.violations;
  std::optional<json> doc = ExtractFirstJsonObject(text);
  if (!doc) {
    sink.push_back({"$", "no-json",
                    "Return a valid JSON object only with fields discussion "
                    "and winner."});
    return result;
  }
  VerdictDoc verdict;
  auto discussion = doc->find("discussion");
  if (discussion == doc->end()) {
    sink.push_back({"discussion", "missing-key",
                    "Add the discussion field describing the decision "
                    "process."});
  } else if (!discussion->is_string()) {
    sink.push_back({"discussion", "wrong-type",
                    "Make discussion a string."});
  } else {
    verdict.discussion = discussion->get<std::string>();
    if (core::Trim(verdict.discussion).empty()) {
      sink.push_back({"discussion", "empty-field",
                      "Write a non-empty discussion."});
    }
  }

  auto winner = doc->find("winner");
  if (winner == doc->end()) {
    sink.push_back({"winner", "missing-key",
                    "Add the winner field set to \"A\" or \"B\"."});
  } else if (!winner->is_string()) {
    sink.push_back({"winner", "wrong-type",
                    "Make winner the string \"A\" or \"B\"."});
  } else {
    std::string w = winner->get<std::string>();
    if (options.lenient_winner) {
      w = std::string(core::Trim(w));
      if (w == "a") w = "A";
      if (w == "b") w = "B";
    }
    if (w == "A") {
      verdict.winner = core::Choice2::kA;
    } else if (w == "B") {
      verdict.winner = core::Choice2::kB;
    } else {
      sink.push_back({"winner", "winner-value",
                      "winner must be exactly A or B, written as the string "
                      "\"A\" or \"B\"."});
    }
  }

  auto evidence = doc->find("evidence");
  if (evidence != doc->end() && !evidence->is_null()) {
    if (!evidence->is_array()) {
      sink.push_back({"evidence", "wrong-type",
                      "Make evidence an array of node citations."});
    } else {
      for (std::size_t i = 0; i < evidence->size(); ++i) {
        const json& e = (*evidence)[i];
        const std::string path = IndexPath("evidence", i);
        const bool well_formed =
            e.is_object() && e.contains("cascade") && e["cascade"].is_string() &&
            (e["cascade"] == "A" || e["cascade"] == "B") &&
            e.contains("node_id") && e["node_id"].is_string() &&
            e.contains("rationale") && e["rationale"].is_string() &&
            !core::Trim(e["rationale"].get<std::string>()).empty();
        if (!well_formed) {
          sink.push_back({path, "evidence-shape",
                          "Write each evidence entry as {\"cascade\": \"A\" or "
                          "\"B\", \"node_id\": ..., \"rationale\": ...}."});
          continue;
        }
        verdict.evidence.push_back(
            {{e["cascade"] == "A" ? core::CascadeTag::kA : core::CascadeTag::kB,
              e["node_id"].get<std::string>()},
             e["rationale"].get<std::string>()});
      }
    }
  }

  if (sink.empty()) result.value = std::move(verdict);
  return result;
}

std::string_view VqaChoiceName(VqaChoice choice) {
  switch (choice) {
    case VqaChoice::kA: return "A";
    case VqaChoice::kB: return "B";
    case VqaChoice::kC: return "C";
    case VqaChoice::kD: return "D";
  }
  return "A";
}

std::optional<VqaChoice> VqaChoiceFromString(std::string_view letter) {
  letter = core::Trim(letter);
  if (letter == "A") return VqaChoice::kA;
  if (letter == "B") return VqaChoice::kB;
  if (letter == "C") return VqaChoice::kC;
  if (letter == "D") return VqaChoice::kD;
  return std::nullopt;
}

ParseResult<VqaChoice> ParseVqaAnswer(std::string_view text) {
  ParseResult<VqaChoice> result;
  if (std::optional<json> doc = ExtractFirstJsonObject(text)) {
    auto answer = doc->find("answer");
    if (answer == doc->end()) {
      result.violations.push_back(
          {"answer", "missing-key",
           "Add the answer field set to one of \"A\", \"B\", \"C\" or \"D\"."});
    } else if (!answer->is_string() ||
               !VqaChoiceFromString(answer->get<std::string>())) {
      result.violations.push_back(
          {"answer", "answer-value",
           "answer must be exactly one of \"A\", \"B\", \"C\" or \"D\"."});
    } else {
      result.value = VqaChoiceFromString(answer->get<std::string>());
    }
    return result;
  }
  std::string_view bare = core::Trim(text);
  if (bare.size() == 2 && (bare[1] == '.' || bare[1] == ')')) {
    bare.remove_suffix(1);
  }
  if (auto choice = VqaChoiceFromString(bare)) {
    result.value = choice;
    return result;
  }
  result.violations.push_back(
      {"$", "no-answer",
       "Return a valid JSON object only with field answer set to \"A\", "
       "\"B\", \"C\" or \"D\"."});
  return result;
}

json HsgToJson(const Hsg& hsg) {
  json root = NodeToJson(hsg.root, hsg.side, /*is_root=*/true);
  json children = json::array();
  for (const HsgNode& child : hsg.children) {
    children.push_back(NodeToJson(child, hsg.side, /*is_root=*/false));
  }
  root["children"] = std::move(children);
  json doc = json::object();
  doc["hsg_root"] = std::move(root);
  return doc;
}

std::string CanonicalSerialize(const Hsg& hsg) {
  return HsgToJson(hsg).dump(-1, ' ', /*ensure_ascii=*/false,
                             json::error_handler_t::replace);
}

std::string FormatHints(const std::vector<SchemaViolation>& violations) {
  std::string out;
  for (const SchemaViolation& v : violations) {
    out += "- " + v.json_path + ": " + v.hint + "\n";
  }
  return out;
}

}  // namespace semjudge::codec
