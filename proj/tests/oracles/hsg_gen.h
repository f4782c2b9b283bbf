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

// Hand-rolled generators for codec property tests: random valid HSGs and
// fault injection into their JSON form.

#ifndef SEMJUDGE_TESTS_ORACLES_HSG_GEN_H_
#define SEMJUDGE_TESTS_ORACLES_HSG_GEN_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/core/semiotic.h"
#include "semjudge/stats/rng.h"

namespace semjudge::gen {

// Fragments mixing ASCII, JSON escapes and multi-byte UTF-8.
inline const std::vector<std::string>& Fragments() {
  static const std::vector<std::string> pieces = {
      "a",  "Z",  "7",  "-",  "_",  " ",  "\"", "\\", "/",  "\n", "\t",
      "é",  "ß",  "漢", "字", "ॐ",  "🜂", "☉",  "{",  "}",  "[",  ",",
      ":",  "x",  "q",  "0"};
  return pieces;
}

inline std::string RandomText(stats::Rng& rng, std::size_t max_len = 24) {
  const auto& pieces = Fragments();
  const std::size_t len = 1 + rng.UniformIndex(max_len);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    std::string piece = pieces[rng.UniformIndex(pieces.size())];
    // Keep the ends free of whitespace so trimming cannot alter the text.
    const bool edge = i == 0 || i + 1 == len;
    if (edge && (piece == " " || piece == "\n" || piece == "\t")) piece = "k";
    out += piece;
  }
  return out;
}

inline std::set<core::GroundKind> RandomGrounds(stats::Rng& rng) {
  std::set<core::GroundKind> grounds;
  const std::uint64_t mask = 1 + rng.UniformIndex(7);
  if (mask & 1) grounds.insert(core::GroundKind::kIconic);
  if (mask & 2) grounds.insert(core::GroundKind::kIndexical);
  if (mask & 4) grounds.insert(core::GroundKind::kSymbolic);
  return grounds;
}

inline core::BoundingBox RandomBox(stats::Rng& rng) {
  core::BoundingBox box;
  box.x_min = static_cast<std::int64_t>(rng.UniformIndex(1000));
  box.y_min = static_cast<std::int64_t>(rng.UniformIndex(1000));
  box.x_max = box.x_min + 1 + static_cast<std::int64_t>(rng.UniformIndex(1000));
  box.y_max = box.y_min + 1 + static_cast<std::int64_t>(rng.UniformIndex(1000));
  return box;
}

inline core::HsgNode RandomNode(stats::Rng& rng, const std::string& id,
                                bool is_root, core::HsgSide side) {
  core::HsgNode node;
  node.node_id = id;
  node.semiosis.sign_description = RandomText(rng);
  node.semiosis.inferred_object = RandomText(rng);
  node.semiosis.interpretant = RandomText(rng, 60);
  node.semiosis.grounds = RandomGrounds(rng);
  if (!is_root) node.relation_to_root = RandomText(rng, 8);
  if (side == core::HsgSide::kArtifact) {
    const std::size_t boxes = rng.UniformIndex(core::kMaxBoxesPerNode + 1);
    for (std::size_t b = 0; b < boxes; ++b) node.bounding_boxes.push_back(RandomBox(rng));
  }
  return node;
}

inline core::Hsg RandomHsg(stats::Rng& rng) {
  core::Hsg hsg;
  hsg.side = rng.UniformIndex(2) ? core::HsgSide::kArtifact : core::HsgSide::kPrompt;
  hsg.complexity =
      rng.UniformIndex(2) ? core::Complexity::kComplex : core::Complexity::kStandard;
  const std::size_t children = 1 + rng.UniformIndex(core::MaxChildren(hsg.complexity));
  // Ids are unique by construction: a random stem plus the node index.
  const std::string stem = rng.UniformIndex(3) == 0 ? RandomText(rng, 4) : "n";
  hsg.root = RandomNode(rng, stem + "#0", true, hsg.side);
  for (std::size_t c = 1; c <= children; ++c) {
    hsg.children.push_back(RandomNode(rng, stem + "#" + std::to_string(c), false, hsg.side));
  }
  return hsg;
}

// Applies `count` independent defects to distinct nodes of an HSG document
// and returns how many were applied (at most one per node). Each defect
// breaks a separate rule at a separate JSON path.
inline std::size_t InjectFaults(nlohmann::json& doc, core::HsgSide side,
                                std::size_t count, stats::Rng& rng) {
  nlohmann::json& root = doc["hsg_root"];
  std::vector<nlohmann::json*> nodes = {&root};
  for (auto& child : root["children"]) nodes.push_back(&child);
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  stats::Rng shuffle_rng(rng.Next());
  shuffle_rng.Shuffle(std::span<std::size_t>(order));
  const char* grounds_key = side == core::HsgSide::kPrompt ? "expected_grounds" : "grounds";

  std::size_t applied = 0;
  for (std::size_t k = 0; k < std::min(count, nodes.size()); ++k) {
    const bool is_root = order[k] == 0;
    nlohmann::json& node = *nodes[order[k]];
    switch (rng.UniformIndex(7)) {
      case 0:
        node["semiosis"].erase("sign_description");
        break;
      case 1:
        node["semiosis"]["interpretant"] = "";
        break;
      case 2:
        node["semiosis"][grounds_key] = nlohmann::json::array({"mimetic"});
        break;
      case 3:
        node["semiosis"] = "a sign";
        break;
      case 4:
        node["node_id"] = 42;
        break;
      case 5:
        if (is_root) {
          node["relation_to_root"] = "self";
        } else {
          node.erase("relation_to_root");
        }
        break;
      default:
        if (side == core::HsgSide::kArtifact) {
          node["bounding_box"] = nlohmann::json::array({nlohmann::json::array({9, 4, 3, 8})});
        } else {
          node["bounding_box"] = nlohmann::json::array({nlohmann::json::array({0, 0, 5, 5})});
        }
        break;
    }
    ++applied;
  }
  return applied;
}

}  // namespace semjudge::gen

#endif  // SEMJUDGE_TESTS_ORACLES_HSG_GEN_H_
