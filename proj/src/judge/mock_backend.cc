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

#include "semjudge/judge/mock_backend.h"

#include <fstream>
#include <regex>
#include <sstream>

#include "semjudge/error.h"
#include "semjudge/judge/digest.h"
#include "semjudge/judge/prompts.h"
#include "semjudge/judge/response_cache.h"

namespace semjudge::judge {
namespace {

constexpr std::string_view kActions[] = {
    "respond", "respond_json", "responses", "artifact_hsgs_by_image",
    "prefer_images", "answer_by_choice_text"};

bool Contains(const std::string& text, std::string_view needle) {
  return text.find(needle) != std::string::npos;
}

struct StageView {
  std::string stage;      // prompt_hsg, artifact_hsg, judgment, vqa, unknown
  bool repair = false;
  const ChatTurn* turn = nullptr;  // the stage turn (not the repair turn)
  std::string last_user_text;
};

std::string Classify(const std::string& text) {
  if (Contains(text, kJudgmentMarker)) return "judgment";
  if (Contains(text, kArtifactPairMarker) ||
      Contains(text, kArtifactSingleMarker)) {
    return "artifact_hsg";
  }
  if (Contains(text, kVqaMarker)) return "vqa";
  if (Contains(text, kPromptHsgMarker)) return "prompt_hsg";
  return "unknown";
}

StageView ViewOf(const ChatRequest& request) {
  StageView view;
  view.stage = "unknown";
  bool seen_last = false;
  for (auto it = request.turns.rbegin(); it != request.turns.rend(); ++it) {
    if (it->role != Role::kUser) continue;
    const std::string text = it->text.value_or("");
    if (!seen_last) {
      view.last_user_text = text;
      seen_last = true;
    }
    if (Contains(text, kRepairMarker)) {
      view.repair = true;
      continue;
    }
    view.stage = Classify(text);
    view.turn = &*it;
    break;
  }
  return view;
}

void CheckScript(const nlohmann::json& script) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kConfig, "mock script: " + what);
  };
  if (!script.is_object()) fail("top level must be an object");
  if (script.contains("fallback") && !script["fallback"].is_string()) {
    fail("fallback must be a string");
  }
  if (!script.contains("rules")) return;
  if (!script["rules"].is_array()) fail("rules must be an array");
  for (std::size_t i = 0; i < script["rules"].size(); ++i) {
    const auto& rule = script["rules"][i];
    const std::string where = "rules[" + std::to_string(i) + "]";
    if (!rule.is_object()) fail(where + " must be an object");
    if (rule.contains("when") && !rule["when"].is_object()) {
      fail(where + ".when must be an object");
    }
    int actions = 0;
    for (std::string_view a : kActions) actions += rule.contains(a) ? 1 : 0;
    if (actions != 1) fail(where + " needs exactly one action");
    if (rule.contains("respond") && !rule["respond"].is_string()) {
      fail(where + ".respond must be a string");
    }
    if (rule.contains("responses") &&
        (!rule["responses"].is_array() || rule["responses"].empty())) {
      fail(where + ".responses must be a non-empty array");
    }
  }
}

}  // namespace

MockBackend::MockBackend(nlohmann::json script) : script_(std::move(script)) {
  CheckScript(script_);
  rule_uses_.assign(script_.contains("rules") ? script_["rules"].size() : 0, 0);
}

MockBackend MockBackend::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot read mock script " + path.string());
  }
  nlohmann::json script = nlohmann::json::parse(in, nullptr, false);
  if (script.is_discarded()) {
    throw Error(ErrorCode::kConfig,
                "mock script is not valid JSON: " + path.string());
  }
  return MockBackend(std::move(script));
}

MockBackend::MockBackend(MockBackend&& other) noexcept
    : script_(std::move(other.script_)),
      calls_(other.calls_),
      rule_uses_(std::move(other.rule_uses_)),
      requests_(std::move(other.requests_)) {}

std::size_t MockBackend::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_;
}

std::vector<ChatRequest> MockBackend::requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return requests_;
}

std::string MockBackend::Complete(const ChatRequest& request) {
  CheckTurns(request.turns);
  std::lock_guard<std::mutex> lock(mu_);
  const std::size_t ordinal = calls_++;
  requests_.push_back(request);
  const StageView view = ViewOf(request);

  if (script_.contains("rules")) {
    const auto& rules = script_["rules"];
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const nlohmann::json when =
          rules[i].value("when", nlohmann::json::object());
      if (when.contains("ordinal") &&
          when["ordinal"].get<std::size_t>() != ordinal) {
        continue;
      }
      if (when.contains("digest") &&
          when["digest"].get<std::string>() != RequestDigest(request)) {
        continue;
      }
      if (when.contains("contains") &&
          !Contains(view.last_user_text, when["contains"].get<std::string>())) {
        continue;
      }
      if (when.contains("stage") &&
          when["stage"].get<std::string>() != view.stage) {
        continue;
      }
      if (when.contains("repair") && when["repair"].get<bool>() != view.repair) {
        continue;
      }
      return Respond(i, request);
    }
  }
  if (script_.contains("fallback")) return script_["fallback"].get<std::string>();
  throw Error(ErrorCode::kTransport,
              "mock script has no rule for call " + std::to_string(ordinal) +
                  " (stage " + view.stage + ")");
}

std::string MockBackend::Respond(std::size_t rule_index,
                                 const ChatRequest& request) {
  const nlohmann::json& rule = script_["rules"][rule_index];
  const std::size_t use = rule_uses_[rule_index]++;
  const StageView view = ViewOf(request);

  if (rule.contains("respond")) return rule["respond"].get<std::string>();
  if (rule.contains("respond_json")) return rule["respond_json"].dump();
  if (rule.contains("responses")) {
    const auto& list = rule["responses"];
    const std::size_t k = rule.value("cycle", false)
                              ? use % list.size()
                              : std::min(use, list.size() - 1);
    return list[k].is_string() ? list[k].get<std::string>() : list[k].dump();
  }
  if (rule.contains("artifact_hsgs_by_image")) {
    const auto& table = rule["artifact_hsgs_by_image"];
    if (view.turn == nullptr || view.turn->images.empty()) {
      throw Error(ErrorCode::kTransport, "mock: artifact request without images");
    }
    std::string out;
    for (const ImagePayload& image : view.turn->images) {
      const std::string sha = Sha256Hex(image.bytes);
      const nlohmann::json* hsg = nullptr;
      if (table.contains(sha)) {
        hsg = &table[sha];
      } else if (table.contains("default")) {
        hsg = &table["default"];
      } else {
        throw Error(ErrorCode::kTransport, "mock: no HSG for image " + sha);
      }
      if (!out.empty()) out += "\n";
      out += hsg->dump();
    }
    return out;
  }
  if (rule.contains("prefer_images")) {
    const auto& scores = rule["prefer_images"];
    const ChatTurn* pair_turn = nullptr;
    for (auto it = request.turns.rbegin(); it != request.turns.rend(); ++it) {
      if (it->role == Role::kUser && it->images.size() >= 2) {
        pair_turn = &*it;
        break;
      }
    }
    if (pair_turn == nullptr) {
      throw Error(ErrorCode::kTransport, "mock: no image pair in context");
    }
    auto score_of = [&](const ImagePayload& image) {
      const std::string sha = Sha256Hex(image.bytes);
      return scores.contains(sha) ? scores[sha].get<double>() : 0.0;
    };
    const std::string winner =
        score_of(pair_turn->images[0]) >= score_of(pair_turn->images[1]) ? "A"
                                                                          : "B";
    std::string discussion = rule.value(
        "discussion", std::string("Image {winner} better realizes the intended object."));
    for (std::size_t pos; (pos = discussion.find("{winner}")) != std::string::npos;) {
      discussion.replace(pos, 8, winner);
    }
    return nlohmann::json{{"discussion", discussion}, {"winner", winner}}.dump();
  }
  if (rule.contains("answer_by_choice_text")) {
    std::string letter = "A";
    if (view.turn != nullptr && view.turn->text) {
      static const std::regex kChoice(R"(^([ABCD])\. (.*)$)");
      std::istringstream lines(*view.turn->text);
      std::string line;
      bool found = false;
      while (!found && std::getline(lines, line)) {
        std::smatch m;
        if (!std::regex_match(line, m, kChoice)) continue;
        for (const auto& accepted : rule["answer_by_choice_text"]) {
          if (accepted.get<std::string>() == m[2].str()) {
            letter = m[1].str();
            found = true;
            break;
          }
        }
      }
    }
    return nlohmann::json{{"answer", letter}}.dump();
  }
  throw Error(ErrorCode::kConfig, "mock: rule without action");
}

}  // namespace semjudge::judge
