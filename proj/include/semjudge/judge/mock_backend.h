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

// Scripted backend for tests and offline runs. The script is a JSON object
//
//   {"rules": [{"when": {...}, <action>}, ...], "fallback": "text"}
//
// Rules are tried in order and the first whose conditions all hold answers.
// Conditions: "ordinal" (0-based call number), "digest" (request digest),
// "contains" (substring of the last user turn), "stage" (prompt_hsg,
// artifact_hsg, judgment or vqa, detected from the stage text) and "repair"
// (whether the last user turn is a repair request).
//
// Actions:
//   "respond": text              fixed reply
//   "respond_json": value        value serialized as JSON
//   "responses": [text, ...]     successive replies; the last one repeats
//                                unless "cycle": true
//   "artifact_hsgs_by_image": {sha256: hsg, "default": hsg}
//                                one HSG per image of the stage turn
//   "prefer_images": {sha256: score}, optional "discussion"
//                                verdict naming the higher-scored image;
//                                "{winner}" in the discussion is replaced
//   "answer_by_choice_text": [text, ...]
//                                answers with the letter of the first listed
//                                choice whose text appears in the set

#ifndef SEMJUDGE_JUDGE_MOCK_BACKEND_H_
#define SEMJUDGE_JUDGE_MOCK_BACKEND_H_

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/judge/chat.h"

namespace semjudge::judge {

class MockBackend : public Backend {
 public:
  // Throws Error(kConfig) on a malformed script.
  explicit MockBackend(nlohmann::json script);
  static MockBackend FromFile(const std::filesystem::path& path);

  MockBackend(MockBackend&& other) noexcept;

  std::string Complete(const ChatRequest& request) override;
  std::string Id() const override { return "mock"; }

  std::size_t calls() const;
  std::vector<ChatRequest> requests() const;

 private:
  std::string Respond(std::size_t rule_index, const ChatRequest& request);

  nlohmann::json script_;
  mutable std::mutex mu_;
  std::size_t calls_ = 0;
  std::vector<std::size_t> rule_uses_;
  std::vector<ChatRequest> requests_;
};

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_MOCK_BACKEND_H_
