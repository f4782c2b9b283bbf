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

#ifndef SEMJUDGE_JUDGE_CHAT_H_
#define SEMJUDGE_JUDGE_CHAT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semjudge::judge {

enum class Role { kSystem, kUser, kAssistant };
std::string_view RoleName(Role role);

struct ImagePayload {
  std::string bytes;       // raw encoded image file
  std::string media_type;  // e.g. "image/png"

  friend bool operator==(const ImagePayload&, const ImagePayload&) = default;
};

// Reads an image file and sniffs its media type. Throws Error(kConfig) when
// the path is unreadable.
ImagePayload LoadImage(const std::filesystem::path& path);

struct ChatTurn {
  Role role = Role::kUser;
  std::optional<std::string> text;
  std::vector<ImagePayload> images;

  friend bool operator==(const ChatTurn&, const ChatTurn&) = default;
};

// Throws Error(kInvalidArgument) when a turn has neither text nor images.
void CheckTurns(const std::vector<ChatTurn>& turns);

struct ChatRequest {
  std::string model;
  std::vector<ChatTurn> turns;
  double temperature = 0.0;
  std::optional<std::int64_t> seed;
};

// A chat-completion service. Implementations must be safe to call from
// several threads at once.
class Backend {
 public:
  virtual ~Backend() = default;
  // Returns the assistant text. Throws Error(kTransport) on failure.
  virtual std::string Complete(const ChatRequest& request) = 0;
  virtual std::string Id() const = 0;
};

struct BackendSpec {
  std::string endpoint;  // e.g. "https://host:8443/v1"
  std::string model_id;
  std::string auth_env = "SEMJUDGE_API_KEY";  // variable holding the token
  std::chrono::milliseconds timeout{120000};
  std::size_t max_parallel = 1;
  std::size_t max_retries = 2;  // extra attempts on timeouts and 5xx
};

// Throws Error(kConfig) on a malformed endpoint or zero max_parallel.
void ValidateBackendSpec(const BackendSpec& spec);

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_CHAT_H_
