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

#ifndef SEMJUDGE_JUDGE_HTTP_BACKEND_H_
#define SEMJUDGE_JUDGE_HTTP_BACKEND_H_

#include <atomic>
#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "semjudge/judge/chat.h"

namespace semjudge::judge {

// Wire body for POST {endpoint}/chat. Images travel inline as base64.
nlohmann::json BuildChatBody(const ChatRequest& request);

// Pulls the assistant text out of a response body. Accepts {"content": ..},
// {"message": {"content": ..}} and {"choices": [{"message": {"content": ..}}]}.
// Throws Error(kTransport) when none is present.
std::string ExtractResponseText(const nlohmann::json& body);

// POSTs `body` to {spec.endpoint}{path} with the bearer token read from
// spec.auth_env, retrying timeouts and 5xx responses. Returns the parsed
// response body. Throws Error(kTransport).
nlohmann::json PostJson(const BackendSpec& spec, const std::string& path,
                        const nlohmann::json& body);

class HttpBackend : public Backend {
 public:
  explicit HttpBackend(BackendSpec spec);

  std::string Complete(const ChatRequest& request) override;
  std::string Id() const override { return "http:" + spec_.model_id; }

  // Process-wide number of HTTP requests attempted, for isolation checks.
  static std::size_t RequestCount();

 private:
  BackendSpec spec_;
};

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_HTTP_BACKEND_H_
