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

#include "semjudge/judge/chat.h"

#include <fstream>
#include <iterator>
#include <regex>

#include "semjudge/error.h"
#include "semjudge/judge/digest.h"

namespace semjudge::judge {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kSystem: return "system";
    case Role::kUser: return "user";
    case Role::kAssistant: return "assistant";
  }
  return "user";
}

ImagePayload LoadImage(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot read image: " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.empty()) {
    throw Error(ErrorCode::kConfig, "image file is empty: " + path.string());
  }
  ImagePayload image;
  image.media_type = SniffMediaType(bytes);
  image.bytes = std::move(bytes);
  return image;
}

void CheckTurns(const std::vector<ChatTurn>& turns) {
  for (std::size_t i = 0; i < turns.size(); ++i) {
    if (!turns[i].text && turns[i].images.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "chat turn " + std::to_string(i) +
                      " has neither text nor images");
    }
  }
}

void ValidateBackendSpec(const BackendSpec& spec) {
  static const std::regex kUrl(R"(^https?://[^/\s:]+(:\d+)?(/\S*)?$)");
  if (!std::regex_match(spec.endpoint, kUrl)) {
    throw Error(ErrorCode::kConfig,
                "backend endpoint is not an http(s) URL: '" + spec.endpoint +
                    "'");
  }
  if (spec.model_id.empty()) {
    throw Error(ErrorCode::kConfig, "backend model id is empty");
  }
  if (spec.max_parallel == 0) {
    throw Error(ErrorCode::kConfig, "max_parallel must be at least 1");
  }
  if (spec.timeout.count() <= 0) {
    throw Error(ErrorCode::kConfig, "backend timeout must be positive");
  }
}

}  // namespace semjudge::judge
