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

#include "semjudge/codec/json_extract.h"

#include <string>

namespace semjudge::codec {
namespace {

// Index one past the bracket that closes text[start], or npos.
std::size_t MatchBalanced(std::string_view text, std::size_t start) {
  std::vector<char> stack;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_string = true;
        break;
      case '{':
      case '[':
        stack.push_back(c == '{' ? '}' : ']');
        break;
      case '}':
      case ']':
        if (stack.empty() || stack.back() != c) return std::string_view::npos;
        stack.pop_back();
        if (stack.empty()) return i + 1;
        break;
      default:
        break;
    }
  }
  return std::string_view::npos;
}

}  // namespace

std::vector<nlohmann::json> ExtractJsonValues(std::string_view text) {
  std::vector<nlohmann::json> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{' && text[i] != '[') {
      ++i;
      continue;
    }
    const std::size_t end = MatchBalanced(text, i);
    if (end == std::string_view::npos) {
      ++i;
      continue;
    }
    nlohmann::json value = nlohmann::json::parse(
        text.substr(i, end - i), /*cb=*/nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) {
      ++i;
      continue;
    }
    values.push_back(std::move(value));
    i = end;
  }
  return values;
}

std::optional<nlohmann::json> ExtractFirstJsonObject(std::string_view text) {
  for (nlohmann::json& value : ExtractJsonValues(text)) {
    if (value.is_object()) return std::move(value);
  }
  return std::nullopt;
}

}  // namespace semjudge::codec
