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

#ifndef SEMJUDGE_CODEC_JSON_EXTRACT_H_
#define SEMJUDGE_CODEC_JSON_EXTRACT_H_

#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace semjudge::codec {

// Scans free text (prose, markdown fences) for balanced top-level JSON
// values and returns those that parse, in order of appearance. Text outside
// the values is discarded.
std::vector<nlohmann::json> ExtractJsonValues(std::string_view text);

// First balanced value that parses as a JSON object.
std::optional<nlohmann::json> ExtractFirstJsonObject(std::string_view text);

}  // namespace semjudge::codec

#endif  // SEMJUDGE_CODEC_JSON_EXTRACT_H_
