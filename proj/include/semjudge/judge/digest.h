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

#ifndef SEMJUDGE_JUDGE_DIGEST_H_
#define SEMJUDGE_JUDGE_DIGEST_H_

#include <optional>
#include <string>
#include <string_view>

#include "semjudge/core/semiotic.h"

namespace semjudge::judge {

// Lower-case hex SHA-256.
std::string Sha256Hex(std::string_view bytes);

std::string Base64Encode(std::string_view bytes);

// "image/png", "image/jpeg", "image/gif", "image/webp" or
// "application/octet-stream".
std::string SniffMediaType(std::string_view bytes);

// Pixel dimensions from a PNG IHDR or JPEG SOF header.
std::optional<core::ImageSize> SniffImageSize(std::string_view bytes);

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_DIGEST_H_
