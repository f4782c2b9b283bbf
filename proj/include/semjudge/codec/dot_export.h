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

#ifndef SEMJUDGE_CODEC_DOT_EXPORT_H_
#define SEMJUDGE_CODEC_DOT_EXPORT_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "semjudge/core/semiotic.h"

namespace semjudge::codec {

struct DotOptions {
  std::string graph_name = "hsg";
  // Per-field character budget (code points) before truncation with "...".
  std::size_t label_budget = 48;
};

// One node per HsgNode (sign / object / interpretant, plus "[x,y,x,y]" per
// bounding box) and one labeled edge root -> child.
std::string ExportDot(const core::Hsg& hsg, const DotOptions& options = {});

// Truncates UTF-8 text to at most `budget` code points, appending "..." when
// anything was cut.
std::string TruncateUtf8(std::string_view text, std::size_t budget);

}  // namespace semjudge::codec

#endif  // SEMJUDGE_CODEC_DOT_EXPORT_H_
