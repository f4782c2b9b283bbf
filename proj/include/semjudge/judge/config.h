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

#ifndef SEMJUDGE_JUDGE_CONFIG_H_
#define SEMJUDGE_JUDGE_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>

#include "semjudge/core/semiotic.h"

namespace semjudge::judge {

inline constexpr std::size_t kMaxRepairsLimit = 5;

struct JudgeConfig {
  core::Complexity complexity = core::Complexity::kStandard;
  std::size_t max_repairs = 2;
  double temperature = 0.0;
  std::optional<std::int64_t> seed = 0;
  std::optional<std::filesystem::path> cache_dir;
  // Stage 3 receives both images alongside the serialized HSGs.
  bool judge_sees_images = true;
  // VQA: build an artifact HSG before asking for the answer.
  bool hsg_assisted_vqa = false;
  // Accept "a"/"b" as verdict winners.
  bool lenient_winner = false;
};

// Throws Error(kConfig) when a field is out of range.
void ValidateJudgeConfig(const JudgeConfig& config);

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_CONFIG_H_
