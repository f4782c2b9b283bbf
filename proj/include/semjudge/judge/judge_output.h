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

#ifndef SEMJUDGE_JUDGE_JUDGE_OUTPUT_H_
#define SEMJUDGE_JUDGE_JUDGE_OUTPUT_H_

#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/core/semiotic.h"
#include "semjudge/judge/chat.h"
#include "semjudge/judge/engine.h"

namespace semjudge::judge {

nlohmann::json CascadeToJson(const core::Cascade& cascade);
nlohmann::json JudgeOutputToJson(const core::JudgeOutput& output);

// Images are recorded by digest, media type and byte length, not inline.
nlohmann::json TurnToJson(const ChatTurn& turn);
nlohmann::json TranscriptToJson(const StageTranscript& transcript);
nlohmann::json TranscriptsToJson(const std::vector<StageTranscript>& list);

// {"output": ..., "transcripts": [...]}
nlohmann::json JudgeResultToJson(const JudgeResult& result);

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_JUDGE_OUTPUT_H_
