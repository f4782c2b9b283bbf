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

#include "semjudge/judge/judge_output.h"

#include "semjudge/codec/hsg_codec.h"
#include "semjudge/judge/digest.h"

namespace semjudge::judge {

nlohmann::json CascadeToJson(const core::Cascade& cascade) {
  nlohmann::json stages = nlohmann::json::array();
  for (const core::Hsg& hsg : cascade.stages) {
    nlohmann::json stage = codec::HsgToJson(hsg);
    stage["side"] = hsg.side == core::HsgSide::kPrompt ? "prompt" : "artifact";
    stages.push_back(std::move(stage));
  }
  return {{"stages", std::move(stages)}};
}

nlohmann::json JudgeOutputToJson(const core::JudgeOutput& output) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const core::EvidenceItem& item : output.evidence) {
    evidence.push_back(
        {{"cascade", std::string(core::CascadeTagName(item.node_ref.tag))},
         {"node_id", item.node_ref.node_id},
         {"rationale", item.rationale}});
  }
  return {{"cascade_a", CascadeToJson(output.cascade_a)},
          {"cascade_b", CascadeToJson(output.cascade_b)},
          {"evidence", std::move(evidence)},
          {"verdict", std::string(core::Choice2Name(output.verdict))},
          {"discussion", output.discussion}};
}

nlohmann::json TurnToJson(const ChatTurn& turn) {
  nlohmann::json images = nlohmann::json::array();
  for (const ImagePayload& image : turn.images) {
    images.push_back({{"sha256", Sha256Hex(image.bytes)},
                      {"media_type", image.media_type},
                      {"bytes", image.bytes.size()}});
  }
  nlohmann::json out = {{"role", std::string(RoleName(turn.role))},
                        {"images", std::move(images)}};
  out["text"] = turn.text ? nlohmann::json(*turn.text) : nlohmann::json();
  return out;
}

nlohmann::json TranscriptToJson(const StageTranscript& transcript) {
  nlohmann::json turns = nlohmann::json::array();
  for (const ChatTurn& turn : transcript.request_turns) {
    turns.push_back(TurnToJson(turn));
  }
  return {{"stage", std::string(StageName(transcript.stage))},
          {"request_turns", std::move(turns)},
          {"raw_response", transcript.raw_response},
          {"repairs_used", transcript.repairs_used},
          {"attempts", transcript.attempts},
          {"parsed", transcript.parsed}};
}

nlohmann::json TranscriptsToJson(const std::vector<StageTranscript>& list) {
  nlohmann::json out = nlohmann::json::array();
  for (const StageTranscript& t : list) out.push_back(TranscriptToJson(t));
  return out;
}

nlohmann::json JudgeResultToJson(const JudgeResult& result) {
  return {{"output", JudgeOutputToJson(result.output)},
          {"transcripts", TranscriptsToJson(result.transcripts)}};
}

}  // namespace semjudge::judge
