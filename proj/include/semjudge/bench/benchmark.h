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

// On-disk benchmark layout:
//
//   root/initiatives.jsonl  {initiative_id, prompt_text, prompt_image?,
//                            tradition?, images: [{image_id, model_id, file}]}
//   root/tasks_2afc.jsonl   {task_id, initiative_id, image_a, image_b,
//                            human_votes: [{annotator_id, choice}],
//                            expert_majority?}
//   root/vqa.jsonl          {question_id, initiative_id, image_ids, stem,
//                            choices: {A, B, C, D}, answer, bboxes?}
//   root/profiles.jsonl     {initiative_id, image_id?, icn, idx, sym}
//   root/images/            image files; `file` paths are relative to it
//
// Only initiatives.jsonl is required. Without tasks_2afc.jsonl every image
// pair of every initiative becomes a vote-less task.

#ifndef SEMJUDGE_BENCH_BENCHMARK_H_
#define SEMJUDGE_BENCH_BENCHMARK_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "semjudge/codec/hsg_codec.h"
#include "semjudge/core/semiotic.h"
#include "semjudge/error.h"

namespace semjudge::bench {

struct ImageRef {
  std::string image_id;
  std::string model_id;
  std::filesystem::path file;  // absolute after loading
};

struct Initiative {
  std::string initiative_id;
  std::string prompt_text;
  std::optional<std::filesystem::path> prompt_image;
  std::string tradition;
  std::vector<ImageRef> images;
  std::optional<core::GroundProfile> prompt_profile;
  std::map<std::string, core::GroundProfile> image_profiles;

  const ImageRef* FindImage(const std::string& image_id) const;
};

struct Vote {
  std::string annotator_id;
  core::Choice2 choice = core::Choice2::kA;  // A = image_a
};

struct Task2afc {
  std::string task_id;
  std::string initiative_id;
  std::string image_a;
  std::string image_b;
  std::vector<Vote> human_votes;
  std::optional<core::Choice2> expert_majority;
  bool reliable = false;  // set by QcFilter
};

struct VqaItem {
  std::string question_id;
  std::string initiative_id;
  std::vector<std::string> image_ids;  // 1, or 2 for pair comparisons
  std::string stem;
  std::array<std::string, 4> choices;
  codec::VqaChoice answer = codec::VqaChoice::kA;
  nlohmann::json bboxes;  // passed through untouched
};

struct Diagnostic {
  std::string file;
  std::size_t line = 0;  // 1-based, 0 when not tied to a line
  std::string field;
  std::string rule;
  std::string message;
};

std::string FormatDiagnostic(const Diagnostic& d);

class BenchmarkLoadError : public Error {
 public:
  explicit BenchmarkLoadError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct Benchmark {
  std::filesystem::path root;
  std::vector<Initiative> initiatives;  // sorted by initiative_id
  std::vector<Task2afc> tasks;          // sorted by task_id
  std::vector<VqaItem> vqa;             // sorted by question_id
  bool has_profiles = false;
  bool tasks_enumerated = false;        // tasks_2afc.jsonl was absent

  const Initiative* FindInitiative(const std::string& id) const;
};

// Throws BenchmarkLoadError carrying every diagnostic found, or
// Error(kConfig) when the root or initiatives.jsonl is unreadable.
Benchmark LoadBenchmark(const std::filesystem::path& root);

// All unordered pairs in input order: k(k-1)/2 entries.
std::vector<std::pair<std::string, std::string>> EnumeratePairs(
    const std::vector<std::string>& image_ids);

// Human reference verdict: expert majority when given, else the vote
// majority; nullopt on a tie or without votes.
std::optional<core::Choice2> HumanReference(const Task2afc& task);

}  // namespace semjudge::bench

#endif  // SEMJUDGE_BENCH_BENCHMARK_H_
