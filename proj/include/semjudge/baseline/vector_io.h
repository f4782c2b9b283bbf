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

#ifndef SEMJUDGE_BASELINE_VECTOR_IO_H_
#define SEMJUDGE_BASELINE_VECTOR_IO_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include "semjudge/baseline/scorers.h"
#include "semjudge/judge/chat.h"

namespace semjudge::baseline {

// JSONL records {"id": .., "space_id": .., "values": [..]}. Throws
// Error(kSchema) naming the first bad line, Error(kConfig) when unreadable.
std::map<std::string, GroundVector> LoadGroundVectors(
    const std::filesystem::path& path);

// Produces the ground vector E(s) for a sign identified by `id`.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  // `text` is set for prompts, `image` for artifacts.
  virtual GroundVector Embed(const std::string& id, const std::string* text,
                             const judge::ImagePayload* image) = 0;
};

// Looks vectors up by id in a preloaded table.
class FileEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit FileEmbeddingProvider(std::map<std::string, GroundVector> table)
      : table_(std::move(table)) {}

  GroundVector Embed(const std::string& id, const std::string* text,
                     const judge::ImagePayload* image) override;

 private:
  std::map<std::string, GroundVector> table_;
};

// POST {endpoint}/embed with {"model", "input": {"type": "text"|"image",
// ...}}; expects {"space_id", "values"}. Results are memoized by id.
class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingProvider(judge::BackendSpec spec);

  GroundVector Embed(const std::string& id, const std::string* text,
                     const judge::ImagePayload* image) override;

 private:
  judge::BackendSpec spec_;
  std::mutex mu_;
  std::map<std::string, GroundVector> memo_;
};

}  // namespace semjudge::baseline

#endif  // SEMJUDGE_BASELINE_VECTOR_IO_H_
