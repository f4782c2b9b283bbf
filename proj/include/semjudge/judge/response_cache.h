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

// Content-addressed response cache. Each entry is {cache_dir}/{digest}.json
// where the digest covers everything that can change a model's answer.

#ifndef SEMJUDGE_JUDGE_RESPONSE_CACHE_H_
#define SEMJUDGE_JUDGE_RESPONSE_CACHE_H_

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "semjudge/judge/chat.h"
#include "semjudge/judge/config.h"

namespace semjudge::judge {

// SHA-256 over a length-prefixed encoding of model id, temperature, seed
// and every turn (role, text, media type, image bytes).
std::string RequestDigest(const ChatRequest& request);

std::string CacheKey(const BackendSpec& spec,
                     const std::vector<ChatTurn>& turns,
                     const JudgeConfig& config);

class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir);

  std::optional<std::string> Load(const std::string& digest) const;
  // Atomic replace; concurrent writers of one key leave a complete file.
  void Store(const std::string& digest, const std::string& response) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path EntryPath(const std::string& digest) const;

  std::filesystem::path dir_;
};

// Serves cached responses and forwards misses to `inner`.
class CachingBackend : public Backend {
 public:
  CachingBackend(Backend& inner, std::filesystem::path dir);

  std::string Complete(const ChatRequest& request) override;
  std::string Id() const override { return inner_.Id(); }

  std::size_t hits() const { return hits_.load(); }
  std::size_t inner_calls() const { return inner_calls_.load(); }

 private:
  Backend& inner_;
  ResponseCache cache_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> inner_calls_{0};
};

}  // namespace semjudge::judge

#endif  // SEMJUDGE_JUDGE_RESPONSE_CACHE_H_
