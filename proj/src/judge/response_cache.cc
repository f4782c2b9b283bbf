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

#include "semjudge/judge/response_cache.h"

#include <atomic>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "semjudge/error.h"
#include "semjudge/judge/digest.h"

namespace semjudge::judge {
namespace {

void Field(std::string& out, std::string_view tag, std::string_view value) {
  out.append(tag);
  out.append(std::to_string(value.size()));
  out.push_back(':');
  out.append(value);
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

}  // namespace

std::string RequestDigest(const ChatRequest& request) {
  std::string encoded = "semjudge-request-v1;";
  Field(encoded, "model", request.model);
  Field(encoded, "temperature", FormatDouble(request.temperature));
  Field(encoded, "seed",
        request.seed ? std::to_string(*request.seed) : std::string("none"));
  Field(encoded, "turns", std::to_string(request.turns.size()));
  for (const ChatTurn& turn : request.turns) {
    Field(encoded, "role", RoleName(turn.role));
    if (turn.text) {
      Field(encoded, "text", *turn.text);
    } else {
      encoded.append("notext;");
    }
    Field(encoded, "images", std::to_string(turn.images.size()));
    for (const ImagePayload& image : turn.images) {
      Field(encoded, "media", image.media_type);
      Field(encoded, "bytes", image.bytes);
    }
  }
  return Sha256Hex(encoded);
}

std::string CacheKey(const BackendSpec& spec,
                     const std::vector<ChatTurn>& turns,
                     const JudgeConfig& config) {
  return RequestDigest(
      ChatRequest{spec.model_id, turns, config.temperature, config.seed});
}

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kConfig,
                "cannot create cache directory " + dir_.string() + ": " +
                    ec.message());
  }
}

std::filesystem::path ResponseCache::EntryPath(const std::string& digest) const {
  return dir_ / (digest + ".json");
}

std::optional<std::string> ResponseCache::Load(const std::string& digest) const {
  std::ifstream in(EntryPath(digest), std::ios::binary);
  if (!in) return std::nullopt;
  const nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  auto it = entry.find("response");
  if (it == entry.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

void ResponseCache::Store(const std::string& digest,
                          const std::string& response) const {
  const nlohmann::json entry = {{"digest", digest}, {"response", response}};
  std::ostringstream tag;
  static std::atomic<unsigned long> counter{0};
  tag << ".tmp." << std::this_thread::get_id() << "." << counter++;
  const std::filesystem::path final_path = EntryPath(digest);
  std::filesystem::path temp_path = final_path;
  temp_path += tag.str();
  {
    std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kConfig,
                  "cannot write cache entry " + temp_path.string());
    }
    out << entry.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
        << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(temp_path, final_path, ec);
  if (ec) {
    std::filesystem::remove(temp_path, ec);
    throw Error(ErrorCode::kConfig,
                "cannot commit cache entry " + final_path.string());
  }
}

CachingBackend::CachingBackend(Backend& inner, std::filesystem::path dir)
    : inner_(inner), cache_(std::move(dir)) {}

std::string CachingBackend::Complete(const ChatRequest& request) {
  const std::string digest = RequestDigest(request);
  if (std::optional<std::string> hit = cache_.Load(digest)) {
    ++hits_;
    return *std::move(hit);
  }
  ++inner_calls_;
  std::string response = inner_.Complete(request);
  cache_.Store(digest, response);
  return response;
}

}  // namespace semjudge::judge
