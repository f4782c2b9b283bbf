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

#include "semjudge/baseline/vector_io.h"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "semjudge/error.h"
#include "semjudge/judge/digest.h"
#include "semjudge/judge/http_backend.h"

namespace semjudge::baseline {
namespace {

std::optional<GroundVector> VectorFromJson(const nlohmann::json& doc,
                                           std::string* problem) {
  if (!doc.is_object()) {
    *problem = "record is not an object";
    return std::nullopt;
  }
  auto space = doc.find("space_id");
  auto values = doc.find("values");
  if (space == doc.end() || !space->is_string()) {
    *problem = "space_id must be a string";
    return std::nullopt;
  }
  if (values == doc.end() || !values->is_array() || values->empty()) {
    *problem = "values must be a non-empty array";
    return std::nullopt;
  }
  GroundVector v;
  v.space_id = space->get<std::string>();
  for (const auto& x : *values) {
    if (!x.is_number() || !std::isfinite(x.get<double>())) {
      *problem = "values must be finite numbers";
      return std::nullopt;
    }
    v.values.push_back(x.get<double>());
  }
  return v;
}

}  // namespace

std::map<std::string, GroundVector> LoadGroundVectors(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kConfig, "cannot read vector file " + path.string());
  }
  std::map<std::string, GroundVector> table;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (core::Trim(line).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    const nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded()) {
      throw Error(ErrorCode::kSchema, where + ": not valid JSON");
    }
    if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string()) {
      throw Error(ErrorCode::kSchema, where + ": id must be a string");
    }
    std::string problem;
    std::optional<GroundVector> v = VectorFromJson(doc, &problem);
    if (!v) throw Error(ErrorCode::kSchema, where + ": " + problem);
    const std::string id = doc["id"].get<std::string>();
    if (!table.emplace(id, std::move(*v)).second) {
      throw Error(ErrorCode::kSchema, where + ": duplicate id " + id);
    }
  }
  return table;
}

GroundVector FileEmbeddingProvider::Embed(const std::string& id,
                                          const std::string*,
                                          const judge::ImagePayload*) {
  auto it = table_.find(id);
  if (it == table_.end()) {
    throw Error(ErrorCode::kData, "no ground vector for " + id);
  }
  return it->second;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(judge::BackendSpec spec)
    : spec_(std::move(spec)) {
  judge::ValidateBackendSpec(spec_);
}

GroundVector HttpEmbeddingProvider::Embed(const std::string& id,
                                          const std::string* text,
                                          const judge::ImagePayload* image) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
  }
  nlohmann::json input;
  if (image != nullptr) {
    input = {{"type", "image"},
             {"media_type", image->media_type},
             {"data", judge::Base64Encode(image->bytes)}};
  } else if (text != nullptr) {
    input = {{"type", "text"}, {"text", *text}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "nothing to embed for " + id);
  }
  const nlohmann::json body =
      judge::PostJson(spec_, "/embed", {{"model", spec_.model_id}, {"input", input}});
  std::string problem;
  std::optional<GroundVector> v = VectorFromJson(body, &problem);
  if (!v) {
    throw Error(ErrorCode::kTransport, "embedding response: " + problem);
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(id, *v);
  return *v;
}

}  // namespace semjudge::baseline
