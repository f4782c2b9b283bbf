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

#include "semjudge/cli/config.h"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include "semjudge/error.h"

namespace semjudge::cli {
namespace {

[[noreturn]] void Bad(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::kConfig, "config key " + key + ": " + what);
}

template <typename T>
T Get(const nlohmann::json& doc, const std::string& key) {
  try {
    return doc.get<T>();
  } catch (const nlohmann::json::exception&) {
    Bad(key, "has the wrong type");
  }
}

std::size_t GetCount(const nlohmann::json& doc, const std::string& key) {
  if (!doc.is_number_integer() || doc.get<long long>() < 0) {
    Bad(key, "must be a non-negative integer");
  }
  return doc.get<std::size_t>();
}

void ApplyBackend(CliConfig& c, const nlohmann::json& b) {
  if (!b.is_object()) Bad("backend", "must be an object");
  for (const auto& [key, value] : b.items()) {
    const std::string path = "backend." + key;
    if (key == "endpoint") c.backend.endpoint = Get<std::string>(value, path);
    else if (key == "model") c.backend.model_id = Get<std::string>(value, path);
    else if (key == "auth_env") c.backend.auth_env = Get<std::string>(value, path);
    else if (key == "timeout_ms") c.backend.timeout = std::chrono::milliseconds(GetCount(value, path));
    else if (key == "max_parallel") c.backend.max_parallel = GetCount(value, path);
    else if (key == "max_retries") c.backend.max_retries = GetCount(value, path);
    else Bad(path, "is not recognized");
  }
}

void ApplyJudge(CliConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) Bad("judge", "must be an object");
  for (const auto& [key, value] : j.items()) {
    const std::string path = "judge." + key;
    if (key == "complexity") {
      auto complexity = core::ComplexityFromString(Get<std::string>(value, path));
      if (!complexity) Bad(path, "must be standard or complex");
      c.judge.complexity = *complexity;
    } else if (key == "max_repairs") {
      c.judge.max_repairs = GetCount(value, path);
    } else if (key == "temperature") {
      c.judge.temperature = Get<double>(value, path);
    } else if (key == "seed") {
      if (value.is_null()) c.judge.seed.reset();
      else c.judge.seed = Get<std::int64_t>(value, path);
    } else if (key == "judge_sees_images") {
      c.judge.judge_sees_images = Get<bool>(value, path);
    } else if (key == "hsg_assisted_vqa") {
      c.judge.hsg_assisted_vqa = Get<bool>(value, path);
    } else if (key == "lenient_winner") {
      c.judge.lenient_winner = Get<bool>(value, path);
    } else {
      Bad(path, "is not recognized");
    }
  }
}

}  // namespace

void ApplyConfigJson(CliConfig& c, const nlohmann::json& doc) {
  if (!doc.is_object()) Bad("(top level)", "must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "backend") ApplyBackend(c, value);
    else if (key == "judge") ApplyJudge(c, value);
    else if (key == "mock") c.mock_script = Get<std::string>(value, key);
    else if (key == "data") c.data_root = Get<std::string>(value, key);
    else if (key == "cache") c.cache_dir = Get<std::string>(value, key);
    else if (key == "out") c.out_dir = Get<std::string>(value, key);
    else if (key == "repetitions") c.repetitions = GetCount(value, key);
    else if (key == "aggregation") {
      auto aggregation = bench::AggregationFromString(Get<std::string>(value, key));
      if (!aggregation) Bad(key, "must be majority or first");
      c.aggregation = *aggregation;
    }
    else if (key == "parallel") c.parallel = GetCount(value, key);
    else if (key == "seed") c.seed = Get<std::uint64_t>(value, key);
    else if (key == "n_perm") c.n_perm = GetCount(value, key);
    else if (key == "n_boot") c.n_boot = GetCount(value, key);
    else if (key == "alpha") c.alpha = Get<double>(value, key);
    else Bad(key, "is not recognized");
  }
}

void ApplyConfigFile(CliConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read config file " + path.string());
  const nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kConfig, "config file is not valid JSON: " + path.string());
  }
  ApplyConfigJson(config, doc);
}

EnvLookup ProcessEnvironment() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* value = std::getenv(name.c_str());
    if (value == nullptr || *value == '\0') return std::nullopt;
    return std::string(value);
  };
}

void ApplyEnvironment(CliConfig& config, const EnvLookup& env) {
  if (auto v = env("SEMJUDGE_API_BASE")) config.backend.endpoint = *v;
  if (auto v = env("SEMJUDGE_MODEL")) config.backend.model_id = *v;
  if (auto v = env("SEMJUDGE_CACHE_DIR")) config.cache_dir = *v;
  if (auto v = env("SEMJUDGE_SEED")) {
    try {
      config.seed = std::stoull(*v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfig, "SEMJUDGE_SEED is not an integer: " + *v);
    }
  }
}

void ValidateConfig(const CliConfig& config) {
  judge::ValidateJudgeConfig(config.judge);
  if (config.repetitions == 0) throw Error(ErrorCode::kConfig, "repetitions must be at least 1");
  if (config.parallel == 0) throw Error(ErrorCode::kConfig, "parallel must be at least 1");
  if (config.n_perm == 0) throw Error(ErrorCode::kConfig, "n-perm must be at least 1");
  if (config.n_boot == 0) throw Error(ErrorCode::kConfig, "n-boot must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw Error(ErrorCode::kConfig, "alpha must lie in (0, 1)");
  }
}

}  // namespace semjudge::cli
