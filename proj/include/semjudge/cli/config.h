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

// Settings resolve in increasing precedence: built-in defaults, the JSON
// config file, SEMJUDGE_* environment variables, command-line flags.

#ifndef SEMJUDGE_CLI_CONFIG_H_
#define SEMJUDGE_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "semjudge/bench/runner.h"
#include "semjudge/judge/chat.h"
#include "semjudge/judge/config.h"

namespace semjudge::cli {

struct CliConfig {
  judge::BackendSpec backend;
  judge::JudgeConfig judge;
  std::optional<std::filesystem::path> mock_script;
  std::optional<std::filesystem::path> data_root;
  std::optional<std::filesystem::path> cache_dir;
  std::filesystem::path out_dir = "semjudge-out";
  std::size_t repetitions = 3;
  bench::Aggregation aggregation = bench::Aggregation::kMajority;
  std::size_t parallel = 1;
  std::uint64_t seed = 0;
  std::size_t n_perm = 10000;
  std::size_t n_boot = 10000;
  double alpha = 0.05;
};

// Overlays the keys present in a config document. Throws Error(kConfig)
// naming the offending key.
void ApplyConfigJson(CliConfig& config, const nlohmann::json& doc);
void ApplyConfigFile(CliConfig& config, const std::filesystem::path& path);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
EnvLookup ProcessEnvironment();

// SEMJUDGE_API_BASE, SEMJUDGE_MODEL, SEMJUDGE_CACHE_DIR, SEMJUDGE_SEED.
void ApplyEnvironment(CliConfig& config, const EnvLookup& env);

// Range checks shared by every command. Throws Error(kConfig).
void ValidateConfig(const CliConfig& config);

}  // namespace semjudge::cli

#endif  // SEMJUDGE_CLI_CONFIG_H_
