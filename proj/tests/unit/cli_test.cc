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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "semjudge/cli/cli.h"
#include "semjudge/cli/config.h"
#include "semjudge/error.h"

namespace semjudge::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kToy = SEMJUDGE_TOY_DIR;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args,
               std::map<std::string, std::string> environment = {}) {
  std::ostringstream out, err;
  EnvLookup env = [environment](const std::string& name) -> std::optional<std::string> {
    auto it = environment.find(name);
    if (it == environment.end()) return std::nullopt;
    return it->second;
  };
  Outcome o;
  o.code = Run(args, out, err, env);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("semjudge-cli-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::vector<std::string> JudgeArgs(const fs::path& out_dir) {
  return {"--mock", (kToy / "mock.json").string(), "--out", out_dir.string(), "judge",
          "--prompt", "A lighthouse keeper's last night before the light is automated.",
          "--image-a", (kToy / "images/init01/gen-a.png").string(),
          "--image-b", (kToy / "images/init01/gen-b.png").string()};
}

TEST(Cli, JudgeWritesOutputs) {
  const fs::path dir = Scratch("judge");
  const Outcome o = Invoke(JudgeArgs(dir));
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("winner: "), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "judge_output.json"));
  EXPECT_TRUE(fs::exists(dir / "hsg_a.dot"));
  EXPECT_TRUE(fs::exists(dir / "hsg_b.dot"));
  EXPECT_EQ(Slurp(dir / "judge_output.json"), Slurp(kToy / "../golden/judge_output.json"));

  const Outcome exported = Invoke({"--out", dir.string(), "export-hsg", "--input",
                                   (dir / "judge_output.json").string()});
  ASSERT_EQ(exported.code, kExitOk) << exported.err;
  EXPECT_TRUE(fs::exists(dir / "hsg_prompt.dot"));
  fs::remove_all(dir);
}

TEST(Cli, UnreadableImageIsConfigError) {
  const fs::path dir = Scratch("unreadable");
  auto args = JudgeArgs(dir);
  args[8] = "/nonexistent/picture.png";
  const Outcome o = Invoke(args);
  EXPECT_EQ(o.code, kExitConfig);
  EXPECT_NE(o.err.find("/nonexistent/picture.png"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, RepairExhaustionIsBackendError) {
  const fs::path dir = Scratch("repair");
  const fs::path mock = WriteFile(dir / "mock.json", R"({"fallback": "no json here"})");
  auto args = JudgeArgs(dir);
  args[1] = mock.string();
  const Outcome o = Invoke(args);
  EXPECT_EQ(o.code, kExitBackend) << o.err;
  fs::remove_all(dir);
}

TEST(Cli, MissingBackendIsConfigError) {
  const fs::path dir = Scratch("nobackend");
  auto args = JudgeArgs(dir);
  args.erase(args.begin(), args.begin() + 2);
  EXPECT_EQ(Invoke(args).code, kExitConfig);
  fs::remove_all(dir);
}

TEST(Cli, OracleBench) {
  const fs::path dir = Scratch("oracle");
  const Outcome o = Invoke({"--out", dir.string(), "bench", "2afc", "--data", kToy.string(),
                            "--evaluator", "oracle", "--n-perm", "200", "--n-boot", "200"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("KRCC 1.000  SRCC 1.000  CCC 1.000"), std::string::npos) << o.out;
  for (const char* file : {"qc.json", "run.json", "report.csv", "report.txt"}) {
    EXPECT_TRUE(fs::exists(dir / file)) << file;
  }
  fs::remove_all(dir);
}

TEST(Cli, RandomBenchIsReproducible) {
  std::string csv, txt;
  for (int round = 0; round < 2; ++round) {
    const fs::path dir = Scratch("random" + std::to_string(round));
    const Outcome o = Invoke({"--out", dir.string(), "--seed", "17", "--n-perm", "200",
                              "--n-boot", "200", "bench", "2afc", "--data", kToy.string(),
                              "--evaluator", "random"});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    if (round == 0) {
      csv = Slurp(dir / "report.csv");
      txt = Slurp(dir / "report.txt");
    } else {
      EXPECT_EQ(Slurp(dir / "report.csv"), csv);
      EXPECT_EQ(Slurp(dir / "report.txt"), txt);
    }
    fs::remove_all(dir);
  }
}

TEST(Cli, BenchWithoutProfilesSkipsBias) {
  const fs::path data = Scratch("noprofiles-data");
  fs::copy(kToy, data, fs::copy_options::recursive);
  fs::remove(data / "profiles.jsonl");
  const fs::path dir = Scratch("noprofiles");
  const Outcome o = Invoke({"--out", dir.string(), "bench", "2afc", "--data", data.string(),
                            "--evaluator", "oracle"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE((o.out + o.err).find("iconicity bias skipped: no profiles.jsonl"), std::string::npos);
  fs::remove_all(data);
  fs::remove_all(dir);
}

TEST(Cli, BrokenBenchmarkIsDataError) {
  const fs::path data = Scratch("broken-data");
  fs::copy(kToy, data, fs::copy_options::recursive);
  WriteFile(data / "vqa.jsonl", "{not json\n");
  const Outcome o = Invoke({"bench", "vqa", "--data", data.string(), "--evaluator", "oracle"});
  EXPECT_EQ(o.code, kExitData);
  EXPECT_NE(o.err.find("vqa.jsonl:1"), std::string::npos) << o.err;
  fs::remove_all(data);
}

TEST(Cli, Qc) {
  const Outcome o = Invoke({"qc", "--data", kToy.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("reliable tasks: 30 of 30"), std::string::npos) << o.out;
}

class StatsCommand : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = Scratch("stats"); }
  void TearDown() override { fs::remove_all(dir_); }
  Outcome Stats(const std::string& which, const std::string& jsonl,
                std::vector<std::string> extra = {}) {
    const fs::path input = WriteFile(dir_ / (which + ".jsonl"), jsonl);
    std::vector<std::string> args = {"stats", which, "--input", input.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    return Invoke(args);
  }
  fs::path dir_;
};

TEST_F(StatsCommand, Kappa) {
  std::string jsonl;
  auto add = [&](const char* a, const char* b, int count) {
    for (int i = 0; i < count; ++i) jsonl += std::string(R"({"a": ")") + a + R"(", "b": ")" + b + "\"}\n";
  };
  add("x", "x", 20);
  add("x", "y", 5);
  add("y", "x", 10);
  add("y", "y", 15);
  const Outcome o = Stats("kappa", jsonl);
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("kappa: 0.400000"), std::string::npos) << o.out;
}

TEST_F(StatsCommand, EloMeanIsAnchored) {
  const Outcome o = Stats("elo",
                          R"({"model_i": "m1", "model_j": "m2", "winner": "i"})" "\n"
                          R"({"model_i": "m2", "model_j": "m3", "winner": "i"})" "\n"
                          R"({"model_i": "m3", "model_j": "m1", "winner": "i"})" "\n"
                          R"({"model_i": "m1", "model_j": "m3", "winner": "m1"})" "\n");
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("mean: 1500.000"), std::string::npos) << o.out;
}

TEST_F(StatsCommand, BiasWithEmptySubset) {
  const Outcome o = Stats("bias", R"({"ni": 0.1, "aligned": 1})" "\n" R"({"ni": 0.3, "aligned": 1})" "\n");
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "undefined: misaligned subset empty\n");
}

TEST_F(StatsCommand, CorrelationsAndKrcc) {
  const Outcome srcc = Stats("srcc", R"({"x": 1, "y": 2})" "\n" R"({"x": 2, "y": 4})" "\n" R"({"x": 3, "y": 9})" "\n");
  ASSERT_EQ(srcc.code, kExitOk) << srcc.err;
  EXPECT_NE(srcc.out.find("srcc: 1"), std::string::npos) << srcc.out;
  const Outcome krcc = Stats("krcc",
                             R"({"task_id": "t1", "prompt_id": "p", "evaluator": "A", "human": "A"})" "\n"
                             R"({"task_id": "t2", "prompt_id": "p", "evaluator": "B", "human": "B"})" "\n");
  ASSERT_EQ(krcc.code, kExitOk) << krcc.err;
  EXPECT_NE(krcc.out.find("krcc: 1"), std::string::npos) << krcc.out;
}

TEST_F(StatsCommand, MalformedInputIsDataError) {
  const Outcome o = Stats("ccc", R"({"x": 1, "y": 2})" "\n" R"({"x": "one"})" "\n");
  EXPECT_EQ(o.code, kExitData);
  EXPECT_NE(o.err.find("ccc.jsonl:2"), std::string::npos) << o.err;
}

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(Invoke({}).code, kExitConfig);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"--complexity", "huge", "qc", "--data", kToy.string()}).code, kExitConfig);
  EXPECT_EQ(Invoke({"--aggregation", "mean", "qc", "--data", kToy.string()}).code, kExitConfig);
}

TEST(Cli, UnknownConfigKey) {
  const fs::path dir = Scratch("config");
  const fs::path config = WriteFile(dir / "config.json", R"({"colour": "blue"})");
  const Outcome o = Invoke({"--config", config.string(), "qc", "--data", kToy.string()});
  EXPECT_EQ(o.code, kExitConfig);
  EXPECT_NE(o.err.find("colour"), std::string::npos) << o.err;
  fs::remove_all(dir);
}

TEST(Config, Precedence) {
  CliConfig config;
  ApplyConfigJson(config, nlohmann::json::parse(R"({"seed": 1, "repetitions": 5})"));
  EXPECT_EQ(config.seed, 1u);
  EXPECT_EQ(config.repetitions, 5u);
  ApplyEnvironment(config, [](const std::string& name) -> std::optional<std::string> {
    if (name == "SEMJUDGE_SEED") return "9";
    return std::nullopt;
  });
  EXPECT_EQ(config.seed, 9u);
  EXPECT_EQ(config.repetitions, 5u);
  EXPECT_THROW(ApplyEnvironment(config, [](const std::string& name) -> std::optional<std::string> {
                 if (name == "SEMJUDGE_SEED") return "nine";
                 return std::nullopt;
               }),
               Error);
}

TEST(Config, ExitCodes) {
  EXPECT_EQ(ExitCodeFor(ErrorCode::kConfig), kExitConfig);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kTransport), kExitBackend);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kRepairExhausted), kExitBackend);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kSchema), kExitData);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kData), kExitData);
}

}  // namespace
}  // namespace semjudge::cli
