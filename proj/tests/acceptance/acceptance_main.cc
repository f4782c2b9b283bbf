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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hsg_gen.h"
#include "semjudge/bench/benchmark.h"
#include "semjudge/bench/evaluators.h"
#include "semjudge/bench/qc.h"
#include "semjudge/bench/reports.h"
#include "semjudge/bench/runner.h"
#include "semjudge/cli/cli.h"
#include "semjudge/codec/hsg_codec.h"
#include "semjudge/core/semiotic.h"
#include "semjudge/judge/engine.h"
#include "semjudge/judge/http_backend.h"
#include "semjudge/judge/mock_backend.h"
#include "semjudge/stats/agreement.h"
#include "semjudge/stats/bias.h"
#include "semjudge/stats/correlation.h"
#include "semjudge/stats/ratings.h"
#include "semjudge/stats/rng.h"
#include "stats_oracles.h"

namespace fs = std::filesystem;
using namespace semjudge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

fs::path ToyDir() { return fs::path(SEMJUDGE_TOY_DIR); }

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("semjudge-acceptance-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<double> RandomVector(stats::Rng& rng, std::size_t n, bool ties) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = ties ? static_cast<double>(rng.UniformIndex(5)) : rng.UniformUnit() * 10 - 5;
  }
  return v;
}

bool AllEqual(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

// 1 -------------------------------------------------------------------------
Outcome StatisticsOracles() {
  const auto start = std::chrono::steady_clock::now();
  stats::Rng rng(101);
  double worst = 0;
  std::size_t checked = 0;
  while (checked < 200) {
    const std::size_t n = 2 + rng.UniformIndex(49);
    const bool ties = rng.UniformIndex(2) == 0;
    const auto x = RandomVector(rng, n, ties);
    const auto y = RandomVector(rng, n, ties && rng.UniformIndex(2));
    if (AllEqual(x) || AllEqual(y)) continue;
    worst = std::max(worst, std::fabs(stats::KendallTauB(x, y) - oracle::BruteKendallTauB(x, y)));
    worst = std::max(worst, std::fabs(stats::SpearmanRho(x, y) - oracle::BruteSpearman(x, y)));
    worst = std::max(worst, std::fabs(stats::LinCcc(x, y) - oracle::BruteLinCcc(x, y)));
    ++checked;
  }
  const double elapsed = Seconds(start);
  return {worst <= 1e-12 && elapsed < 10.0,
          "200 vectors x {tau-b, rho, ccc}, max |diff| " + Fmt("%.2e", worst) + ", " +
              Fmt("%.2f", elapsed) + " s"};
}

// 2 -------------------------------------------------------------------------
Outcome BradleyTerry() {
  stats::Rng rng(202);
  const std::vector<std::string> models = {"m0", "m1", "m2", "m3"};
  double worst = 0;
  std::size_t regularized = 0, failures = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t games = 1 + rng.UniformIndex(6);
    std::vector<double> strength(4);
    for (double& s : strength) s = rng.UniformUnit() * 3;
    std::vector<stats::PairOutcome> outcomes;
    std::vector<std::vector<double>> wins(4, std::vector<double>(4, 0.0));
    std::vector<int> total(4, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        for (std::size_t g = 0; g < games; ++g) {
          const double p = 1 / (1 + std::exp(strength[j] - strength[i]));
          const bool i_wins = rng.UniformUnit() < p;
          outcomes.push_back({models[i], models[j],
                              i_wins ? stats::PairOutcome::Winner::kI : stats::PairOutcome::Winner::kJ,
                              "p"});
          wins[i_wins ? i : j][i_wins ? j : i] += 1;
          ++total[i_wins ? i : j];
        }
      }
    }
    stats::FitOptions options;
    stats::RatingTable table;
    try {
      table = stats::FitRatings(outcomes, options);
    } catch (const stats::RatingFitError&) {
      options.regularize = true;
      table = stats::FitRatings(outcomes, options);
      for (auto& row : wins) {
        for (double& w : row) w += 0.5;
      }
      for (std::size_t i = 0; i < 4; ++i) wins[i][i] = 0;
      ++regularized;
    }
    const auto expected = oracle::NewtonBradleyTerry(wins);
    for (std::size_t i = 0; i < 4; ++i) {
      worst = std::max(worst, std::fabs(table.ratings.at(models[i]) - expected[i]));
    }

    // Same outcomes in another order and orientation.
    std::vector<stats::PairOutcome> shuffled = outcomes;
    stats::Rng shuffle_rng(rng.Next());
    shuffle_rng.Shuffle(std::span<stats::PairOutcome>(shuffled));
    for (auto& o : shuffled) {
      if (shuffle_rng.UniformIndex(2)) {
        std::swap(o.model_i, o.model_j);
        o.winner = o.winner == stats::PairOutcome::Winner::kI ? stats::PairOutcome::Winner::kJ
                                                              : stats::PairOutcome::Winner::kI;
      }
    }
    if (stats::FitRatings(shuffled, options).ratings != table.ratings) ++failures;

    // Balanced round robin: more wins must mean a strictly higher rating.
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const double gap = table.ratings.at(models[i]) - table.ratings.at(models[j]);
        if (total[i] > total[j] && !(gap > 0)) ++failures;
        if (total[i] == total[j] && std::fabs(gap) > 1e-6) ++failures;
      }
    }
  }
  return {worst <= 1e-6 && failures == 0,
          "100 tournaments (" + std::to_string(regularized) +
              " regularized), max |elo - newton| " + Fmt("%.2e", worst) + ", " +
              std::to_string(failures) + " invariance/dominance failures"};
}

// 3 -------------------------------------------------------------------------
Outcome PermutationExactness() {
  stats::Rng rng(303);
  const std::size_t n_perm = 50000;
  std::size_t outside = 0;
  double worst = 0;
  for (int d = 0; d < 50; ++d) {
    const std::size_t n = 3 + rng.UniformIndex(8);
    std::vector<double> ni(n);
    std::vector<int> aligned(n);
    const bool ties = d % 3 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      ni[i] = ties ? 0.5 * static_cast<double>(rng.UniformIndex(6)) - 1
                   : rng.UniformUnit() * 8 - 4;
    }
    const std::size_t n1 = 1 + rng.UniformIndex(n - 1);
    for (std::size_t i = 0; i < n1; ++i) aligned[i] = 1;
    stats::Rng label_rng(rng.Next());
    label_rng.Shuffle(std::span<int>(aligned));

    const double exact = oracle::ExactPermutationP(ni, aligned);
    const double p = stats::PermutationTestDelta(ni, aligned, n_perm, 9000 + d);
    const auto count = static_cast<std::size_t>(std::llround(p * (n_perm + 1) - 1));
    const auto [lo, hi] = oracle::BinomialInterval(n_perm, exact, 0.99);
    if (count < lo || count > hi) ++outside;
    worst = std::max(worst, std::fabs(p - exact));
  }
  return {outside == 0, "50 datasets, " + std::to_string(outside) +
                            " outside the 99% binomial interval, max |p - exact| " +
                            Fmt("%.4f", worst)};
}

// 4 -------------------------------------------------------------------------
Outcome NullCalibration() {
  std::mt19937_64 engine(404);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::bernoulli_distribution coin(0.6);
  std::vector<double> p_values;
  for (int d = 0; d < 1000; ++d) {
    std::vector<double> ni(30);
    std::vector<int> aligned(30);
    for (auto& v : ni) v = normal(engine);
    for (auto& a : aligned) a = coin(engine);
    const auto n1 = std::count(aligned.begin(), aligned.end(), 1);
    if (n1 == 0 || n1 == 30) {
      --d;
      continue;
    }
    p_values.push_back(stats::PermutationTestDelta(ni, aligned, 2000, 7000 + d));
  }
  const double ks = oracle::KsUniform(p_values);
  const double critical = 1.628 / std::sqrt(1000.0);
  return {ks < critical, "KS " + Fmt("%.4f", ks) + " vs 1% critical " + Fmt("%.4f", critical)};
}

// 5 -------------------------------------------------------------------------
Outcome BootstrapCoverage() {
  std::mt19937_64 engine(505);
  std::normal_distribution<double> aligned_dist(0.8, 1.0), misaligned_dist(0.3, 1.2);
  const double truth = 0.5;
  int covered = 0;
  for (int s = 0; s < 500; ++s) {
    std::vector<double> ni;
    std::vector<int> aligned;
    for (int i = 0; i < 60; ++i) {
      ni.push_back(aligned_dist(engine));
      aligned.push_back(1);
    }
    for (int i = 0; i < 40; ++i) {
      ni.push_back(misaligned_dist(engine));
      aligned.push_back(0);
    }
    const auto bound = stats::BootstrapLowerCi(ni, aligned, 2000, 0.05, 500 + s);
    if (bound.lower <= truth) ++covered;
  }
  const double coverage = covered / 500.0;
  return {coverage >= 0.93 && coverage <= 0.97,
          "coverage " + Fmt("%.3f", coverage) + " over 500 simulations"};
}

// 6 -------------------------------------------------------------------------
Outcome NetIconicityTable() {
  // Likert triples in tenths (or twentieths), in the published column order
  // iconicity / symbolism / indexicality, with the hand-evaluated NI.
  struct Row {
    int icn, sym, idx;  // x10
    const char* hand;
  };
  const Row rows[] = {
      {64, 34, 18, "3.80"},  {40, 30, 58, "-0.40"}, {56, 58, 20, "1.70"},
      {36, 54, 22, "-0.20"}, {48, 46, 18, "1.60"},  {58, 30, 52, "1.70"},
      {32, 58, 40, "-1.70"}, {36, 60, 22, "-0.50"}, {54, 42, 20, "2.30"},
      {38, 64, 30, "-0.90"}, {28, 60, 53, "-2.85"}, {38, 50, 52, "-1.30"},
      {38, 68, 30, "-1.10"}, {42, 58, 32, "-0.30"}, {32, 62, 32, "-1.50"},
  };
  std::size_t matched = 0;
  for (const Row& r : rows) {
    const core::GroundProfile profile{r.icn / 10.0, r.idx / 10.0, r.sym / 10.0};
    const double ni = core::NetIconicity(profile);
    // Exact rational value in twentieths: (2 icn - idx - sym) / 20.
    const double exact = (2 * r.icn - r.idx - r.sym) / 20.0;
    char rendered[16];
    std::snprintf(rendered, sizeof rendered, "%.2f", ni);
    if (std::fabs(ni - exact) <= 1e-12 && std::string(rendered) == r.hand) ++matched;
  }
  return {matched == 15, std::to_string(matched) + "/15 rows match the hand evaluation"};
}

// 7 -------------------------------------------------------------------------
Outcome KappaFixture() {
  // 2x2 table [[20, 5], [10, 15]]: p_o = 0.7, p_e = 0.5, kappa = 0.4.
  std::vector<int> a, b;
  auto fill = [&](int la, int lb, int count) {
    for (int i = 0; i < count; ++i) {
      a.push_back(la);
      b.push_back(lb);
    }
  };
  fill(0, 0, 20);
  fill(0, 1, 5);
  fill(1, 0, 10);
  fill(1, 1, 15);
  const double kappa = stats::CohenKappa(a, b);
  const double perfect = stats::CohenKappa(a, a);
  std::vector<int> c, d;
  for (int i = 0; i < 40; ++i) {
    c.push_back(i % 2);
    d.push_back((i / 2) % 2);
  }
  const double chance = stats::CohenKappa(c, d);
  return {kappa == 0.4 && perfect == 1.0 && std::fabs(chance) < 1e-12,
          "2x2 fixture " + Fmt("%.6f", kappa) + " (hand: 0.4), identical " +
              Fmt("%.1f", perfect) + ", independent " + Fmt("%.6f", chance)};
}

// 8 -------------------------------------------------------------------------
Outcome CodecRoundTrip() {
  stats::Rng rng(808);
  std::size_t round_trips = 0;
  for (int i = 0; i < 10000; ++i) {
    const core::Hsg hsg = gen::RandomHsg(rng);
    const std::string text = codec::CanonicalSerialize(hsg);
    const codec::HsgParseOptions options{hsg.complexity, std::nullopt};
    const auto parsed = hsg.side == core::HsgSide::kPrompt
                            ? codec::ParsePromptHsg(text, options)
                            : codec::ParseArtifactHsg(text, options);
    if (parsed.ok() && *parsed.value == hsg && codec::CanonicalSerialize(*parsed.value) == text) {
      ++round_trips;
    }
  }
  std::size_t sufficient = 0;
  for (int i = 0; i < 1000; ++i) {
    const core::Hsg hsg = gen::RandomHsg(rng);
    nlohmann::json doc = codec::HsgToJson(hsg);
    const std::size_t injected = gen::InjectFaults(doc, hsg.side, 1 + rng.UniformIndex(4), rng);
    const codec::HsgParseOptions options{hsg.complexity, std::nullopt};
    const auto parsed = hsg.side == core::HsgSide::kPrompt
                            ? codec::ParsePromptHsg(doc.dump(), options)
                            : codec::ParseArtifactHsg(doc.dump(), options);
    if (!parsed.ok() && parsed.violations.size() >= injected) ++sufficient;
  }
  return {round_trips == 10000 && sufficient == 1000,
          std::to_string(round_trips) + "/10000 round trips, " + std::to_string(sufficient) +
              "/1000 faulty documents fully reported"};
}

// 9 -------------------------------------------------------------------------
Outcome PipelineDeterminism() {
  const std::size_t http_before = judge::HttpBackend::RequestCount();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> reports = {"qc.json", "run.json", "report.csv", "report.txt"};
  std::vector<std::string> first;
  bool identical = true, ok = true;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = ScratchDir("bench-" + std::to_string(run));
    std::ostringstream sout, serr;
    const int code = cli::Run({"--mock", (ToyDir() / "mock.json").string(), "--out",
                               out.string(), "bench", "2afc", "--data", ToyDir().string()},
                              sout, serr, [](const std::string&) { return std::nullopt; });
    ok = ok && code == 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const std::string content = Slurp(out / reports[i]);
      if (run == 0) {
        first.push_back(content);
      } else if (content != first[i] || content.empty()) {
        identical = false;
      }
    }
  }
  const double elapsed = Seconds(start);
  const bool offline = judge::HttpBackend::RequestCount() == http_before;

  const bench::Benchmark benchmark = bench::LoadBenchmark(ToyDir());
  const bench::QcResult qc = bench::QcFilter(benchmark);
  bench::OracleEvaluator oracle;
  const bench::RunRecord run = bench::Run2afc(qc.benchmark, oracle, bench::RunOptions{});
  const bench::AlignmentReport alignment = bench::ComputeAlignment(run, qc.benchmark);
  const bool perfect = alignment.krcc.mean_tau == 1.0 && alignment.srcc == 1.0 &&
                       std::fabs(alignment.ccc - 1.0) < 1e-12;

  // Pair enumeration: without a task file every initiative yields k(k-1)/2.
  bool enumeration = benchmark.tasks.size() == 30;
  for (std::size_t k = 2; k <= 20; ++k) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < k; ++i) ids.push_back("img" + std::to_string(i));
    enumeration = enumeration && bench::EnumeratePairs(ids).size() == k * (k - 1) / 2;
  }
  const fs::path bare = ScratchDir("enumerated");
  fs::copy(ToyDir() / "initiatives.jsonl", bare / "initiatives.jsonl");
  fs::copy(ToyDir() / "images", bare / "images", fs::copy_options::recursive);
  const bench::Benchmark enumerated = bench::LoadBenchmark(bare);
  enumeration = enumeration && enumerated.tasks_enumerated && enumerated.tasks.size() == 30;
  enumeration = enumeration && 187 * bench::EnumeratePairs({"1", "2", "3", "4", "5"}).size() == 1870;

  return {ok && identical && offline && elapsed < 60.0 && perfect && enumeration,
          Fmt("%.2f", elapsed) + " s, reports " + (identical ? "identical" : "DIFFER") +
              ", network calls " + (offline ? "0" : "> 0") + ", oracle KRCC " +
              Fmt("%.3f", alignment.krcc.mean_tau) + " SRCC " + Fmt("%.3f", alignment.srcc) +
              " CCC " + Fmt("%.3f", alignment.ccc) + ", 30 tasks = 3 x C(5,2)" +
              (enumeration ? "" : " FAILED")};
}

// 10 ------------------------------------------------------------------------
bench::Task2afc CraftedTask(const std::string& init, int index, int majority) {
  bench::Task2afc task;
  task.task_id = init + "__t" + std::to_string(index);
  task.initiative_id = init;
  task.image_a = "a";
  task.image_b = "b";
  for (int v = 0; v < 13; ++v) {
    task.human_votes.push_back(
        {"ann" + std::to_string(v), v < majority ? core::Choice2::kA : core::Choice2::kB});
  }
  return task;
}

Outcome QcRules() {
  bench::Benchmark benchmark;
  for (const char* id : {"keep", "drop"}) {
    bench::Initiative init;
    init.initiative_id = id;
    init.prompt_text = id;
    benchmark.initiatives.push_back(init);
  }
  // "keep": four 8-of-13 tasks and one 7-of-13; "drop": three 8-of-13.
  for (int i = 0; i < 4; ++i) benchmark.tasks.push_back(CraftedTask("keep", i, 8));
  benchmark.tasks.push_back(CraftedTask("keep", 4, 7));
  for (int i = 0; i < 3; ++i) benchmark.tasks.push_back(CraftedTask("drop", i, 8));
  const bench::QcResult qc = bench::QcFilter(benchmark);

  bool ok = qc.benchmark.initiatives.size() == 1 &&
            qc.benchmark.initiatives[0].initiative_id == "keep" &&
            qc.report.dropped_initiatives == std::vector<std::string>{"drop"} &&
            qc.benchmark.tasks.size() == 4;
  for (const bench::TaskQc& t : qc.report.tasks) {
    const bool eight = t.agreement > 0.6;
    ok = ok && t.reliable == eight;
  }
  for (const bench::Task2afc& t : qc.benchmark.tasks) ok = ok && t.reliable;
  return {ok, "8/13 (0.615) kept, 7/13 (0.538) dropped, initiative with 3 reliable tasks dropped"};
}

// 11 ------------------------------------------------------------------------
nlohmann::json ToyMockWithPromptResponses(const std::vector<std::string>& responses) {
  nlohmann::json script = nlohmann::json::parse(Slurp(ToyDir() / "mock.json"));
  for (auto& rule : script["rules"]) {
    if (rule["when"]["stage"] == "prompt_hsg") {
      rule.erase("respond_json");
      rule["responses"] = responses;
    }
  }
  return script;
}

Outcome RepairLoop() {
  const judge::ImagePayload a = judge::LoadImage(ToyDir() / "images/init01/gen-a.png");
  const judge::ImagePayload b = judge::LoadImage(ToyDir() / "images/init01/gen-b.png");
  nlohmann::json script = nlohmann::json::parse(Slurp(ToyDir() / "mock.json"));
  const std::string valid = script["rules"][0]["respond_json"].dump();

  judge::MockBackend repaired(ToyMockWithPromptResponses({"{\"hsg_root\": [", valid}));
  judge::Engine engine(repaired, "mock", judge::JudgeConfig{});
  const judge::JudgeResult result = engine.Judge2afc("a prompt", a, b);
  const bool recovered = result.transcripts[0].repairs_used == 1 && repaired.calls() == 4;

  bool bounded = true;
  for (std::size_t max_repairs = 0; max_repairs <= judge::kMaxRepairsLimit; ++max_repairs) {
    judge::MockBackend broken(nlohmann::json{{"rules", nlohmann::json::array()},
                                             {"fallback", "sorry, no JSON today"}});
    judge::JudgeConfig config;
    config.max_repairs = max_repairs;
    judge::Engine failing(broken, "mock", config);
    try {
      failing.Judge2afc("a prompt", a, b);
      bounded = false;
    } catch (const judge::StageError& e) {
      bounded = bounded && e.code() == ErrorCode::kRepairExhausted &&
                broken.calls() == 1 + max_repairs;
    }
  }
  return {recovered && bounded,
          std::string("malformed-then-valid: repairs_used ") +
              std::to_string(result.transcripts[0].repairs_used) +
              ", always-malformed: 1 + max_repairs calls for max_repairs 0..5" +
              (bounded ? "" : " FAILED")};
}

// 12 ------------------------------------------------------------------------
bench::Benchmark SyntheticVqa(std::size_t items) {
  bench::Benchmark benchmark;
  bench::Initiative init;
  init.initiative_id = "synthetic";
  init.prompt_text = "synthetic";
  init.images = {{"one", "gen-a", ToyDir() / "images/init01/gen-a.png"},
                 {"two", "gen-b", ToyDir() / "images/init01/gen-b.png"}};
  benchmark.initiatives.push_back(init);
  stats::Rng rng(1212);
  for (std::size_t i = 0; i < items; ++i) {
    bench::VqaItem item;
    char id[16];
    std::snprintf(id, sizeof id, "q%04zu", i);
    item.question_id = id;
    item.initiative_id = "synthetic";
    item.image_ids = i % 2 ? std::vector<std::string>{"one", "two"} : std::vector<std::string>{"one"};
    item.stem = "Which reading fits bbox_1?";
    for (int c = 0; c < 4; ++c) item.choices[c] = std::string(id) + " option " + "ABCD"[c];
    item.answer = static_cast<codec::VqaChoice>(rng.UniformIndex(4));
    benchmark.vqa.push_back(item);
  }
  return benchmark;
}

Outcome VqaHarness() {
  const bench::Benchmark benchmark = SyntheticVqa(1000);
  bench::RunOptions options;
  options.repetitions = 1;
  bench::OracleEvaluator oracle;
  const auto oracle_report = bench::ComputeVqaAccuracy(bench::RunVqa(benchmark, oracle, options));

  judge::MockBackend constant(nlohmann::json{{"rules", nlohmann::json::array()},
                                             {"fallback", "{\"answer\": \"A\"}"}});
  bench::SemJudgeEvaluator guesser(constant, "constant", judge::JudgeConfig{});
  const auto guess_report = bench::ComputeVqaAccuracy(bench::RunVqa(benchmark, guesser, options));
  const bool ok = oracle_report.accuracy == 1.0 && guess_report.n_questions == 1000 &&
                  std::fabs(guess_report.accuracy - 0.25) <= 0.03;
  return {ok, "oracle " + Fmt("%.1f", 100 * oracle_report.accuracy) +
                  "%, constant \"A\" after shuffling " +
                  Fmt("%.1f", 100 * guess_report.accuracy) + "% on 1000 items"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"statistics oracles", StatisticsOracles},
      {"bradley-terry elo", BradleyTerry},
      {"permutation test exactness", PermutationExactness},
      {"null calibration", NullCalibration},
      {"bootstrap coverage", BootstrapCoverage},
      {"net iconicity table", NetIconicityTable},
      {"cohen kappa fixture", KappaFixture},
      {"codec round trip", CodecRoundTrip},
      {"pipeline determinism", PipelineDeterminism},
      {"qc rules", QcRules},
      {"repair loop", RepairLoop},
      {"vqa harness", VqaHarness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1
              << "  " << criteria[i].first << ": " << outcome.detail << std::endl;
  }
  fs::remove_all(fs::temp_directory_path() /
                 ("semjudge-acceptance-" + std::to_string(::getpid())));
  return failed == 0 ? 0 : 1;
}
