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

#include "semjudge/cli/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>

#include "semjudge/baseline/vector_io.h"
#include "semjudge/bench/benchmark.h"
#include "semjudge/bench/evaluators.h"
#include "semjudge/bench/qc.h"
#include "semjudge/bench/reports.h"
#include "semjudge/bench/runner.h"
#include "semjudge/codec/dot_export.h"
#include "semjudge/codec/hsg_codec.h"
#include "semjudge/judge/engine.h"
#include "semjudge/judge/http_backend.h"
#include "semjudge/judge/judge_output.h"
#include "semjudge/judge/mock_backend.h"
#include "semjudge/judge/response_cache.h"
#include "semjudge/stats/agreement.h"
#include "semjudge/stats/bias.h"
#include "semjudge/stats/correlation.h"
#include "semjudge/stats/ratings.h"

namespace semjudge::cli {
namespace {

namespace fs = std::filesystem;

std::string Num(double value, int digits = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

// Values given on the command line, applied last.
struct Flags {
  std::string config, backend, model, mock, cache, out, complexity, aggregation;
  std::uint64_t seed = 0;
  std::size_t parallel = 1, repetitions = 3, n_perm = 0, n_boot = 0, max_repairs = 0;
  double alpha = 0.05, temperature = 0.0;
};

struct Options {
  CLI::Option* config = nullptr;
  CLI::Option* backend = nullptr;
  CLI::Option* model = nullptr;
  CLI::Option* mock = nullptr;
  CLI::Option* cache = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* parallel = nullptr;
  CLI::Option* repetitions = nullptr;
  CLI::Option* complexity = nullptr;
  CLI::Option* n_perm = nullptr;
  CLI::Option* n_boot = nullptr;
  CLI::Option* alpha = nullptr;
  CLI::Option* max_repairs = nullptr;
  CLI::Option* temperature = nullptr;
  CLI::Option* aggregation = nullptr;
};

CliConfig Resolve(const Flags& f, const Options& o, const EnvLookup& env) {
  CliConfig c;
  if (o.config->count()) ApplyConfigFile(c, f.config);
  ApplyEnvironment(c, env);
  if (o.backend->count()) c.backend.endpoint = f.backend;
  if (o.model->count()) c.backend.model_id = f.model;
  if (o.mock->count()) c.mock_script = f.mock;
  if (o.cache->count()) c.cache_dir = f.cache;
  if (o.out->count()) c.out_dir = f.out;
  if (o.seed->count()) c.seed = f.seed;
  if (o.parallel->count()) c.parallel = f.parallel;
  if (o.repetitions->count()) c.repetitions = f.repetitions;
  if (o.complexity->count()) c.judge.complexity = *core::ComplexityFromString(f.complexity);
  if (o.n_perm->count()) c.n_perm = f.n_perm;
  if (o.n_boot->count()) c.n_boot = f.n_boot;
  if (o.alpha->count()) c.alpha = f.alpha;
  if (o.max_repairs->count()) c.judge.max_repairs = f.max_repairs;
  if (o.temperature->count()) c.judge.temperature = f.temperature;
  if (o.aggregation->count()) c.aggregation = *bench::AggregationFromString(f.aggregation);
  ValidateConfig(c);
  return c;
}

// The configured backend, optionally behind the response cache.
class BackendStack {
 public:
  explicit BackendStack(const CliConfig& c) {
    if (c.mock_script) {
      base_ = std::make_unique<judge::MockBackend>(judge::MockBackend::FromFile(*c.mock_script));
      model_ = c.backend.model_id.empty() ? "mock" : c.backend.model_id;
    } else if (!c.backend.endpoint.empty()) {
      base_ = std::make_unique<judge::HttpBackend>(c.backend);
      model_ = c.backend.model_id;
    } else {
      throw Error(ErrorCode::kConfig,
                  "no backend configured: pass --backend URL (with --model) or --mock SCRIPT");
    }
    if (c.cache_dir) cached_ = std::make_unique<judge::CachingBackend>(*base_, *c.cache_dir);
  }

  judge::Backend& get() { return cached_ ? *cached_ : *base_; }
  const std::string& model() const { return model_; }

 private:
  std::unique_ptr<judge::Backend> base_;
  std::unique_ptr<judge::CachingBackend> cached_;
  std::string model_;
};

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kConfig, "cannot create output directory " + dir.string());
}

std::vector<nlohmann::json> ReadJsonl(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read " + path.string());
  std::vector<nlohmann::json> records;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (core::Trim(line).empty()) continue;
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw Error(ErrorCode::kSchema,
                  path.string() + ":" + std::to_string(n) + ": expected a JSON object");
    }
    doc["__line"] = n;
    records.push_back(std::move(doc));
  }
  return records;
}

[[noreturn]] void BadRecord(const fs::path& path, const nlohmann::json& r,
                            const std::string& what) {
  throw Error(ErrorCode::kSchema, path.string() + ":" +
                                      std::to_string(r["__line"].get<std::size_t>()) +
                                      ": " + what);
}

double NumberField(const fs::path& path, const nlohmann::json& r, const char* key) {
  if (!r.contains(key) || !r[key].is_number()) {
    BadRecord(path, r, std::string(key) + " must be a number");
  }
  return r[key].get<double>();
}

std::string StringField(const fs::path& path, const nlohmann::json& r, const char* key) {
  if (!r.contains(key) || !r[key].is_string()) {
    BadRecord(path, r, std::string(key) + " must be a string");
  }
  return r[key].get<std::string>();
}

int JudgementValue(const fs::path& path, const nlohmann::json& r, const char* key) {
  if (r.contains(key)) {
    const auto& v = r[key];
    if (v == "A" || v == 1) return 1;
    if (v == "B" || v == -1) return -1;
    if (v == "abstain" || v == 0) return 0;
  }
  BadRecord(path, r, std::string(key) + " must be A, B, abstain, 1, -1 or 0");
}

// ---- commands -------------------------------------------------------------

struct JudgeArgs {
  std::string prompt, image_a, image_b, prompt_image;
};

int CmdJudge(const CliConfig& c, const JudgeArgs& a, std::ostream& out) {
  const judge::ImagePayload image_a = judge::LoadImage(a.image_a);
  const judge::ImagePayload image_b = judge::LoadImage(a.image_b);
  std::optional<judge::ImagePayload> prompt_image;
  if (!a.prompt_image.empty()) prompt_image = judge::LoadImage(a.prompt_image);
  BackendStack stack(c);
  judge::Engine engine(stack.get(), stack.model(), c.judge);
  const judge::JudgeResult result =
      engine.Judge2afc(a.prompt, image_a, image_b, prompt_image);

  EnsureDir(c.out_dir);
  bench::WriteTextFile(c.out_dir / "judge_output.json",
                       judge::JudgeResultToJson(result).dump(2) + "\n");
  codec::DotOptions dot;
  dot.graph_name = "hsg_a";
  bench::WriteTextFile(c.out_dir / "hsg_a.dot",
                       codec::ExportDot(result.output.cascade_a.stages.back(), dot));
  dot.graph_name = "hsg_b";
  bench::WriteTextFile(c.out_dir / "hsg_b.dot",
                       codec::ExportDot(result.output.cascade_b.stages.back(), dot));
  out << "winner: " << core::Choice2Name(result.output.verdict) << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string data, evaluator = "semjudge", verdicts, vectors, baseline_mode = "conditioned",
                    prior_id = "prior", distance = "cosine";
  bool pooled = false, hsg_assisted = false, timestamps = false;
  double threshold = 0.60;
  std::size_t min_reliable = 4;
};

fs::path DataRoot(const CliConfig& c, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (c.data_root) return *c.data_root;
  throw Error(ErrorCode::kConfig, "no benchmark given: pass --data DIR");
}

// Owns whatever the chosen evaluator needs to outlive the run.
struct EvaluatorStack {
  std::unique_ptr<BackendStack> backend;
  std::unique_ptr<baseline::EmbeddingProvider> provider;
  std::unique_ptr<bench::Evaluator> evaluator;
};

EvaluatorStack MakeEvaluator(const CliConfig& c, const BenchArgs& a) {
  EvaluatorStack s;
  if (a.evaluator == "semjudge") {
    judge::JudgeConfig config = c.judge;
    config.hsg_assisted_vqa = config.hsg_assisted_vqa || a.hsg_assisted;
    s.backend = std::make_unique<BackendStack>(c);
    s.evaluator = std::make_unique<bench::SemJudgeEvaluator>(s.backend->get(),
                                                             s.backend->model(), config);
  } else if (a.evaluator == "oracle") {
    s.evaluator = std::make_unique<bench::OracleEvaluator>();
  } else if (a.evaluator == "random") {
    s.evaluator = std::make_unique<bench::RandomEvaluator>(c.seed);
  } else if (a.evaluator == "import") {
    if (a.verdicts.empty()) throw Error(ErrorCode::kConfig, "--evaluator import needs --verdicts FILE");
    s.evaluator = std::make_unique<bench::ImportEvaluator>(bench::ImportEvaluator::FromFile(a.verdicts));
  } else if (a.evaluator == "baseline") {
    std::optional<baseline::GroundPrior> prior;
    if (!a.vectors.empty()) {
      auto table = baseline::LoadGroundVectors(a.vectors);
      if (auto it = table.find(a.prior_id); it != table.end()) prior = baseline::GroundPrior{it->second};
      s.provider = std::make_unique<baseline::FileEmbeddingProvider>(std::move(table));
    } else if (!c.backend.endpoint.empty()) {
      s.provider = std::make_unique<baseline::HttpEmbeddingProvider>(c.backend);
    } else {
      throw Error(ErrorCode::kConfig, "--evaluator baseline needs --vectors FILE or --backend URL");
    }
    const auto distance = baseline::DistanceFromString(a.distance);
    if (!distance) throw Error(ErrorCode::kConfig, "--distance must be cosine or euclidean");
    const bool free = a.baseline_mode == "free";
    s.evaluator = std::make_unique<bench::BaselineEvaluator>(
        "baseline:" + a.baseline_mode + ":" + a.distance, *s.provider,
        free ? bench::BaselineMode::kContextFree : bench::BaselineMode::kContextConditioned,
        prior, *distance);
  } else {
    throw Error(ErrorCode::kConfig, "unknown evaluator " + a.evaluator);
  }
  return s;
}

bench::RunOptions RunOptionsOf(const CliConfig& c, const BenchArgs& a) {
  bench::RunOptions options;
  options.repetitions = c.repetitions;
  options.parallelism = std::max(c.parallel, std::size_t{1});
  options.seed = c.seed;
  options.record_timestamps = a.timestamps;
  options.aggregation = c.aggregation;
  return options;
}

int CmdBench2afc(const CliConfig& c, const BenchArgs& a, std::ostream& out) {
  const bench::Benchmark loaded = bench::LoadBenchmark(DataRoot(c, a.data));
  bench::QcOptions qc_options;
  qc_options.agreement_threshold = a.threshold;
  qc_options.min_reliable = a.min_reliable;
  const bench::QcResult qc = bench::QcFilter(loaded, qc_options);
  EvaluatorStack stack = MakeEvaluator(c, a);
  const bench::RunRecord run = bench::Run2afc(qc.benchmark, *stack.evaluator, RunOptionsOf(c, a));

  EnsureDir(c.out_dir);
  bench::WriteTextFile(c.out_dir / "qc.json", bench::QcReportToJson(qc.report).dump(2) + "\n");
  bench::WriteTextFile(c.out_dir / "run.json", bench::RunRecordToJson(run).dump(2) + "\n");

  bench::AlignmentOptions alignment_options;
  alignment_options.pooled_krcc = a.pooled;
  const bench::AlignmentReport alignment =
      bench::ComputeAlignment(run, qc.benchmark, alignment_options);

  std::optional<bench::BiasReport> bias;
  std::string notice;
  if (!qc.benchmark.has_profiles) {
    notice = "iconicity bias skipped: no profiles.jsonl";
  } else {
    stats::BiasTestOptions bias_options;
    bias_options.n_perm = c.n_perm;
    bias_options.n_boot = c.n_boot;
    bias_options.alpha = c.alpha;
    bias_options.seed = c.seed;
    try {
      bias = bench::ComputeIconicityBias(run, qc.benchmark, bias_options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kData) throw;
      notice = std::string("iconicity bias skipped: ") + e.what();
    }
  }
  const bench::BiasReport* bias_ptr = bias ? &*bias : nullptr;
  std::string text = bench::AlignmentText(alignment, bias_ptr);
  if (!notice.empty()) text += "\n" + notice + "\n";
  bench::WriteTextFile(c.out_dir / "report.csv", bench::AlignmentCsv(alignment, bias_ptr));
  bench::WriteTextFile(c.out_dir / "report.txt", text);

  std::size_t failures = 0;
  for (const auto& t : run.tasks) failures += t.errors.empty() ? 0 : 1;
  out << bench::AlignmentRow(alignment) << "\n";
  if (failures > 0) out << failures << " task(s) had failed repetitions; see run.json\n";
  if (!notice.empty()) out << notice << "\n";
  return kExitOk;
}

int CmdBenchVqa(const CliConfig& c, const BenchArgs& a, std::ostream& out) {
  const bench::Benchmark loaded = bench::LoadBenchmark(DataRoot(c, a.data));
  EvaluatorStack stack = MakeEvaluator(c, a);
  const bench::RunRecord run = bench::RunVqa(loaded, *stack.evaluator, RunOptionsOf(c, a));
  const bench::VqaReport report = bench::ComputeVqaAccuracy(run);
  EnsureDir(c.out_dir);
  bench::WriteTextFile(c.out_dir / "run.json", bench::RunRecordToJson(run).dump(2) + "\n");
  bench::WriteTextFile(c.out_dir / "report.csv", bench::VqaCsv(report));
  bench::WriteTextFile(c.out_dir / "report.txt", bench::VqaText(report));
  out << bench::VqaRow(report) << "\n";
  return kExitOk;
}

int CmdQc(const CliConfig& c, const BenchArgs& a, std::ostream& out) {
  const bench::Benchmark loaded = bench::LoadBenchmark(DataRoot(c, a.data));
  bench::QcOptions options;
  options.agreement_threshold = a.threshold;
  options.min_reliable = a.min_reliable;
  const bench::QcResult qc = bench::QcFilter(loaded, options);
  EnsureDir(c.out_dir);
  bench::WriteTextFile(c.out_dir / "qc.json", bench::QcReportToJson(qc.report).dump(2) + "\n");
  out << "reliable tasks: " << qc.report.kept_tasks << " of " << loaded.tasks.size() << "\n";
  out << "initiatives kept: " << qc.benchmark.initiatives.size() << " of "
      << loaded.initiatives.size() << "\n";
  for (const std::string& id : qc.report.dropped_initiatives) out << "dropped: " << id << "\n";
  out << "light kappa: "
      << (qc.report.light_kappa ? Num(*qc.report.light_kappa) : std::string("undefined")) << "\n";
  return kExitOk;
}

struct StatsArgs {
  std::string input;
  bool pooled = false, regularize = false;
};

int CmdStats(const std::string& which, const CliConfig& c, const StatsArgs& a,
             std::ostream& out) {
  const fs::path path = a.input;
  const std::vector<nlohmann::json> records = ReadJsonl(path);
  if (which == "krcc") {
    std::map<std::string, int> evaluator, human;
    std::map<std::string, std::string> grouping;
    for (const auto& r : records) {
      const std::string id = StringField(path, r, "task_id");
      grouping[id] = StringField(path, r, "prompt_id");
      evaluator[id] = JudgementValue(path, r, "evaluator");
      human[id] = JudgementValue(path, r, "human");
    }
    const auto s = stats::PerPromptKrcc(evaluator, human, grouping, a.pooled);
    out << "krcc: " << Num(s.mean_tau) << "\n"
        << "prompts_used: " << s.prompts_used << "\n"
        << "prompts_excluded: " << s.prompts_excluded << "\n";
  } else if (which == "srcc" || which == "ccc") {
    std::vector<double> x, y;
    for (const auto& r : records) {
      x.push_back(NumberField(path, r, "x"));
      y.push_back(NumberField(path, r, "y"));
    }
    const double value = which == "srcc" ? stats::SpearmanRho(x, y) : stats::LinCcc(x, y);
    out << which << ": " << Num(value) << "\n";
  } else if (which == "elo") {
    std::vector<stats::PairOutcome> outcomes;
    for (const auto& r : records) {
      stats::PairOutcome o;
      o.model_i = StringField(path, r, "model_i");
      o.model_j = StringField(path, r, "model_j");
      const std::string w = StringField(path, r, "winner");
      if (w == "i" || w == o.model_i) {
        o.winner = stats::PairOutcome::Winner::kI;
      } else if (w == "j" || w == o.model_j) {
        o.winner = stats::PairOutcome::Winner::kJ;
      } else {
        BadRecord(path, r, "winner must be i, j or one of the two model ids");
      }
      if (r.contains("prompt_id") && r["prompt_id"].is_string()) {
        o.prompt_id = r["prompt_id"].get<std::string>();
      }
      outcomes.push_back(std::move(o));
    }
    stats::FitOptions options;
    options.regularize = a.regularize;
    const stats::RatingTable table = stats::FitRatings(outcomes, options);
    double sum = 0.0;
    for (const auto& [model, rating] : table.ratings) {
      out << model << ": " << Num(rating, 3) << "\n";
      sum += rating;
    }
    out << "mean: " << Num(sum / static_cast<double>(table.ratings.size()), 3) << "\n";
    if (table.regularized) out << "regularized: virtual half-win/half-loss per pair\n";
  } else if (which == "kappa") {
    std::vector<std::string> x, y;
    for (const auto& r : records) {
      if (!r.contains("a") || !r.contains("b")) BadRecord(path, r, "needs labels a and b");
      x.push_back(r["a"].is_string() ? r["a"].get<std::string>() : r["a"].dump());
      y.push_back(r["b"].is_string() ? r["b"].get<std::string>() : r["b"].dump());
    }
    out << "kappa: " << Num(stats::CohenKappa(x, y)) << "\n"
        << "n: " << x.size() << "\n";
  } else if (which == "bias") {
    std::vector<double> ni;
    std::vector<int> aligned;
    for (const auto& r : records) {
      ni.push_back(NumberField(path, r, "ni"));
      const double l = NumberField(path, r, "aligned");
      if (l != 0.0 && l != 1.0) BadRecord(path, r, "aligned must be 0 or 1");
      aligned.push_back(static_cast<int>(l));
    }
    const std::size_t n1 = std::count(aligned.begin(), aligned.end(), 1);
    if (ni.empty() || n1 == ni.size() || n1 == 0) {
      out << "undefined: " << (n1 == 0 ? "aligned" : "misaligned") << " subset empty\n";
      return kExitOk;
    }
    stats::BiasTestOptions options;
    options.n_perm = c.n_perm;
    options.n_boot = c.n_boot;
    options.alpha = c.alpha;
    options.seed = c.seed;
    const stats::BiasTestResult b = stats::RunBiasTest(ni, aligned, options);
    out << "delta: " << Num(b.delta) << stats::SignificanceStars(b.p_value) << "\n"
        << "p_value: " << Num(b.p_value) << "\n"
        << "ci_lower: " << Num(b.ci_lower) << "\n"
        << "cohens_d: " << (b.cohens_d ? Num(*b.cohens_d) : std::string("undefined")) << "\n"
        << "n_aligned: " << b.n_aligned << "\n"
        << "n_misaligned: " << b.n_misaligned << "\n";
  }
  return kExitOk;
}

struct ExportArgs {
  std::string input, side = "artifact";
};

core::Hsg ParseForExport(const nlohmann::json& doc, bool prompt_side,
                         core::Complexity complexity) {
  nlohmann::json clean = doc;
  clean.erase("side");
  const std::string text = clean.dump();
  const codec::HsgParseOptions options{complexity, std::nullopt};
  auto parsed = prompt_side ? codec::ParsePromptHsg(text, options)
                            : codec::ParseArtifactHsg(text, options);
  if (!parsed.ok()) {
    throw Error(ErrorCode::kSchema, "HSG does not validate:\n" +
                                        codec::FormatHints(parsed.violations));
  }
  return *parsed.value;
}

int CmdExportHsg(const CliConfig& c, const ExportArgs& a, std::ostream& out) {
  std::ifstream in(a.input);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read " + a.input);
  const nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::kSchema, a.input + " is not valid JSON");
  EnsureDir(c.out_dir);
  const nlohmann::json* output = doc.contains("output") ? &doc["output"] : &doc;
  if (output->is_object() && output->contains("cascade_a")) {
    // Judge output: complexity is not recorded, so accept the larger bound.
    for (const char* tag : {"a", "b"}) {
      const auto& stages = (*output)[std::string("cascade_") + tag]["stages"];
      if (!stages.is_array() || stages.size() != 2) {
        throw Error(ErrorCode::kSchema, "cascade_" + std::string(tag) + " needs 2 stages");
      }
      if (std::string(tag) == "a") {
        codec::DotOptions dot;
        dot.graph_name = "hsg_prompt";
        bench::WriteTextFile(c.out_dir / "hsg_prompt.dot",
                             codec::ExportDot(ParseForExport(stages[0], true, core::Complexity::kComplex), dot));
        out << (c.out_dir / "hsg_prompt.dot").string() << "\n";
      }
      codec::DotOptions dot;
      dot.graph_name = std::string("hsg_") + tag;
      const fs::path target = c.out_dir / (std::string("hsg_") + tag + ".dot");
      bench::WriteTextFile(target, codec::ExportDot(ParseForExport(stages[1], false, core::Complexity::kComplex), dot));
      out << target.string() << "\n";
    }
    return kExitOk;
  }
  const bool prompt_side = a.side == "prompt";
  codec::DotOptions dot;
  dot.graph_name = fs::path(a.input).stem().string();
  const fs::path target = c.out_dir / (fs::path(a.input).stem().string() + ".dot");
  bench::WriteTextFile(target, codec::ExportDot(ParseForExport(doc, prompt_side, c.judge.complexity), dot));
  out << target.string() << "\n";
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kConfig:
      return kExitConfig;
    case ErrorCode::kTransport:
    case ErrorCode::kRepairExhausted:
      return kExitBackend;
    case ErrorCode::kSideMismatch:
    case ErrorCode::kInvalidHsg:
    case ErrorCode::kSchema:
    case ErrorCode::kData:
    case ErrorCode::kUndefined:
      return kExitData;
  }
  return kExitData;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  CLI::App app{"Semiotic judging and benchmarking for text-to-image evaluation", "semjudge"};
  app.fallthrough();
  app.require_subcommand(1);

  Flags f;
  Options o;
  o.config = app.add_option("--config", f.config, "JSON config file");
  o.backend = app.add_option("--backend", f.backend, "Backend endpoint URL");
  o.model = app.add_option("--model", f.model, "Backend model id");
  o.mock = app.add_option("--mock", f.mock, "Scripted mock backend file");
  o.cache = app.add_option("--cache", f.cache, "Response cache directory");
  o.out = app.add_option("--out", f.out, "Output directory");
  o.seed = app.add_option("--seed", f.seed, "Random seed");
  o.parallel = app.add_option("--parallel", f.parallel, "Concurrent evaluations")
                   ->check(CLI::PositiveNumber);
  o.repetitions = app.add_option("--repetitions", f.repetitions, "Runs per task (default 3)")
                      ->check(CLI::PositiveNumber);
  o.complexity = app.add_option("--complexity", f.complexity, "HSG size: standard|complex")
                     ->check(CLI::IsMember({"standard", "complex"}, CLI::ignore_case));
  o.n_perm = app.add_option("--n-perm", f.n_perm, "Permutations for the bias test")
                 ->check(CLI::PositiveNumber);
  o.n_boot = app.add_option("--n-boot", f.n_boot, "Bootstrap resamples for the bias test")
                 ->check(CLI::PositiveNumber);
  o.alpha = app.add_option("--alpha", f.alpha, "One-sided interval level (default 0.05)");
  o.max_repairs = app.add_option("--max-repairs", f.max_repairs, "JSON repair attempts per stage");
  o.temperature = app.add_option("--temperature", f.temperature, "Sampling temperature");
  o.aggregation = app.add_option("--aggregation", f.aggregation,
                                 "Combine repetitions: majority|first (default majority)")
                      ->check(CLI::IsMember({"majority", "first"}));

  JudgeArgs judge_args;
  auto* judge_cmd = app.add_subcommand("judge", "Judge one image pair against a prompt");
  judge_cmd->add_option("--prompt", judge_args.prompt, "Prompt text")->required();
  judge_cmd->add_option("--image-a", judge_args.image_a, "First image")->required();
  judge_cmd->add_option("--image-b", judge_args.image_b, "Second image")->required();
  judge_cmd->add_option("--prompt-image", judge_args.prompt_image, "Optional prompt image");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark protocol");
  bench_cmd->require_subcommand(1);
  auto add_bench_options = [&](CLI::App* cmd) {
    cmd->add_option("--data", bench_args.data, "Benchmark root directory");
    cmd->add_option("--evaluator", bench_args.evaluator,
                    "semjudge|oracle|random|import|baseline (default semjudge)");
    cmd->add_option("--verdicts", bench_args.verdicts, "Verdict JSONL for --evaluator import");
    cmd->add_option("--vectors", bench_args.vectors, "Ground vector JSONL for --evaluator baseline");
    cmd->add_option("--baseline-mode", bench_args.baseline_mode, "conditioned|free")
        ->check(CLI::IsMember({"conditioned", "free"}));
    cmd->add_option("--prior-id", bench_args.prior_id, "Vector id of the ground prior");
    cmd->add_option("--distance", bench_args.distance, "cosine|euclidean");
    cmd->add_flag("--timestamps", bench_args.timestamps, "Record wall-clock times in run.json");
  };
  auto* bench_2afc = bench_cmd->add_subcommand("2afc", "Pairwise preference benchmark");
  add_bench_options(bench_2afc);
  bench_2afc->add_flag("--pooled-krcc", bench_args.pooled, "Pool KRCC over all prompts");
  bench_2afc->add_option("--threshold", bench_args.threshold, "QC agreement threshold");
  bench_2afc->add_option("--min-reliable", bench_args.min_reliable,
                         "QC minimum reliable tasks per initiative");
  auto* bench_vqa = bench_cmd->add_subcommand("vqa", "Multiple-choice interpretation benchmark");
  add_bench_options(bench_vqa);
  bench_vqa->add_flag("--hsg-assisted", bench_args.hsg_assisted,
                      "Build an artifact HSG before answering");

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "Statistics on imported data");
  stats_cmd->require_subcommand(1);
  std::map<std::string, CLI::App*> stats_subs;
  for (const char* name : {"krcc", "srcc", "ccc", "elo", "kappa", "bias"}) {
    auto* sub = stats_cmd->add_subcommand(name, std::string("Compute ") + name);
    sub->add_option("--input", stats_args.input, "Input JSONL")->required();
    stats_subs[name] = sub;
  }
  stats_subs["krcc"]->add_flag("--pooled", stats_args.pooled, "Pool over all prompts");
  stats_subs["elo"]->add_flag("--regularize", stats_args.regularize,
                              "Add a virtual half-win/half-loss per pair");

  auto* qc_cmd = app.add_subcommand("qc", "Apply annotation quality control");
  qc_cmd->add_option("--data", bench_args.data, "Benchmark root directory");
  qc_cmd->add_option("--threshold", bench_args.threshold, "Agreement threshold (default 0.60)");
  qc_cmd->add_option("--min-reliable", bench_args.min_reliable,
                     "Minimum reliable tasks per initiative (default 4)");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export-hsg", "Export HSGs as Graphviz DOT");
  export_cmd->add_option("--input", export_args.input, "HSG JSON or judge_output.json")->required();
  export_cmd->add_option("--side", export_args.side, "prompt|artifact for a bare HSG")
      ->check(CLI::IsMember({"prompt", "artifact"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const CliConfig config = Resolve(f, o, env);
    if (judge_cmd->parsed()) return CmdJudge(config, judge_args, out);
    if (bench_2afc->parsed()) return CmdBench2afc(config, bench_args, out);
    if (bench_vqa->parsed()) return CmdBenchVqa(config, bench_args, out);
    if (qc_cmd->parsed()) return CmdQc(config, bench_args, out);
    if (export_cmd->parsed()) return CmdExportHsg(config, export_args, out);
    for (const auto& [name, sub] : stats_subs) {
      if (sub->parsed()) return CmdStats(name, config, stats_args, out);
    }
  } catch (const bench::BenchmarkLoadError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}

}  // namespace semjudge::cli
