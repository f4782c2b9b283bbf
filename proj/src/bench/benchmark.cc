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

#include "semjudge/bench/benchmark.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>

#include "semjudge/stats/agreement.h"

namespace semjudge::bench {
namespace {

namespace fs = std::filesystem;

class Loader {
 public:
  explicit Loader(fs::path root) : root_(std::move(root)) {}

  void Report(const std::string& file, std::size_t line, std::string field,
              std::string rule, std::string message) {
    diagnostics_.push_back(
        {file, line, std::move(field), std::move(rule), std::move(message)});
  }

  // Calls `fn(doc, line)` for every non-blank line that parses as an object.
  void ForEachRecord(const std::string& name,
                     const std::function<void(const nlohmann::json&,
                                              std::size_t)>& fn) {
    std::ifstream in(root_ / name);
    if (!in) {
      throw Error(ErrorCode::kConfig,
                  "cannot read " + (root_ / name).string());
    }
    std::string text;
    for (std::size_t line = 1; std::getline(in, text); ++line) {
      if (core::Trim(text).empty()) continue;
      const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
      if (doc.is_discarded()) {
        Report(name, line, "", "json", "line is not valid JSON");
        continue;
      }
      if (!doc.is_object()) {
        Report(name, line, "", "wrong-type", "record must be a JSON object");
        continue;
      }
      fn(doc, line);
    }
  }

  std::optional<std::string> String(const nlohmann::json& doc,
                                    const std::string& file, std::size_t line,
                                    const std::string& field, bool required) {
    auto it = doc.find(field);
    if (it == doc.end() || it->is_null()) {
      if (required) Report(file, line, field, "missing-field", field + " is required");
      return std::nullopt;
    }
    if (!it->is_string() || core::Trim(it->get<std::string>()).empty()) {
      Report(file, line, field, "wrong-type", field + " must be a non-empty string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  std::optional<core::Choice2> Choice(const nlohmann::json& value,
                                      const std::string& file, std::size_t line,
                                      const std::string& field) {
    if (value.is_string()) {
      if (value == "A") return core::Choice2::kA;
      if (value == "B") return core::Choice2::kB;
    }
    Report(file, line, field, "choice-value", field + " must be \"A\" or \"B\"");
    return std::nullopt;
  }

  const fs::path& root() const { return root_; }
  std::vector<Diagnostic>& diagnostics() { return diagnostics_; }

 private:
  fs::path root_;
  std::vector<Diagnostic> diagnostics_;
};

void LoadInitiatives(Loader& loader, Benchmark& bench) {
  const std::string file = "initiatives.jsonl";
  std::set<std::string> seen;
  loader.ForEachRecord(file, [&](const nlohmann::json& doc, std::size_t line) {
    Initiative init;
    auto id = loader.String(doc, file, line, "initiative_id", true);
    auto prompt = loader.String(doc, file, line, "prompt_text", true);
    auto tradition = loader.String(doc, file, line, "tradition", false);
    auto prompt_image = loader.String(doc, file, line, "prompt_image", false);
    if (!id || !prompt) return;
    if (!seen.insert(*id).second) {
      loader.Report(file, line, "initiative_id", "duplicate-id",
                    "initiative " + *id + " is defined twice");
      return;
    }
    init.initiative_id = *id;
    init.prompt_text = *prompt;
    init.tradition = tradition.value_or("");
    if (prompt_image) {
      const fs::path path = loader.root() / "images" / *prompt_image;
      if (!fs::is_regular_file(path)) {
        loader.Report(file, line, "prompt_image", "missing-file",
                      "prompt image not found: " + path.string());
      }
      init.prompt_image = path;
    }
    auto images = doc.find("images");
    if (images == doc.end() || !images->is_array()) {
      loader.Report(file, line, "images", "wrong-type", "images must be an array");
      return;
    }
    if (images->size() < 2) {
      loader.Report(file, line, "images", "too-few-images",
                    "an initiative needs at least 2 images");
    }
    std::set<std::string> image_ids, model_ids;
    for (std::size_t i = 0; i < images->size(); ++i) {
      const auto& entry = (*images)[i];
      const std::string field = "images[" + std::to_string(i) + "]";
      if (!entry.is_object()) {
        loader.Report(file, line, field, "wrong-type", field + " must be an object");
        continue;
      }
      auto text = [&](const char* key) -> std::optional<std::string> {
        auto v = entry.find(key);
        if (v == entry.end() || !v->is_string() || v->get<std::string>().empty()) {
          return std::nullopt;
        }
        return v->get<std::string>();
      };
      const auto image_id = text("image_id");
      const auto model_id = text("model_id");
      const auto path = text("file");
      if (!image_id || !model_id || !path) {
        loader.Report(file, line, field, "missing-field",
                      field + " needs string image_id, model_id and file");
        continue;
      }
      if (!image_ids.insert(*image_id).second) {
        loader.Report(file, line, field + ".image_id", "duplicate-id",
                      "image " + *image_id + " appears twice in " + *id);
      }
      if (!model_ids.insert(*model_id).second) {
        loader.Report(file, line, field + ".model_id", "duplicate-model",
                      "model " + *model_id + " appears twice in " + *id);
      }
      const fs::path full = loader.root() / "images" / *path;
      if (!fs::is_regular_file(full)) {
        loader.Report(file, line, field + ".file", "missing-file",
                      "image file not found: " + full.string());
      }
      init.images.push_back({*image_id, *model_id, full});
    }
    bench.initiatives.push_back(std::move(init));
  });
}

void LoadTasks(Loader& loader, Benchmark& bench) {
  const std::string file = "tasks_2afc.jsonl";
  std::set<std::string> seen;
  loader.ForEachRecord(file, [&](const nlohmann::json& doc, std::size_t line) {
    auto id = loader.String(doc, file, line, "task_id", true);
    auto init_id = loader.String(doc, file, line, "initiative_id", true);
    auto a = loader.String(doc, file, line, "image_a", true);
    auto b = loader.String(doc, file, line, "image_b", true);
    if (!id || !init_id || !a || !b) return;
    if (!seen.insert(*id).second) {
      loader.Report(file, line, "task_id", "duplicate-id",
                    "task " + *id + " is defined twice");
      return;
    }
    const Initiative* init = bench.FindInitiative(*init_id);
    if (init == nullptr) {
      loader.Report(file, line, "initiative_id", "unknown-initiative",
                    "unknown initiative " + *init_id);
      return;
    }
    bool ok = true;
    for (const auto& [field, image] : {std::pair{"image_a", *a}, {"image_b", *b}}) {
      if (init->FindImage(image) == nullptr) {
        loader.Report(file, line, field, "unknown-image",
                      "image " + image + " is not part of " + *init_id);
        ok = false;
      }
    }
    if (*a == *b) {
      loader.Report(file, line, "image_b", "same-image",
                    "image_a and image_b must differ");
      ok = false;
    }
    Task2afc task{*id, *init_id, *a, *b, {}, std::nullopt, false};
    if (auto votes = doc.find("human_votes"); votes != doc.end()) {
      if (!votes->is_array() || votes->empty()) {
        loader.Report(file, line, "human_votes", "no-votes",
                      "human_votes must be a non-empty array when present");
        ok = false;
      } else {
        for (std::size_t i = 0; i < votes->size(); ++i) {
          const auto& v = (*votes)[i];
          const std::string field = "human_votes[" + std::to_string(i) + "]";
          if (!v.is_object() || !v.contains("annotator_id") ||
              !v["annotator_id"].is_string() || !v.contains("choice")) {
            loader.Report(file, line, field, "wrong-type",
                          field + " needs annotator_id and choice");
            ok = false;
            continue;
          }
          auto choice = loader.Choice(v["choice"], file, line, field + ".choice");
          if (!choice) {
            ok = false;
            continue;
          }
          task.human_votes.push_back({v["annotator_id"].get<std::string>(), *choice});
        }
      }
    }
    if (auto expert = doc.find("expert_majority");
        expert != doc.end() && !expert->is_null()) {
      task.expert_majority = loader.Choice(*expert, file, line, "expert_majority");
      ok = ok && task.expert_majority.has_value();
    }
    if (ok) bench.tasks.push_back(std::move(task));
  });
}

void LoadVqa(Loader& loader, Benchmark& bench) {
  const std::string file = "vqa.jsonl";
  std::set<std::string> seen;
  loader.ForEachRecord(file, [&](const nlohmann::json& doc, std::size_t line) {
    auto id = loader.String(doc, file, line, "question_id", true);
    auto init_id = loader.String(doc, file, line, "initiative_id", true);
    auto stem = loader.String(doc, file, line, "stem", true);
    if (!id || !init_id || !stem) return;
    if (!seen.insert(*id).second) {
      loader.Report(file, line, "question_id", "duplicate-id",
                    "question " + *id + " is defined twice");
      return;
    }
    const Initiative* init = bench.FindInitiative(*init_id);
    if (init == nullptr) {
      loader.Report(file, line, "initiative_id", "unknown-initiative",
                    "unknown initiative " + *init_id);
      return;
    }
    VqaItem item;
    item.question_id = *id;
    item.initiative_id = *init_id;
    item.stem = *stem;
    bool ok = true;
    auto ids = doc.find("image_ids");
    if (ids == doc.end() || !ids->is_array() || ids->empty() || ids->size() > 2) {
      loader.Report(file, line, "image_ids", "image-count",
                    "image_ids must list 1 or 2 images");
      ok = false;
    } else {
      for (const auto& image : *ids) {
        if (!image.is_string() || init->FindImage(image.get<std::string>()) == nullptr) {
          loader.Report(file, line, "image_ids", "unknown-image",
                        "image_ids names an image outside " + *init_id);
          ok = false;
          break;
        }
        item.image_ids.push_back(image.get<std::string>());
      }
    }
    auto choices = doc.find("choices");
    static constexpr const char* kLetters[] = {"A", "B", "C", "D"};
    bool choices_ok = choices != doc.end() && choices->size() == 4 &&
                      (choices->is_array() || choices->is_object());
    for (std::size_t i = 0; choices_ok && i < 4; ++i) {
      const nlohmann::json* c = nullptr;
      if (choices->is_array()) {
        c = &(*choices)[i];
      } else if (auto found = choices->find(kLetters[i]); found != choices->end()) {
        c = &*found;
      }
      if (c == nullptr || !c->is_string()) {
        choices_ok = false;
      } else {
        item.choices[i] = c->get<std::string>();
      }
    }
    if (!choices_ok) {
      loader.Report(file, line, "choices", "choice-count",
                    "choices must hold exactly A, B, C and D");
      ok = false;
    }
    auto answer = doc.find("answer");
    std::optional<codec::VqaChoice> key;
    if (answer != doc.end() && answer->is_string()) {
      key = codec::VqaChoiceFromString(answer->get<std::string>());
    }
    if (!key) {
      loader.Report(file, line, "answer", "answer-key", "answer must be A, B, C or D");
      ok = false;
    } else {
      item.answer = *key;
    }
    if (auto boxes = doc.find("bboxes"); boxes != doc.end()) item.bboxes = *boxes;
    if (ok) bench.vqa.push_back(std::move(item));
  });
}

void LoadProfiles(Loader& loader, Benchmark& bench) {
  const std::string file = "profiles.jsonl";
  loader.ForEachRecord(file, [&](const nlohmann::json& doc, std::size_t line) {
    auto init_id = loader.String(doc, file, line, "initiative_id", true);
    auto image_id = loader.String(doc, file, line, "image_id", false);
    if (!init_id) return;
    auto it = std::find_if(bench.initiatives.begin(), bench.initiatives.end(),
                           [&](const Initiative& i) { return i.initiative_id == *init_id; });
    if (it == bench.initiatives.end()) {
      loader.Report(file, line, "initiative_id", "unknown-initiative",
                    "unknown initiative " + *init_id);
      return;
    }
    core::GroundProfile profile;
    for (const auto& [key, slot] :
         {std::pair<const char*, double*>{"icn", &profile.icn},
          {"idx", &profile.idx}, {"sym", &profile.sym}}) {
      auto v = doc.find(key);
      if (v == doc.end() || !v->is_number()) {
        loader.Report(file, line, key, "missing-field", std::string(key) + " must be a number");
        return;
      }
      *slot = v->get<double>();
    }
    if (!core::IsValidProfile(profile)) {
      loader.Report(file, line, "icn", "likert-range",
                    "ground ratings must lie in [1, 7]");
      return;
    }
    if (image_id) {
      if (it->FindImage(*image_id) == nullptr) {
        loader.Report(file, line, "image_id", "unknown-image",
                      "image " + *image_id + " is not part of " + *init_id);
        return;
      }
      if (!it->image_profiles.emplace(*image_id, profile).second) {
        loader.Report(file, line, "image_id", "duplicate-profile",
                      "second profile for image " + *image_id);
      }
    } else {
      if (it->prompt_profile) {
        loader.Report(file, line, "initiative_id", "duplicate-profile",
                      "second prompt profile for " + *init_id);
      }
      it->prompt_profile = profile;
    }
  });
}

}  // namespace

const ImageRef* Initiative::FindImage(const std::string& image_id) const {
  for (const ImageRef& image : images) {
    if (image.image_id == image_id) return &image;
  }
  return nullptr;
}

const Initiative* Benchmark::FindInitiative(const std::string& id) const {
  auto it = std::lower_bound(
      initiatives.begin(), initiatives.end(), id,
      [](const Initiative& i, const std::string& key) { return i.initiative_id < key; });
  return it != initiatives.end() && it->initiative_id == id ? &*it : nullptr;
}

std::string FormatDiagnostic(const Diagnostic& d) {
  std::string out = d.file;
  if (d.line > 0) out += ":" + std::to_string(d.line);
  if (!d.field.empty()) out += ": " + d.field;
  out += ": " + d.message + " [" + d.rule + "]";
  return out;
}

BenchmarkLoadError::BenchmarkLoadError(std::vector<Diagnostic> diagnostics)
    : Error(ErrorCode::kData,
            [&] {
              std::string message = "benchmark failed validation with " +
                                    std::to_string(diagnostics.size()) +
                                    " problem(s):";
              for (const Diagnostic& d : diagnostics) {
                message += "\n  " + FormatDiagnostic(d);
              }
              return message;
            }()),
      diagnostics_(std::move(diagnostics)) {}

Benchmark LoadBenchmark(const fs::path& root) {
  if (!fs::is_directory(root)) {
    throw Error(ErrorCode::kConfig, "benchmark root is not a directory: " + root.string());
  }
  Benchmark bench;
  bench.root = root;
  Loader loader(root);
  LoadInitiatives(loader, bench);
  std::sort(bench.initiatives.begin(), bench.initiatives.end(),
            [](const Initiative& a, const Initiative& b) {
              return a.initiative_id < b.initiative_id;
            });
  if (fs::exists(root / "tasks_2afc.jsonl")) {
    LoadTasks(loader, bench);
  } else {
    bench.tasks_enumerated = true;
    for (const Initiative& init : bench.initiatives) {
      std::vector<std::string> ids;
      for (const ImageRef& image : init.images) ids.push_back(image.image_id);
      for (const auto& [a, b] : EnumeratePairs(ids)) {
        bench.tasks.push_back({init.initiative_id + "__" + a + "__" + b,
                               init.initiative_id, a, b, {}, std::nullopt, false});
      }
    }
  }
  if (fs::exists(root / "vqa.jsonl")) LoadVqa(loader, bench);
  if (fs::exists(root / "profiles.jsonl")) {
    bench.has_profiles = true;
    LoadProfiles(loader, bench);
  }
  if (!loader.diagnostics().empty()) {
    throw BenchmarkLoadError(std::move(loader.diagnostics()));
  }
  std::sort(bench.tasks.begin(), bench.tasks.end(),
            [](const Task2afc& a, const Task2afc& b) { return a.task_id < b.task_id; });
  std::sort(bench.vqa.begin(), bench.vqa.end(),
            [](const VqaItem& a, const VqaItem& b) { return a.question_id < b.question_id; });
  return bench;
}

std::vector<std::pair<std::string, std::string>> EnumeratePairs(
    const std::vector<std::string>& image_ids) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < image_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < image_ids.size(); ++j) {
      pairs.emplace_back(image_ids[i], image_ids[j]);
    }
  }
  return pairs;
}

std::optional<core::Choice2> HumanReference(const Task2afc& task) {
  if (task.expert_majority) return task.expert_majority;
  if (task.human_votes.empty()) return std::nullopt;
  std::vector<core::Choice2> votes;
  for (const Vote& v : task.human_votes) votes.push_back(v.choice);
  return stats::MajorityVote(votes).winner;
}

}  // namespace semjudge::bench
