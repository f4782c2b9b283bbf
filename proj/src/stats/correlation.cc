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

#include "semjudge/stats/correlation.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

#include "semjudge/error.h"

namespace semjudge::stats {
namespace {

void CheckPaired(std::span<const double> x, std::span<const double> y,
                 const char* what) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": inputs differ in length");
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": need at least 2 observations");
  }
}

// Sum over runs of equal values of t(t-1)/2. `values` must be sorted.
template <typename It, typename Eq>
std::int64_t TiedPairs(It first, It last, Eq eq) {
  std::int64_t total = 0;
  while (first != last) {
    It run_end = std::next(first);
    while (run_end != last && eq(*first, *run_end)) ++run_end;
    const auto t = static_cast<std::int64_t>(std::distance(first, run_end));
    total += t * (t - 1) / 2;
    first = run_end;
  }
  return total;
}

// Stable merge sort on y, returning the number of inversions (swaps).
std::int64_t SortCountingSwaps(std::vector<double>& v) {
  std::vector<double> buffer(v.size());
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
          buffer[k++] = v[i++];
        } else {
          swaps += static_cast<std::int64_t>(mid - i);
          buffer[k++] = v[j++];
        }
      }
      while (i < mid) buffer[k++] = v[i++];
      while (j < hi) buffer[k++] = v[j++];
    }
    std::swap(v, buffer);
  }
  return swaps;
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kUndefined,
                "correlation undefined: zero rank variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace

double KendallTauB(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y, "kendall_tau_b");
  const std::size_t n = x.size();
  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {x[i], y[i]};
  std::sort(pairs.begin(), pairs.end());

  const std::int64_t n0 = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t ties_x = TiedPairs(
      pairs.begin(), pairs.end(),
      [](const auto& a, const auto& b) { return a.first == b.first; });
  const std::int64_t ties_xy =
      TiedPairs(pairs.begin(), pairs.end(),
                [](const auto& a, const auto& b) { return a == b; });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = pairs[i].second;
  const std::int64_t swaps = SortCountingSwaps(ys);
  const std::int64_t ties_y = TiedPairs(
      ys.begin(), ys.end(), [](double a, double b) { return a == b; });

  if (ties_x == n0 || ties_y == n0) {
    throw Error(ErrorCode::kUndefined,
                "kendall_tau_b undefined: one side is entirely tied");
  }
  const std::int64_t numerator = n0 - ties_x - ties_y + ties_xy - 2 * swaps;
  const double denominator = std::sqrt(static_cast<double>(n0 - ties_x)) *
                             std::sqrt(static_cast<double>(n0 - ties_y));
  return std::clamp(static_cast<double>(numerator) / denominator, -1.0, 1.0);
}

std::vector<double> MidRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 (0-based) share the average 1-based rank.
    const double rank = 0.5 * static_cast<double>(i + j + 1);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double SpearmanRho(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y, "spearman_rho");
  const std::vector<double> rx = MidRanks(x);
  const std::vector<double> ry = MidRanks(y);
  return Pearson(rx, ry);
}

double LinCcc(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y, "lin_ccc");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double vx = 0.0, vy = 0.0, cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    vx += dx * dx;
    vy += dy * dy;
    cov += dx * dy;
  }
  vx /= n;
  vy /= n;
  cov /= n;
  if (vx == 0.0 && vy == 0.0) {
    throw Error(ErrorCode::kUndefined,
                "lin_ccc undefined: both inputs have zero variance");
  }
  const double shift = mx - my;
  return std::clamp(2.0 * cov / (vx + vy + shift * shift), -1.0, 1.0);
}

KrccSummary PerPromptKrcc(const std::map<std::string, int>& evaluator,
                          const std::map<std::string, int>& human,
                          const std::map<std::string, std::string>& grouping,
                          bool pooled) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
      groups;
  std::size_t overlap = 0;
  for (const auto& [task_id, human_value] : human) {
    auto e = evaluator.find(task_id);
    if (e == evaluator.end()) continue;
    auto g = grouping.find(task_id);
    if (g == grouping.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "task " + task_id + " has no prompt grouping");
    }
    auto& [h, ev] = groups[pooled ? std::string("*") : g->second];
    h.push_back(human_value);
    ev.push_back(e->second);
    ++overlap;
  }
  if (overlap == 0) {
    throw Error(ErrorCode::kUndefined,
                "krcc undefined: evaluator and human share no tasks");
  }

  KrccSummary summary;
  double total = 0.0;
  for (const auto& [prompt_id, vectors] : groups) {
    PromptTau entry{prompt_id, vectors.first.size(), std::nullopt};
    if (vectors.first.size() >= 2) {
      try {
        entry.tau = KendallTauB(vectors.first, vectors.second);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kUndefined) throw;
      }
    }
    if (entry.tau) {
      total += *entry.tau;
      ++summary.prompts_used;
    } else {
      ++summary.prompts_excluded;
    }
    summary.per_prompt.push_back(std::move(entry));
  }
  if (summary.prompts_used == 0) {
    throw Error(ErrorCode::kUndefined,
                "krcc undefined: no prompt group has a defined tau-b");
  }
  summary.mean_tau = total / static_cast<double>(summary.prompts_used);
  return summary;
}

}  // namespace semjudge::stats
