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

#include "semjudge/stats/ratings.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace semjudge::stats {
namespace {

using Matrix = std::vector<std::vector<double>>;

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

// Tarjan's algorithm over the "beat" relation (edge i -> j when i won at
// least once against j). Returns the component index of each vertex.
std::vector<std::size_t> StrongComponents(const Matrix& wins,
                                          std::size_t* count) {
  const std::size_t n = wins.size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  *count = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (wins[v][w] <= 0.0) continue;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = *count;
      } while (w != v);
      ++*count;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == SIZE_MAX) visit(v);
  }
  return comp;
}

void CheckConnected(const std::vector<std::string>& ids, const Matrix& wins) {
  const std::size_t n = ids.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (wins[i][j] > 0.0) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::string>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(ids[i]);
  if (by_root.size() <= 1) return;

  std::vector<std::vector<std::string>> groups;
  for (auto& [root, members] : by_root) groups.push_back(std::move(members));
  std::sort(groups.begin(), groups.end());
  std::string message = "comparison graph is disconnected:";
  for (const auto& g : groups) message += " {" + JoinIds(g) + "}";
  throw RatingFitError(RatingFitError::Kind::kDisconnected, std::move(groups),
                       message);
}

// With a connected graph the MLE is finite iff the beat relation is
// strongly connected. Otherwise some component only wins (or only loses)
// against the rest; report one that only wins, preferring the first by id.
void CheckStronglyConnected(const std::vector<std::string>& ids,
                            const Matrix& wins) {
  std::size_t count = 0;
  const std::vector<std::size_t> comp = StrongComponents(wins, &count);
  if (count <= 1) return;

  const std::size_t n = ids.size();
  std::vector<bool> has_incoming(count, false), has_outgoing(count, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (wins[i][j] > 0.0 && comp[i] != comp[j]) {
        has_outgoing[comp[i]] = true;
        has_incoming[comp[j]] = true;
      }
    }
  }
  std::size_t chosen = SIZE_MAX;
  bool only_wins = true;
  for (std::size_t i = 0; i < n && chosen == SIZE_MAX; ++i) {
    if (!has_incoming[comp[i]]) chosen = comp[i];
  }
  if (chosen == SIZE_MAX) {
    only_wins = false;
    for (std::size_t i = 0; i < n && chosen == SIZE_MAX; ++i) {
      if (!has_outgoing[comp[i]]) chosen = comp[i];
    }
  }
  std::vector<std::string> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] == chosen) members.push_back(ids[i]);
  }
  const std::string message =
      "maximum-likelihood ratings diverge: {" + JoinIds(members) + "} " +
      (only_wins ? "never lost" : "never won") +
      " against the rest of the comparison graph; refit with regularization";
  throw RatingFitError(RatingFitError::Kind::kDivergent, {members}, message);
}

}  // namespace

RatingTable FitRatings(const std::vector<PairOutcome>& outcomes,
                       const FitOptions& options) {
  if (outcomes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "fit_ratings: no outcomes");
  }
  std::vector<std::string> ids;
  for (const auto& o : outcomes) {
    if (o.model_i == o.model_j) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fit_ratings: model compared with itself: " + o.model_i);
    }
    ids.push_back(o.model_i);
    ids.push_back(o.model_j);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const std::size_t n = ids.size();
  auto position = [&](const std::string& id) {
    return static_cast<std::size_t>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  // wins[i][j]: number of times i beat j. Counts are integers (or halves),
  // so the aggregate is exact and independent of outcome order.
  Matrix wins(n, std::vector<double>(n, 0.0));
  for (const auto& o : outcomes) {
    const std::size_t i = position(o.model_i);
    const std::size_t j = position(o.model_j);
    if (o.winner == PairOutcome::Winner::kI) {
      wins[i][j] += 1.0;
    } else {
      wins[j][i] += 1.0;
    }
  }
  if (options.regularize) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) wins[i][j] += 0.5;
      }
    }
  }
  CheckConnected(ids, wins);
  CheckStronglyConnected(ids, wins);

  std::vector<double> total_wins(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    total_wins[i] = std::accumulate(wins[i].begin(), wins[i].end(), 0.0);
  }

  std::vector<double> gamma(n, 1.0), next(n, 0.0);
  RatingTable table;
  table.regularized = options.regularize;
  bool converged = false;
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double denom = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double games = wins[i][j] + wins[j][i];
        if (j != i && games > 0.0) denom += games / (gamma[i] + gamma[j]);
      }
      next[i] = total_wins[i] / denom;
    }
    // Normalize to unit geometric mean to keep the iteration well scaled.
    double log_mean = 0.0;
    for (double g : next) log_mean += std::log(g);
    log_mean /= static_cast<double>(n);
    const double scale = std::exp(-log_mean);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] *= scale;
      change = std::max(change, std::abs(std::log(next[i] / gamma[i])));
    }
    std::swap(gamma, next);
    table.iterations = iter;
    if (change <= options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kUndefined,
                "fit_ratings: did not converge within " +
                    std::to_string(options.max_iterations) + " iterations");
  }

  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) theta[i] = std::log(gamma[i]);
  const double mean_theta =
      std::accumulate(theta.begin(), theta.end(), 0.0) / static_cast<double>(n);
  const double scale = 400.0 / std::numbers::ln10;
  for (std::size_t i = 0; i < n; ++i) {
    table.ratings[ids[i]] = 1500.0 + scale * (theta[i] - mean_theta);
  }
  return table;
}

double WinProbability(double r_i, double r_j) {
  return 1.0 / (1.0 + std::pow(10.0, (r_j - r_i) / 400.0));
}

}  // namespace semjudge::stats
