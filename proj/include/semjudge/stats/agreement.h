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

#ifndef SEMJUDGE_STATS_AGREEMENT_H_
#define SEMJUDGE_STATS_AGREEMENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semjudge/error.h"

namespace semjudge::stats {

// Cohen's kappa for two raters over the same items. Labels are arbitrary
// comparable values; chance agreement uses the empirical marginals.
template <typename Label>
double CohenKappa(std::span<const Label> a, std::span<const Label> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cohen_kappa: label lists must be non-empty and equal length");
  }
  std::map<Label, long long> count_a, count_b;
  long long agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++count_a[a[i]];
    ++count_b[b[i]];
    if (a[i] == b[i]) ++agree;
  }
  // Integer form of (p_o - p_e) / (1 - p_e) scaled by n^2, which keeps
  // hand-computable tables exact.
  const long long n = static_cast<long long>(a.size());
  long long chance = 0;
  for (const auto& [label, ca] : count_a) {
    auto it = count_b.find(label);
    if (it != count_b.end()) chance += ca * it->second;
  }
  const long long denom = n * n - chance;
  if (denom == 0) {
    throw Error(ErrorCode::kUndefined,
                "cohen_kappa undefined: chance agreement is 1");
  }
  return static_cast<double>(n * agree - chance) / static_cast<double>(denom);
}

template <typename Label>
double CohenKappa(const std::vector<Label>& a, const std::vector<Label>& b) {
  return CohenKappa(std::span<const Label>(a), std::span<const Label>(b));
}

template <typename Label>
struct MajorityResult {
  std::optional<Label> winner;  // nullopt on an exact tie for the mode
  double agreement = 0.0;       // modal count / number of votes
  std::map<Label, std::size_t> counts;
};

template <typename Label>
MajorityResult<Label> MajorityVote(std::span<const Label> votes) {
  if (votes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "majority_vote: no votes");
  }
  MajorityResult<Label> result;
  for (const Label& v : votes) ++result.counts[v];
  std::size_t best = 0;
  bool tied = false;
  for (const auto& [label, c] : result.counts) {
    if (c > best) {
      best = c;
      result.winner = label;
      tied = false;
    } else if (c == best) {
      tied = true;
    }
  }
  if (tied) result.winner.reset();
  result.agreement =
      static_cast<double>(best) / static_cast<double>(votes.size());
  return result;
}

template <typename Label>
MajorityResult<Label> MajorityVote(const std::vector<Label>& votes) {
  return MajorityVote(std::span<const Label>(votes));
}

// Light's kappa: mean Cohen's kappa over rater pairs, each pair compared on
// the items both labelled. Pairs sharing fewer than 2 items or with an
// undefined kappa are skipped; nullopt when no pair remains.
std::optional<double> LightKappa(
    const std::map<std::string, std::map<std::string, std::string>>&
        labels_by_rater);

}  // namespace semjudge::stats

#endif  // SEMJUDGE_STATS_AGREEMENT_H_
