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

#include "semjudge/stats/agreement.h"

namespace semjudge::stats {

std::optional<double> LightKappa(
    const std::map<std::string, std::map<std::string, std::string>>&
        labels_by_rater) {
  double total = 0.0;
  std::size_t pairs = 0;
  for (auto i = labels_by_rater.begin(); i != labels_by_rater.end(); ++i) {
    for (auto j = std::next(i); j != labels_by_rater.end(); ++j) {
      std::vector<std::string> a, b;
      for (const auto& [item, label] : i->second) {
        auto other = j->second.find(item);
        if (other == j->second.end()) continue;
        a.push_back(label);
        b.push_back(other->second);
      }
      if (a.size() < 2) continue;
      try {
        total += CohenKappa(a, b);
        ++pairs;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kUndefined) throw;
      }
    }
  }
  if (pairs == 0) return std::nullopt;
  return total / static_cast<double>(pairs);
}

}  // namespace semjudge::stats
