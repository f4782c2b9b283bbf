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

// Independent reference implementations for the statistics tests. They are
// written for clarity (quadratic loops, long double, Newton's method) and
// share no code with the library.

#ifndef SEMJUDGE_TESTS_ORACLES_STATS_ORACLES_H_
#define SEMJUDGE_TESTS_ORACLES_STATS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace semjudge::oracle {

inline int Sign(long double v) { return (v > 0) - (v < 0); }

// Kendall tau-b by the pair-counting definition.
inline double BruteKendallTauB(const std::vector<double>& x,
                               const std::vector<double>& y) {
  long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0, pairs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      ++pairs;
      const int sx = Sign(static_cast<long double>(x[i]) - x[j]);
      const int sy = Sign(static_cast<long double>(y[i]) - y[j]);
      if (sx == 0) ++ties_x;
      if (sy == 0) ++ties_y;
      if (sx * sy > 0) ++concordant;
      if (sx * sy < 0) ++discordant;
    }
  }
  const long double denom = std::sqrt(static_cast<long double>(pairs - ties_x)) *
                            std::sqrt(static_cast<long double>(pairs - ties_y));
  return static_cast<double>((concordant - discordant) / denom);
}

// Average rank: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<long double> BruteRanks(const std::vector<double>& v) {
  std::vector<long double> ranks(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    long double smaller = 0, equal = 0;
    for (double w : v) {
      if (w < v[i]) smaller += 1;
      if (w == v[i]) equal += 1;
    }
    ranks[i] = 1 + smaller + (equal - 1) / 2;
  }
  return ranks;
}

inline long double Pearson(const std::vector<long double>& x,
                           const std::vector<long double>& y) {
  const long double n = static_cast<long double>(x.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double BruteSpearman(const std::vector<double>& x,
                            const std::vector<double>& y) {
  return static_cast<double>(Pearson(BruteRanks(x), BruteRanks(y)));
}

// Lin's concordance with population (1/n) moments.
inline double BruteLinCcc(const std::vector<double>& x,
                          const std::vector<double>& y) {
  const long double n = static_cast<long double>(x.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  sxy /= n;
  sxx /= n;
  syy /= n;
  return static_cast<double>(2 * sxy / (sxx + syy + (mx - my) * (mx - my)));
}

// Bradley-Terry maximum likelihood by Newton's method on log-strengths with
// the first model pinned at zero. wins[i][j] counts i beating j (fractional
// wins allowed). Returns Elo-scale ratings centred on 1500.
inline std::vector<double> NewtonBradleyTerry(
    const std::vector<std::vector<double>>& wins) {
  const std::size_t k = wins.size();
  std::vector<long double> theta(k, 0.0L);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<long double> grad(k, 0.0L);
    std::vector<std::vector<long double>> hess(k, std::vector<long double>(k, 0.0L));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const long double games = wins[i][j] + wins[j][i];
        if (games == 0) continue;
        const long double p = 1.0L / (1.0L + std::exp(theta[j] - theta[i]));
        grad[i] += wins[i][j] - games * p;
        hess[i][i] -= games * p * (1 - p);
        hess[i][j] += games * p * (1 - p);
      }
    }
    // Solve hess * step = -grad on coordinates 1..k-1 (Gaussian elimination).
    const std::size_t m = k - 1;
    std::vector<std::vector<long double>> a(m, std::vector<long double>(m + 1));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) a[r][c] = hess[r + 1][c + 1];
      a[r][m] = -grad[r + 1];
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t pivot = c;
      for (std::size_t r = c + 1; r < m; ++r) {
        if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) pivot = r;
      }
      std::swap(a[c], a[pivot]);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == c) continue;
        const long double f = a[r][c] / a[c][c];
        for (std::size_t cc = c; cc <= m; ++cc) a[r][cc] -= f * a[c][cc];
      }
    }
    long double largest = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const long double step = a[r][m] / a[r][r];
      theta[r + 1] += step;
      largest = std::max(largest, std::fabs(step));
    }
    if (largest < 1e-15L) break;
  }
  long double mean = 0;
  for (long double t : theta) mean += t;
  mean /= static_cast<long double>(k);
  std::vector<double> elo(k);
  for (std::size_t i = 0; i < k; ++i) {
    elo[i] = static_cast<double>(1500.0L + 400.0L / std::log(10.0L) * (theta[i] - mean));
  }
  return elo;
}

// Exact one-sided permutation p-value of the mean difference between the
// `aligned == 1` subset and the rest: the share of all C(n, n1) relabelings
// whose subset sum is at least the observed one.
inline double ExactPermutationP(const std::vector<double>& ni,
                                const std::vector<int>& aligned) {
  const std::size_t n = ni.size();
  std::size_t n1 = 0;
  long double observed = 0, scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (aligned[i]) {
      ++n1;
      observed += ni[i];
    }
    scale += std::fabs(ni[i]);
  }
  const long double slack = 1e-10L * scale;
  std::size_t total = 0, extreme = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n1) continue;
    long double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += ni[i];
    }
    ++total;
    if (sum >= observed - slack) ++extreme;
  }
  return static_cast<double>(extreme) / static_cast<double>(total);
}

// Central interval [lo, hi] holding at least `level` of Binomial(n, p),
// computed from the exact pmf in log space.
inline std::pair<std::size_t, std::size_t> BinomialInterval(std::size_t n, double p,
                                                            double level) {
  if (p <= 0) return {0, 0};
  if (p >= 1) return {n, n};
  const double tail = (1 - level) / 2;
  std::vector<double> pmf(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    pmf[k] = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                      std::lgamma(n - k + 1.0) + k * std::log(p) +
                      (n - k) * std::log1p(-p));
  }
  std::size_t lo = 0;
  double acc = 0;
  while (lo < n && acc + pmf[lo] <= tail) acc += pmf[lo++];
  std::size_t hi = n;
  acc = 0;
  while (hi > 0 && acc + pmf[hi] <= tail) acc += pmf[hi--];
  return {lo, hi};
}

// Kolmogorov-Smirnov distance between a sample and U(0, 1).
inline double KsUniform(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    d = std::max(d, (i + 1) / n - sample[i]);
    d = std::max(d, sample[i] - i / n);
  }
  return d;
}

}  // namespace semjudge::oracle

#endif  // SEMJUDGE_TESTS_ORACLES_STATS_ORACLES_H_
