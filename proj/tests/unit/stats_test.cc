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

#include <cmath>
#include <random>

#include "semjudge/stats/agreement.h"
#include "semjudge/stats/bias.h"
#include "semjudge/stats/correlation.h"
#include "semjudge/stats/ratings.h"
#include "semjudge/stats/rng.h"
#include "stats_oracles.h"

namespace semjudge::stats {
namespace {

using Vec = std::vector<double>;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

// ---- correlation ----------------------------------------------------------

TEST(KendallTauB, PerfectAndReversed) {
  const Vec x = {1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(KendallTauB(x, x), 1.0);
  EXPECT_DOUBLE_EQ(KendallTauB(x, Vec{5, 4, 3, 2, 1}), -1.0);
}

TEST(KendallTauB, KnownTiedValue) {
  // Pairs 10: concordant 8, discordant 1, one tie in x.
  const Vec x = {1, 2, 2, 3, 4};
  const Vec y = {1, 3, 2, 5, 4};
  EXPECT_NEAR(KendallTauB(x, y), 7.0 / std::sqrt(90.0), 1e-15);
}

TEST(KendallTauB, MatchesBruteForce) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng.UniformIndex(60);
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng.UniformIndex(t % 2 ? 4 : 1000));
      y[i] = static_cast<double>(rng.UniformIndex(t % 3 ? 5 : 1000));
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; }) ||
        std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) {
      continue;
    }
    ASSERT_NEAR(KendallTauB(x, y), oracle::BruteKendallTauB(x, y), 1e-12);
  }
}

TEST(KendallTauB, Errors) {
  EXPECT_EQ(CodeOf([] { KendallTauB(Vec{1, 1, 1}, Vec{1, 2, 3}); }), ErrorCode::kUndefined);
  EXPECT_EQ(CodeOf([] { KendallTauB(Vec{1, 2}, Vec{1, 2, 3}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { KendallTauB(Vec{1}, Vec{1}); }), ErrorCode::kInvalidArgument);
}

TEST(MidRanks, Ties) {
  EXPECT_EQ(MidRanks(Vec{10, 20, 20, 5}), (Vec{2, 3.5, 3.5, 1}));
}

TEST(SpearmanRho, RankInvariance) {
  const Vec x = {-2, -1, 0.5, 1, 3, 4};
  Vec cubed;
  for (double v : x) cubed.push_back(v * v * v);
  EXPECT_DOUBLE_EQ(SpearmanRho(x, x), 1.0);
  EXPECT_DOUBLE_EQ(SpearmanRho(x, cubed), 1.0);
}

TEST(SpearmanRho, MatchesRankPearsonOracle) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + rng.UniformIndex(40);
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng.UniformIndex(8));
      y[i] = rng.UniformUnit();
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
    ASSERT_NEAR(SpearmanRho(x, y), oracle::BruteSpearman(x, y), 1e-12);
  }
}

TEST(LinCcc, LocationShiftPenalized) {
  const Vec x = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(LinCcc(x, x), 1.0);
  const Vec shifted = {2, 3, 4, 5};
  EXPECT_LT(LinCcc(x, shifted), 1.0);
  // s_xy = s_x^2 = s_y^2 = 1.25, shift 1: 2.5 / 3.5.
  EXPECT_NEAR(LinCcc(x, shifted), 2.5 / 3.5, 1e-15);
  EXPECT_EQ(CodeOf([] { LinCcc(Vec{2, 2}, Vec{3, 3}); }), ErrorCode::kUndefined);
}

TEST(LinCcc, MatchesHighPrecisionOracle) {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.UniformIndex(50);
    Vec x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = 1500 + 300 * rng.UniformUnit();
      y[i] = 1500 + 300 * rng.UniformUnit();
    }
    ASSERT_NEAR(LinCcc(x, y), oracle::BruteLinCcc(x, y), 1e-12);
  }
}

TEST(PerPromptKrcc, AgreementAndFlip) {
  std::map<std::string, int> human, same, flipped;
  std::map<std::string, std::string> grouping;
  const int pattern[] = {1, -1, 1, 1, -1, -1};
  for (int i = 0; i < 6; ++i) {
    const std::string id = "t" + std::to_string(i);
    human[id] = pattern[i];
    same[id] = pattern[i];
    flipped[id] = -pattern[i];
    grouping[id] = i < 3 ? "p1" : "p2";
  }
  EXPECT_DOUBLE_EQ(PerPromptKrcc(same, human, grouping).mean_tau, 1.0);
  EXPECT_DOUBLE_EQ(PerPromptKrcc(flipped, human, grouping).mean_tau, -1.0);
}

TEST(PerPromptKrcc, AveragesPrompts) {
  // p1 agrees fully (tau 1); p2 has tau 0.
  const std::map<std::string, int> human = {{"a1", 1}, {"a2", -1}, {"b1", 1}, {"b2", -1},
                                            {"b3", 1}, {"b4", -1}};
  const std::map<std::string, int> eval = {{"a1", 1}, {"a2", -1}, {"b1", 1}, {"b2", 1},
                                           {"b3", -1}, {"b4", -1}};
  const std::map<std::string, std::string> grouping = {{"a1", "p1"}, {"a2", "p1"}, {"b1", "p2"},
                                                       {"b2", "p2"}, {"b3", "p2"}, {"b4", "p2"}};
  const KrccSummary s = PerPromptKrcc(eval, human, grouping);
  EXPECT_DOUBLE_EQ(s.mean_tau, 0.5);
  EXPECT_EQ(s.prompts_used, 2u);
  ASSERT_EQ(s.per_prompt.size(), 2u);
  EXPECT_DOUBLE_EQ(*s.per_prompt[1].tau, 0.0);
}

TEST(PerPromptKrcc, UndefinedPromptsAreExcluded) {
  const std::map<std::string, int> human = {{"a1", 1}, {"a2", 1}, {"b1", 1}, {"b2", -1}};
  const std::map<std::string, int> eval = {{"a1", 1}, {"a2", -1}, {"b1", 1}, {"b2", -1}};
  const std::map<std::string, std::string> grouping = {{"a1", "p1"}, {"a2", "p1"},
                                                       {"b1", "p2"}, {"b2", "p2"}};
  const KrccSummary s = PerPromptKrcc(eval, human, grouping);
  EXPECT_EQ(s.prompts_used, 1u);
  EXPECT_EQ(s.prompts_excluded, 1u);
  EXPECT_FALSE(s.per_prompt[0].tau);
  EXPECT_DOUBLE_EQ(PerPromptKrcc(eval, human, grouping, /*pooled=*/true).mean_tau,
                   KendallTauB(Vec{1, -1, 1, -1}, Vec{1, 1, 1, -1}));
}

// ---- ratings --------------------------------------------------------------

std::vector<PairOutcome> Games(const std::string& i, const std::string& j, int i_wins, int j_wins) {
  std::vector<PairOutcome> out;
  for (int k = 0; k < i_wins; ++k) out.push_back({i, j, PairOutcome::Winner::kI, ""});
  for (int k = 0; k < j_wins; ++k) out.push_back({i, j, PairOutcome::Winner::kJ, ""});
  return out;
}

TEST(FitRatings, EvenSplitIsAnchored) {
  const RatingTable t = FitRatings(Games("A", "B", 5, 5));
  EXPECT_NEAR(t.ratings.at("A"), 1500.0, 1e-9);
  EXPECT_NEAR(t.ratings.at("B"), 1500.0, 1e-9);
}

TEST(FitRatings, SweepNeedsRegularizer) {
  const auto games = Games("A", "B", 10, 0);
  try {
    FitRatings(games);
    FAIL();
  } catch (const RatingFitError& e) {
    EXPECT_EQ(e.kind(), RatingFitError::Kind::kDivergent);
  }
  FitOptions options;
  options.regularize = true;
  const RatingTable t = FitRatings(games, options);
  EXPECT_TRUE(t.regularized);
  EXPECT_GT(t.ratings.at("A"), t.ratings.at("B"));
  // 10.5 : 0.5 wins, so P(A) = 21/22 exactly at the optimum.
  EXPECT_NEAR(WinProbability(t.ratings.at("A"), t.ratings.at("B")), 21.0 / 22.0, 1e-9);
}

TEST(FitRatings, DisconnectedGroupsNamed) {
  auto games = Games("A", "B", 2, 1);
  const auto more = Games("C", "D", 1, 2);
  games.insert(games.end(), more.begin(), more.end());
  try {
    FitRatings(games);
    FAIL();
  } catch (const RatingFitError& e) {
    EXPECT_EQ(e.kind(), RatingFitError::Kind::kDisconnected);
    EXPECT_EQ(e.groups(), (std::vector<std::vector<std::string>>{{"A", "B"}, {"C", "D"}}));
  }
}

TEST(FitRatings, ThreeModelRoundRobinMean) {
  auto games = Games("x", "y", 3, 1);
  for (const auto& g : {Games("y", "z", 2, 2), Games("x", "z", 1, 3)}) {
    games.insert(games.end(), g.begin(), g.end());
  }
  const RatingTable t = FitRatings(games);
  double sum = 0;
  for (const auto& [m, r] : t.ratings) sum += r;
  EXPECT_NEAR(sum / 3, 1500.0, 1e-9);
}

TEST(FitRatings, MatchesNewtonOracle) {
  Rng rng(17);
  const std::vector<std::string> ids = {"a", "b", "c", "d"};
  for (int t = 0; t < 30; ++t) {
    std::vector<PairOutcome> games;
    std::vector<std::vector<double>> wins(4, std::vector<double>(4, 0));
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const int wi = 1 + static_cast<int>(rng.UniformIndex(4));
        const int wj = 1 + static_cast<int>(rng.UniformIndex(4));
        const auto g = Games(ids[i], ids[j], wi, wj);
        games.insert(games.end(), g.begin(), g.end());
        wins[i][j] = wi;
        wins[j][i] = wj;
      }
    }
    const auto expected = oracle::NewtonBradleyTerry(wins);
    const RatingTable fitted = FitRatings(games);
    for (int i = 0; i < 4; ++i) ASSERT_NEAR(fitted.ratings.at(ids[i]), expected[i], 1e-6);
  }
}

TEST(WinProbability, EloScale) {
  EXPECT_DOUBLE_EQ(WinProbability(1500, 1500), 0.5);
  EXPECT_NEAR(WinProbability(1900, 1500), 10.0 / 11.0, 1e-12);
}

// ---- agreement ------------------------------------------------------------

TEST(CohenKappa, HandComputedTable) {
  // [[20, 5], [10, 15]]: p_o = 35/50, p_e = (25*30 + 25*20)/2500 = 0.5.
  std::vector<char> a, b;
  const std::pair<std::pair<char, char>, int> cells[] = {
      {{'y', 'y'}, 20}, {{'y', 'n'}, 5}, {{'n', 'y'}, 10}, {{'n', 'n'}, 15}};
  for (const auto& [labels, count] : cells) {
    for (int i = 0; i < count; ++i) {
      a.push_back(labels.first);
      b.push_back(labels.second);
    }
  }
  EXPECT_EQ(CohenKappa(a, b), 0.4);
  EXPECT_EQ(CohenKappa(a, a), 1.0);
}

TEST(CohenKappa, ChanceLevelForIndependentRaters) {
  std::mt19937_64 engine(3);
  std::uniform_int_distribution<int> label(0, 2);
  std::vector<int> a, b;
  for (int i = 0; i < 20000; ++i) {
    a.push_back(label(engine));
    b.push_back(label(engine));
  }
  EXPECT_NEAR(CohenKappa(a, b), 0.0, 0.02);
}

TEST(CohenKappa, ConstantRatersUndefined) {
  const std::vector<int> ones(5, 1);
  EXPECT_EQ(CodeOf([&] { CohenKappa(ones, ones); }), ErrorCode::kUndefined);
}

TEST(MajorityVote, Cases) {
  std::vector<char> votes(13, 'B');
  std::fill(votes.begin(), votes.begin() + 8, 'A');
  const auto r = MajorityVote(votes);
  EXPECT_EQ(r.winner, 'A');
  EXPECT_DOUBLE_EQ(r.agreement, 8.0 / 13.0);
  EXPECT_DOUBLE_EQ(MajorityVote(std::vector<char>(4, 'A')).agreement, 1.0);
  std::vector<char> split(10, 'A');
  std::fill(split.begin(), split.begin() + 5, 'B');
  EXPECT_FALSE(MajorityVote(split).winner);
}

TEST(LightKappa, AveragesOverlappingPairs) {
  const std::map<std::string, std::map<std::string, std::string>> labels = {
      {"r1", {{"t1", "A"}, {"t2", "B"}, {"t3", "A"}}},
      {"r2", {{"t1", "A"}, {"t2", "B"}, {"t3", "A"}}},
      {"r3", {{"t9", "A"}}}};
  EXPECT_EQ(LightKappa(labels), 1.0);
  EXPECT_FALSE(LightKappa({{"r1", {{"t1", "A"}}}, {"r2", {{"t2", "B"}}}}));
}

// ---- bias -----------------------------------------------------------------

TEST(IconicityDelta, Arithmetic) {
  EXPECT_DOUBLE_EQ(IconicityDelta(Vec{2, 2, 0, 0}, std::vector<int>{1, 1, 0, 0}), 2.0);
  EXPECT_EQ(CodeOf([] { IconicityDelta(Vec{1, 2}, std::vector<int>{1, 1}); }),
            ErrorCode::kUndefined);
  EXPECT_EQ(CodeOf([] { IconicityDelta(Vec{1, 2}, std::vector<int>{1, 2}); }),
            ErrorCode::kInvalidArgument);
}

TEST(IconicityDelta, ScalesLinearly) {
  const Vec ni = {0.5, -1, 2, 3, 1.5};
  const std::vector<int> aligned = {1, 0, 1, 0, 1};
  Vec scaled;
  for (double v : ni) scaled.push_back(2.5 * v);
  EXPECT_NEAR(IconicityDelta(scaled, aligned), 2.5 * IconicityDelta(ni, aligned), 1e-12);
  EXPECT_NEAR(CohensD(scaled, aligned), CohensD(ni, aligned), 1e-12);
}

TEST(PermutationTest, MatchesEnumerationAtSixItems) {
  const Vec ni = {1.2, -0.4, 2.2, 0.1, -1.5, 0.9};
  const std::vector<int> aligned = {1, 0, 1, 1, 0, 0};
  const double exact = oracle::ExactPermutationP(ni, aligned);
  const std::size_t n_perm = 20000;
  const double p = PermutationTestDelta(ni, aligned, n_perm, 1);
  const auto [lo, hi] = oracle::BinomialInterval(n_perm, exact, 0.999);
  const double count = p * (n_perm + 1) - 1;
  EXPECT_GE(count, lo - 0.5);
  EXPECT_LE(count, hi + 0.5);
}

TEST(PermutationTest, ConstantDataAndDeterminism) {
  const std::vector<int> aligned = {1, 0, 1, 0, 1};
  EXPECT_DOUBLE_EQ(PermutationTestDelta(Vec(5, 3.0), aligned, 500, 4), 1.0);
  const Vec ni = {1, 5, 2, 7, 3};
  EXPECT_EQ(PermutationTestDelta(ni, aligned, 999, 8), PermutationTestDelta(ni, aligned, 999, 8));
}

TEST(Bootstrap, DegenerateAndDeterministic) {
  // Every resample of {1,1 | 0,0} has delta 1 (or is redrawn).
  const Vec ni = {1, 1, 0, 0};
  const std::vector<int> aligned = {1, 1, 0, 0};
  EXPECT_DOUBLE_EQ(BootstrapLowerCi(ni, aligned, 1000, 0.05, 2).lower, 1.0);
  const Vec noisy = {0.3, 1.7, -0.2, 0.8, 2.1, -1.0};
  const std::vector<int> mixed = {1, 1, 0, 0, 1, 0};
  EXPECT_EQ(BootstrapLowerCi(noisy, mixed, 500, 0.05, 6).lower,
            BootstrapLowerCi(noisy, mixed, 500, 0.05, 6).lower);
}

TEST(CohensD, HandValues) {
  EXPECT_DOUBLE_EQ(CohensD(Vec{0, 2, 0, 2}, std::vector<int>{1, 1, 0, 0}), 0.0);
  // Groups {1,3} and {0,2}: means 2 and 1, pooled variance (2 + 2) / 2 = 2.
  EXPECT_NEAR(CohensD(Vec{1, 3, 0, 2}, std::vector<int>{1, 1, 0, 0}), 1 / std::sqrt(2.0), 1e-15);
  // Groups {0.5,1.5,...}: sd 1 each, means 1 apart.
  const Vec ni = {1, 3, 2, 0, 2, 1};
  const std::vector<int> aligned = {1, 1, 1, 0, 0, 0};
  EXPECT_DOUBLE_EQ(CohensD(ni, aligned), 1.0);
  EXPECT_EQ(CodeOf([] { CohensD(Vec{1, 2, 3}, std::vector<int>{1, 0, 0}); }), ErrorCode::kUndefined);
}

TEST(RunBiasTest, TopQuartileAlignment) {
  // Aligned exactly on the highest-NI quarter of 40 tasks.
  Vec ni;
  std::vector<int> aligned;
  for (int i = 0; i < 40; ++i) {
    ni.push_back(-3 + 0.15 * i);
    aligned.push_back(i >= 30);
  }
  BiasTestOptions options;
  options.n_perm = 4000;
  options.n_boot = 2000;
  const BiasTestResult r = RunBiasTest(ni, aligned, options);
  EXPECT_GT(r.delta, 0);
  EXPECT_LT(r.p_value, 0.01);
  EXPECT_GT(r.ci_lower, 0);
  EXPECT_EQ(r.n_aligned, 10u);
  EXPECT_EQ(SignificanceStars(r.p_value), "**");
  EXPECT_EQ(SignificanceStars(0.03), "*");
  EXPECT_EQ(SignificanceStars(0.2), "");
}

TEST(RunBiasTest, IndependentLabelsNearZero) {
  std::mt19937_64 engine(12);
  std::normal_distribution<double> normal;
  double total = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Vec ni(50);
    std::vector<int> aligned(50);
    for (int i = 0; i < 50; ++i) {
      ni[i] = normal(engine);
      aligned[i] = i % 2;
    }
    total += IconicityDelta(ni, aligned);
  }
  EXPECT_NEAR(total / 200, 0.0, 0.05);
}

}  // namespace
}  // namespace semjudge::stats
