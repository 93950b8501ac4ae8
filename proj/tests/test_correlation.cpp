#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pareto_lens/correlation.hpp"
#include "pareto_lens/errors.hpp"

namespace pareto_lens {
namespace {

using fixtures::make_set;

TEST(KendallTau, AllConcordant) {
  EXPECT_DOUBLE_EQ(kendall_tau(make_set({{1, 1}, {2, 2}, {3, 3}}), 0, 1), 1.0);
}

TEST(KendallTau, AllDiscordant) {
  EXPECT_DOUBLE_EQ(kendall_tau(make_set({{1, 3}, {2, 2}, {3, 1}}), 0, 1), -1.0);
}

TEST(KendallTau, TiesCountAsNeitherUnderTauA) {
  // Pairs: (1,2) tied in x, (1,3) concordant, (2,3) concordant.
  const auto set = make_set({{1, 1}, {1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(kendall_tau(set, 0, 1, TiePolicy::TauA), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(kendall_tau(set, 0, 1, TiePolicy::TauB), 2.0 / std::sqrt(2.0 * 3.0));
}

TEST(KendallTau, ConstantColumnUnderTauBIsZero) {
  EXPECT_EQ(kendall_tau(make_set({{1, 5}, {2, 5}, {3, 5}}), 0, 1, TiePolicy::TauB), 0.0);
}

TEST(KendallTau, Errors) {
  EXPECT_THROW(kendall_tau(make_set({{1, 1}}), 0, 1), InsufficientDataError);
  EXPECT_THROW(kendall_tau(make_set({{1, 1}, {2, 2}}), 0, 0), ArgumentError);
  EXPECT_THROW(kendall_tau(make_set({{1, 1}, {2, 2}}), 0, 2), ArgumentError);
}

TEST(KendallTau, ExamplePointsAgreeWithPairCounting) {
  const auto set = fixtures::three_way_set();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      EXPECT_NEAR(kendall_tau(set, i, j, TiePolicy::TauA), oracle::tau_a(set.column(i), set.column(j)), 1e-12);
      EXPECT_NEAR(kendall_tau(set, i, j, TiePolicy::TauB), oracle::tau_b(set.column(i), set.column(j)), 1e-12);
    }
  }
}

TEST(KendallTau, ExamplePointsAreAllIndependent) {
  const auto rel = pairwise_matrix(fixtures::three_way_set());
  ASSERT_EQ(rel.size(), 3u);
  for (const auto& r : rel) {
    EXPECT_LT(r.tau, 0.0);
    EXPECT_EQ(r.kind, Relation::Independent);
  }
}

TEST(KendallTauProperty, MatchesPairEnumeration) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 60;
    const auto pts = oracle::random_points(gen, n, 2, trial % 2 ? 5 : 10000);
    std::vector<double> x, y;
    for (const auto& p : pts) {
      x.push_back(p[0]);
      y.push_back(p[1]);
    }
    ASSERT_NEAR(kendall_tau(x, y, TiePolicy::TauA), oracle::tau_a(x, y), 1e-12);
    ASSERT_NEAR(kendall_tau(x, y, TiePolicy::TauB), oracle::tau_b(x, y), 1e-12);
  }
}

TEST(KendallTauProperty, SymmetryMonotoneInvarianceAndSignFlip) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = oracle::random_points(gen, 3 + trial, 2, 30);
    const auto set = make_set(pts);
    std::vector<ObjectiveVector> warped, negated;
    for (const auto& p : pts) {
      warped.push_back({std::exp(p[0] / 10.0) + 3.0, p[1]});
      negated.push_back({-p[0], p[1]});
    }
    for (auto policy : {TiePolicy::TauA, TiePolicy::TauB}) {
      const double tau = kendall_tau(set, 0, 1, policy);
      ASSERT_DOUBLE_EQ(tau, kendall_tau(set, 1, 0, policy));
      ASSERT_DOUBLE_EQ(tau, kendall_tau(make_set(warped), 0, 1, policy));
      ASSERT_DOUBLE_EQ(-tau, kendall_tau(make_set(negated), 0, 1, policy));
      ASSERT_LE(std::abs(tau), 1.0);
    }
  }
}

TEST(Classification, StrictBoundaries) {
  EXPECT_EQ(classify_tau(-0.5), Relation::Independent);
  EXPECT_EQ(classify_tau(0.5), Relation::Independent);
  EXPECT_EQ(classify_tau(-0.5000001), Relation::Conflicting);
  EXPECT_EQ(classify_tau(0.5000001), Relation::Harmonious);
  EXPECT_EQ(to_string(Relation::Conflicting), "conflicting");
}

TEST(PairwiseMatrix, OrderAndCount) {
  std::mt19937_64 gen(3);
  const auto rel = pairwise_matrix(make_set(oracle::random_points(gen, 20, 4, 100)));
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  ASSERT_EQ(rel.size(), expected.size());
  for (std::size_t k = 0; k < rel.size(); ++k) {
    EXPECT_EQ(rel[k].i, expected[k].first);
    EXPECT_EQ(rel[k].j, expected[k].second);
    EXPECT_EQ(rel[k].kind, classify_tau(rel[k].tau));
  }
}

}  // namespace
}  // namespace pareto_lens
