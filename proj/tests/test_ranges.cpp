#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pareto_lens/errors.hpp"
#include "pareto_lens/ranges.hpp"

namespace pareto_lens {
namespace {

using fixtures::make_set;

TEST(Ranges, SingleSolutionHasZeroRange) {
  for (const auto& st : objective_ranges(make_set({{3, 9, 4}}))) {
    EXPECT_EQ(st.range, 0.0);
    EXPECT_EQ(st.range_fraction, 0.0);
    EXPECT_EQ(st.min, st.max);
  }
}

TEST(Ranges, ExampleColumnOne) {
  const auto st = objective_ranges(fixtures::three_way_set());
  EXPECT_EQ(st[0].min, 6.0);
  EXPECT_EQ(st[0].max, 100.0);
  EXPECT_EQ(st[0].range, 94.0);
  EXPECT_DOUBLE_EQ(st[0].range_fraction, 0.94);
}

TEST(Ranges, SuppliedReference) {
  const auto st = objective_ranges(make_set({{10, 1}, {20, 3}}), RangeReference::from({200, 4}));
  EXPECT_DOUBLE_EQ(st[0].range_fraction, 0.05);
  EXPECT_DOUBLE_EQ(st[1].range_fraction, 0.5);
  EXPECT_DOUBLE_EQ(st[0].mean, 15.0);
  EXPECT_THROW(objective_ranges(make_set({{1, 2}}), RangeReference::from({1})), DimensionError);
}

TEST(Ranges, EmptySetIsInsufficientData) {
  EXPECT_THROW(objective_ranges(ApproximationSet(default_specs(2), {})), InsufficientDataError);
}

TEST(Meaningful, Verdicts) {
  RangeStats wide;
  wide.range_fraction = 0.849;
  EXPECT_TRUE(classify_meaningful(wide, 0.05).meaningful);
  RangeStats narrow;
  narrow.range_fraction = 0.003;
  EXPECT_FALSE(classify_meaningful(narrow, 0.05).meaningful);
  RangeStats boundary;
  boundary.range_fraction = 0.05;
  const auto v = classify_meaningful(boundary, 0.05);
  EXPECT_TRUE(v.meaningful);
  EXPECT_EQ(v.policy, "range_fraction>=0.05");
  EXPECT_THROW(classify_meaningful(wide, 0.0), ArgumentError);
  EXPECT_THROW(classify_meaningful(wide, 1.0), ArgumentError);
}

TEST(RangesProperty, InvariantsAndScaleEquivariance) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + trial % 3;
    const auto pts = oracle::random_points(gen, 1 + trial, m, 500);
    const double c = 0.5 + trial * 0.75;
    std::vector<ObjectiveVector> scaled;
    for (const auto& p : pts) {
      scaled.push_back(p);
      scaled.back()[0] *= c;
    }
    const auto a = objective_ranges(make_set(pts));
    const auto b = objective_ranges(make_set(scaled));
    for (const auto& st : a) {
      ASSERT_LE(st.min, st.mean);
      ASSERT_LE(st.mean, st.max);
      ASSERT_GE(st.range_fraction, 0.0);
      ASSERT_LE(st.range_fraction, 1.0);
    }
    ASSERT_NEAR(b[0].min, c * a[0].min, 1e-9 * c * 500);
    ASSERT_NEAR(b[0].max, c * a[0].max, 1e-9 * c * 500);
    ASSERT_NEAR(b[0].mean, c * a[0].mean, 1e-9 * c * 500);
    ASSERT_NEAR(b[0].range, c * a[0].range, 1e-9 * c * 500);
    ASSERT_NEAR(b[0].range_fraction, a[0].range_fraction, 1e-12);
  }
}

TEST(RangesProperty, VerdictMonotoneInCutoff) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    RangeStats st;
    st.range_fraction = u(gen);
    double lo = 0.001 + 0.998 * u(gen), hi = 0.001 + 0.998 * u(gen);
    if (lo > hi) std::swap(lo, hi);
    if (!classify_meaningful(st, lo).meaningful) { ASSERT_FALSE(classify_meaningful(st, hi).meaningful); }
  }
}

}  // namespace
}  // namespace pareto_lens
