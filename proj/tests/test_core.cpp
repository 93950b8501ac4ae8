#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pareto_lens/core.hpp"
#include "pareto_lens/errors.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens {
namespace {

using fixtures::make_set;

std::vector<ObjectiveSpec> maxes(std::size_t m) { return default_specs(m); }

TEST(Dominance, BetterOrEqualWithOneStrict) {
  const std::vector<double> a{2, 3}, b{1, 3};
  EXPECT_TRUE(dominates(a, b, maxes(2)));
  EXPECT_FALSE(dominates(b, a, maxes(2)));
}

TEST(Dominance, IncomparablePair) {
  const std::vector<double> a{1, 2}, b{2, 1};
  EXPECT_FALSE(dominates(a, b, maxes(2)));
  EXPECT_FALSE(dominates(b, a, maxes(2)));
}

TEST(Dominance, EqualVectorsDoNotDominate) {
  const std::vector<double> a{4, 4, 4};
  EXPECT_FALSE(dominates(a, a, maxes(3)));
}

TEST(Dominance, FirstTwoExamplePointsAreIncomparable) {
  const std::vector<double> a{45, 68, 85}, b{6, 63, 99};
  EXPECT_FALSE(dominates(a, b, maxes(3)));
  EXPECT_FALSE(dominates(b, a, maxes(3)));
}

TEST(Dominance, MinimiseFlipsDirection) {
  const std::vector<ObjectiveSpec> specs{{"cost", Sense::Minimise}, {"gain", Sense::Maximise}};
  const std::vector<double> a{1, 5}, b{2, 5};
  EXPECT_TRUE(dominates(a, b, specs));
  EXPECT_FALSE(dominates(b, a, specs));
}

TEST(Dominance, LengthMismatchIsDimensionError) {
  const std::vector<double> a{1, 2}, b{1, 2, 3};
  EXPECT_THROW(dominates(a, b, maxes(2)), DimensionError);
}

TEST(DominanceProperty, AntisymmetryAndSenseSymmetry) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 2 + trial % 4;
    auto pts = oracle::random_points(gen, 2, m, 4);
    std::vector<ObjectiveSpec> specs = default_specs(m);
    for (auto& s : specs) s.sense = coin(gen) ? Sense::Maximise : Sense::Minimise;
    ASSERT_FALSE(dominates(pts[0], pts[1], specs) && dominates(pts[1], pts[0], specs));
    // Negating a minimised column and calling it maximised changes nothing.
    auto a = pts[0], b = pts[1];
    auto flipped = specs;
    for (std::size_t k = 0; k < m; ++k) {
      if (specs[k].sense == Sense::Minimise) {
        a[k] = -a[k];
        b[k] = -b[k];
        flipped[k].sense = Sense::Maximise;
      }
    }
    ASSERT_EQ(dominates(pts[0], pts[1], specs), dominates(a, b, flipped));
    ASSERT_EQ(dominates(pts[0], pts[1], specs), oracle::dominates(pts[0], pts[1], specs));
  }
}

TEST(Filter, KeepsTheNonDominatedExamplePoints) {
  const auto set = fixtures::three_way_set();
  const auto filtered = nondominated_filter(set);
  // Five of the 19 example points are dominated, e.g. (34,64,95) by (36,100,97).
  EXPECT_EQ(filtered.size(), 14u);
  std::vector<ObjectiveVector> pts;
  for (const auto& s : set.solutions()) pts.push_back(s.objectives);
  EXPECT_EQ(nondominated_indices(pts, set.specs()), oracle::nondominated(pts, set.specs()));
}

TEST(Filter, StrictDominanceRemovesWorsePoint) {
  const auto out = nondominated_filter(make_set({{1, 1}, {2, 2}}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.objectives(0), (ObjectiveVector{2, 2}));
}

TEST(Filter, EmptyInputGivesEmptyOutput) {
  const ApproximationSet empty(default_specs(3), {}, "e");
  EXPECT_TRUE(nondominated_filter(empty).empty());
}

TEST(Filter, DuplicatesKeptOnceFirstOccurrenceWins) {
  auto set = make_set({{1, 2}, {2, 1}, {1, 2}});
  const auto out = nondominated_filter(set);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(nondominated_indices(std::vector<ObjectiveVector>{{1, 2}, {2, 1}, {1, 2}}, set.specs()),
            (std::vector<std::size_t>{0, 1}));
}

TEST(Filter, SurvivorsKeepInputOrder) {
  const auto out = nondominated_filter(make_set({{3, 1}, {0, 0}, {1, 3}, {2, 2}}));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.objectives(0), (ObjectiveVector{3, 1}));
  EXPECT_EQ(out.objectives(1), (ObjectiveVector{1, 3}));
  EXPECT_EQ(out.objectives(2), (ObjectiveVector{2, 2}));
}

TEST(FilterProperty, MatchesAllPairsOracleAndIsIdempotent) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 4;
    const std::size_t count = 1 + (trial * 37) % 300;
    auto pts = oracle::random_points(gen, count, m, trial % 2 ? 20 : 1000);
    auto specs = default_specs(m);
    if (trial % 3 == 0) specs[0].sense = Sense::Minimise;
    const auto set = make_set(pts, specs);
    const auto expected = oracle::nondominated(pts, specs);
    const auto filtered = nondominated_filter(set);
    ASSERT_EQ(filtered.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) ASSERT_EQ(filtered.objectives(k), pts[expected[k]]);
    const auto twice = nondominated_filter(filtered);
    ASSERT_EQ(twice.size(), filtered.size());
    for (std::size_t k = 0; k < twice.size(); ++k) ASSERT_EQ(twice.objectives(k), filtered.objectives(k));
  }
}

TEST(Normalize, AffineMap) {
  EXPECT_EQ(normalize_column(std::vector<double>{10, 20, 30}, Sense::Maximise), (std::vector<double>{0, 0.5, 1}));
}

TEST(Normalize, ConstantColumnMapsToHalf) {
  EXPECT_EQ(normalize_column(std::vector<double>{7, 7, 7}, Sense::Maximise), (std::vector<double>{0.5, 0.5, 0.5}));
}

TEST(Normalize, MinimiseIsFlipped) {
  EXPECT_EQ(normalize_column(std::vector<double>{10, 20, 30}, Sense::Minimise), (std::vector<double>{1, 0.5, 0}));
  const std::vector<ObjectiveSpec> specs{{"a", Sense::Minimise}, {"b", Sense::Maximise}};
  const auto n = normalize(make_set({{1, 1}, {3, 2}}, specs));
  EXPECT_EQ(n.specs()[0].sense, Sense::Maximise);
  EXPECT_EQ(n.objectives(0), (ObjectiveVector{1, 0}));
}

TEST(Normalize, ExampleColumnValue) {
  const auto n = normalize(fixtures::three_way_set());
  // Column Z1 spans 6..100 over the 19 points.
  EXPECT_NEAR(n.objectives(0)[0], (45.0 - 6.0) / 94.0, 1e-12);
  EXPECT_NEAR(n.objectives(0)[0], 0.4149, 1e-4);
}

TEST(NormalizeProperty, BoundsAndExtremes) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + trial % 4;
    const auto pts = oracle::random_points(gen, 1 + trial * 3, m, 50);
    const auto set = make_set(pts);
    const auto n = normalize(set);
    for (std::size_t i = 0; i < m; ++i) {
      const auto raw = set.column(i);
      const auto col = n.column(i);
      const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
      for (std::size_t k = 0; k < col.size(); ++k) {
        ASSERT_GE(col[k], 0.0);
        ASSERT_LE(col[k], 1.0);
        if (*lo < *hi && raw[k] == *lo) { ASSERT_EQ(col[k], 0.0); }
        if (*lo < *hi && raw[k] == *hi) { ASSERT_EQ(col[k], 1.0); }
      }
    }
  }
}

TEST(ApproximationSetInvariants, RejectsBadConstruction) {
  EXPECT_THROW(make_set({{1}}, default_specs(1)), DimensionError);
  EXPECT_THROW(make_set({{1, 2, 3}}, default_specs(2)), DimensionError);
  EXPECT_THROW(make_set({{1, 2}}, {{"a", Sense::Maximise}, {"a", Sense::Maximise}}), ArgumentError);
  EXPECT_THROW(make_set({{1, 2}}, {{"", Sense::Maximise}, {"b", Sense::Maximise}}), ArgumentError);
  EXPECT_THROW(make_set({{1, std::numeric_limits<double>::infinity()}}), ArgumentError);
}

TEST(SetIo, RoundTripWithDecisionsAndSenses) {
  std::vector<Solution> sols{{{1.5, 2, -3}, BitString{1, 0, 1}, {}}, {{0.1, 1e-7, 12345678}, std::nullopt, {}}};
  const ApproximationSet set({{"cost", Sense::Minimise}, {"Z2", Sense::Maximise}, {"Z3", Sense::Maximise}}, sols,
                             "inst-7");
  std::stringstream ss;
  write_approximation_set(ss, set, {{"note", "hello"}});
  const auto back = parse_approximation_set(ss);
  EXPECT_EQ(back.specs(), set.specs());
  EXPECT_EQ(back.instance_id(), "inst-7");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back.objectives(0), set.objectives(0));
  EXPECT_EQ(back.objectives(1), set.objectives(1));
  EXPECT_EQ(back.solutions()[0].decision, (BitString{1, 0, 1}));
  EXPECT_FALSE(back.solutions()[1].decision.has_value());
}

TEST(SetIo, WrongArityNamesTheLine) {
  std::istringstream in("# objectives: a:max,b:max\n1,2\n# comment\n3,4,5\n");
  try {
    parse_approximation_set(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(SetIo, MissingHeaderAndBadValues) {
  std::istringstream no_header("1,2\n");
  EXPECT_THROW(parse_approximation_set(no_header), ParseError);
  std::istringstream bad("# objectives: a:max,b:max\n1,x\n");
  EXPECT_THROW(parse_approximation_set(bad), ParseError);
  std::istringstream bad_sense("# objectives: a:up,b:max\n");
  EXPECT_THROW(parse_approximation_set(bad_sense), ParseError);
}

TEST(SetIo, FormatNumberRoundTrips) {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300, 123456789.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(50.0), "50");
}

}  // namespace
}  // namespace pareto_lens
