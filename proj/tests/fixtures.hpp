#ifndef PARETO_LENS_TESTS_FIXTURES_HPP
#define PARETO_LENS_TESTS_FIXTURES_HPP

#include <array>
#include <string>
#include <vector>

#include "pareto_lens/core.hpp"

namespace fixtures {

/// The 19 three-objective points of the worked Kendall example.
inline const std::vector<std::array<double, 3>> kThreeWayPoints = {
    {45, 68, 85}, {6, 63, 99},  {34, 64, 95}, {28, 100, 48}, {98, 47, 69}, {48, 62, 79}, {72, 24, 90},
    {82, 79, 16}, {36, 100, 97}, {100, 87, 41}, {98, 19, 87}, {85, 57, 50}, {88, 20, 73}, {91, 48, 99},
    {94, 31, 70}, {56, 49, 59}, {75, 93, 1},  {38, 84, 85}, {45, 78, 47}};

inline pareto_lens::ApproximationSet three_way_set() {
  std::vector<pareto_lens::Solution> sols;
  for (const auto& p : kThreeWayPoints) sols.push_back({{p[0], p[1], p[2]}, std::nullopt, "example"});
  return pareto_lens::ApproximationSet(pareto_lens::default_specs(3), std::move(sols), "three-way");
}

inline pareto_lens::ApproximationSet make_set(const std::vector<pareto_lens::ObjectiveVector>& points,
                                              std::vector<pareto_lens::ObjectiveSpec> specs = {},
                                              const std::string& id = "test") {
  if (specs.empty()) specs = pareto_lens::default_specs(points.empty() ? 2 : points.front().size());
  std::vector<pareto_lens::Solution> sols;
  for (const auto& p : points) sols.push_back({p, std::nullopt, {}});
  return pareto_lens::ApproximationSet(std::move(specs), std::move(sols), id);
}

}  // namespace fixtures

#endif  // PARETO_LENS_TESTS_FIXTURES_HPP
