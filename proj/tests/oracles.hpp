/**
 * @file oracles.hpp
 * @brief Slow, obviously-correct reference implementations used by the tests.
 *
 * Nothing here calls into the library's algorithms; the oracles only share
 * its plain data types.
 */

#ifndef PARETO_LENS_TESTS_ORACLES_HPP
#define PARETO_LENS_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "pareto_lens/core.hpp"
#include "pareto_lens/momkp.hpp"

namespace oracle {

using pareto_lens::ObjectiveSpec;
using pareto_lens::ObjectiveVector;

/// Componentwise dominance written out per sense.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b, const std::vector<ObjectiveSpec>& specs);

/// All-pairs filter; indices ascending, equal vectors kept at their first occurrence.
std::vector<std::size_t> nondominated(const std::vector<ObjectiveVector>& points,
                                      const std::vector<ObjectiveSpec>& specs);

struct PairCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_x = 0;  ///< pairs tied in x (including those tied in both)
  std::int64_t tied_y = 0;
  std::int64_t pairs = 0;
};

/// Literal enumeration of every unordered pair.
PairCounts count_pairs(const std::vector<double>& x, const std::vector<double>& y);
double tau_a(const std::vector<double>& x, const std::vector<double>& y);
double tau_b(const std::vector<double>& x, const std::vector<double>& y);

/// Profit sums accumulated objective by objective.
ObjectiveVector reevaluate(const pareto_lens::MomkpInstance& inst, const pareto_lens::BitString& x);
bool fits(const pareto_lens::MomkpInstance& inst, const pareto_lens::BitString& x);

/// Random point cloud with small integer values so ties and duplicates occur.
std::vector<ObjectiveVector> random_points(std::mt19937_64& gen, std::size_t count, std::size_t m, int max_value);

}  // namespace oracle

#endif  // PARETO_LENS_TESTS_ORACLES_HPP
