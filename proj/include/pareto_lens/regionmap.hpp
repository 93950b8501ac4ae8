/**
 * @file regionmap.hpp
 * @brief Trade-off region maps.
 *
 * Each solution is classified good/bad per objective against a threshold and
 * lands in region r_k, where bit i of k is 0 iff objective Z_{i+1} is good.
 * Good means strictly above the threshold for a maximised objective and
 * strictly below it for a minimised one; a value equal to its threshold is bad.
 */

#ifndef PARETO_LENS_REGIONMAP_HPP
#define PARETO_LENS_REGIONMAP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pareto_lens/core.hpp"

namespace pareto_lens {

using ThresholdVector = std::vector<double>;

/// Region maps are stored densely; beyond this arity 2^m counters get silly.
inline constexpr std::size_t kMaxRegionObjectives = 20;

/// Default alpha (number of equal parts) of a threshold sweep.
inline constexpr int kDefaultSweepAlpha = 50;

struct RegionMap {
  std::size_t m = 0;
  ThresholdVector thresholds;
  std::vector<std::size_t> counts;  ///< 2^m entries indexed by region number
  std::size_t total = 0;

  /// counts / total, summing to 1 (all zero for an empty map).
  std::vector<double> percentages() const;
};

struct FrequencyMap {
  std::size_t m = 0;
  std::vector<std::size_t> counts;  ///< instances with at least one solution in each region
  std::size_t instance_total = 0;

  /// counts / instance_total.
  std::vector<double> percentages() const;
};

/**
 * @brief Karnaugh-style placement of the 2^m regions.
 *
 * One block for 3 or 4 objectives, two blocks (Z5 good | Z5 bad) for 5.
 * Inside a block the cell at (row, col) holds region
 * `row_codes[row] << 2 | col_codes[col]`, plus 16 in the second block.
 * Column codes run over (Z1,Z2) and row codes over (Z3[,Z4]) in reflected
 * Gray order, as in a Karnaugh map.
 */
struct GrayLayout {
  struct Block {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> cells;  ///< row-major region numbers
    std::uint32_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
  };

  std::size_t m = 0;
  std::vector<Block> blocks;
  std::vector<std::uint32_t> row_codes;
  std::vector<std::uint32_t> col_codes;

  /// Cells sharing an edge with `region` (wrap-around inside a block, and the
  /// same position in the other block), without duplicates, ascending.
  std::vector<std::uint32_t> neighbours(std::uint32_t region) const;

  /// e.g. "Z1 good, Z2 bad" for column 1.
  std::string column_label(std::size_t col) const;
  std::string row_label(std::size_t row) const;
  std::string block_label(std::size_t block) const;
};

std::uint32_t region_index(std::span<const double> v, std::span<const double> thresholds,
                           std::span<const ObjectiveSpec> specs);

/// Number of good objectives a solution in `region` has.
std::size_t good_objectives(std::uint32_t region, std::size_t m);

RegionMap build_distribution_map(const ApproximationSet& set, const ThresholdVector& thresholds);

FrequencyMap build_frequency_map(std::span<const RegionMap> maps);

/// Mean of the per-map percentages, region by region.
std::vector<double> average_percentages(std::span<const RegionMap> maps);

GrayLayout gray_layout(std::size_t m);

/**
 * @brief Thresholds realising a normalised level on every objective.
 *
 * Level 0 sits at an objective's worst observed value and level 1 at its best.
 * An objective with no spread gets a threshold just past its worst value, so it
 * never makes a solution bad.
 */
ThresholdVector level_thresholds(const ApproximationSet& set, double level);

/// Per-objective mean values.
ThresholdVector mean_thresholds(const ApproximationSet& set);

struct SweepPoint {
  double level = 0.0;
  std::size_t instances = 0;  ///< sets with at least one solution in the swept region
};

/// Evaluates levels k/alpha for k = 1..alpha-1, each set normalised on its own.
std::vector<SweepPoint> threshold_sweep(std::span<const ApproximationSet> sets, int alpha, std::uint32_t region = 0);

/**
 * Smallest level k/resolution (k = 1..resolution-1) at which region r_0 is
 * empty; nullopt when r_0 stays occupied up to the top of the grid.
 */
std::optional<double> minimal_empty_r0_threshold(const ApproximationSet& set, int resolution = kDefaultSweepAlpha);

/**
 * Boundary below which every solution is good in every objective: the
 * per-objective worst value. Because goodness is strict, any threshold
 * strictly beyond the returned value on the worse side keeps all solutions
 * good; the boundary itself does not.
 */
ThresholdVector maximal_all_good_threshold(const ApproximationSet& set);

std::string render_region_map_svg(const GrayLayout& layout, std::span<const double> values,
                                  std::span<const std::size_t> counts, const std::string& title,
                                  const std::string& metadata_comment = {});

}  // namespace pareto_lens

#endif  // PARETO_LENS_REGIONMAP_HPP
