#ifndef PARETO_LENS_RANGES_HPP
#define PARETO_LENS_RANGES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pareto_lens/core.hpp"

namespace pareto_lens {

/// Default cut-off for `classify_meaningful`, as a fraction of the reference scale.
inline constexpr double kDefaultMeaningfulFraction = 0.05;

struct RangeStats {
  std::size_t objective = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double range = 0.0;
  /// range / reference scale
  double range_fraction = 0.0;
};

/// Scale that `range_fraction` is measured against: the per-objective maximum
/// magnitude observed in the set, or caller-supplied values (e.g. ideal points).
struct RangeReference {
  std::optional<std::vector<double>> supplied;

  static RangeReference set_max() { return {}; }
  static RangeReference from(std::vector<double> scale) { return {std::move(scale)}; }
};

struct MeaningfulnessVerdict {
  std::size_t objective = 0;
  bool meaningful = false;
  std::string policy;
};

std::vector<RangeStats> objective_ranges(const ApproximationSet& set,
                                         const RangeReference& reference = RangeReference::set_max());

/// Meaningful iff range_fraction >= threshold_fraction (inclusive).
MeaningfulnessVerdict classify_meaningful(const RangeStats& stats,
                                          double threshold_fraction = kDefaultMeaningfulFraction);

}  // namespace pareto_lens

#endif  // PARETO_LENS_RANGES_HPP
