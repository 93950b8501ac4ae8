#include "pareto_lens/ranges.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pareto_lens/errors.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens {

std::vector<RangeStats> objective_ranges(const ApproximationSet& set, const RangeReference& reference) {
  if (set.empty()) throw InsufficientDataError("objective_ranges: empty set");
  const std::size_t m = set.objective_count();
  if (reference.supplied && reference.supplied->size() != m) {
    throw DimensionError("objective_ranges: supplied reference has wrong arity");
  }
  std::vector<RangeStats> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto col = set.column(i);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    RangeStats s;
    s.objective = i;
    s.min = *lo;
    s.max = *hi;
    // Clamped so accumulated rounding cannot push the mean outside [min, max].
    s.mean = std::clamp(std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size()), s.min, s.max);
    s.range = s.max - s.min;
    const double scale =
        reference.supplied ? std::abs((*reference.supplied)[i]) : std::max(std::abs(s.min), std::abs(s.max));
    if (scale > 0.0) {
      s.range_fraction = s.range / scale;
    } else {
      s.range_fraction = s.range > 0.0 ? 1.0 : 0.0;
    }
    out.push_back(s);
  }
  return out;
}

MeaningfulnessVerdict classify_meaningful(const RangeStats& stats, double threshold_fraction) {
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0)) {
    throw ArgumentError("classify_meaningful: threshold fraction must lie in (0,1)");
  }
  return {stats.objective, stats.range_fraction >= threshold_fraction,
          "range_fraction>=" + format_number(threshold_fraction)};
}

}  // namespace pareto_lens
