#ifndef PARETO_LENS_SCATTER_HPP
#define PARETO_LENS_SCATTER_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "pareto_lens/core.hpp"

namespace pareto_lens {

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const ScatterPoint&) const = default;
};

struct ScatterSeriesEntry {
  std::size_t objective = 0;  ///< 0-based objective plotted on y
  std::string name;
  std::vector<ScatterPoint> points;
  bool operator==(const ScatterSeriesEntry&) const = default;
};

/// Normalised pivot projection: x is the pivot objective, one series per other objective.
struct ScatterSeries {
  std::size_t pivot = 0;
  std::string pivot_name;
  std::vector<ScatterSeriesEntry> series;
  bool operator==(const ScatterSeries&) const = default;
};

ScatterSeries pivot_scatter(const ApproximationSet& set, std::size_t pivot);

/// Population standard deviation of each objective's normalised values.
std::vector<double> pivot_spread_scores(const ApproximationSet& set);

/// Objective with the largest spread score (lowest index on ties).
std::size_t choose_pivot(const ApproximationSet& set);

std::string scatter_svg(const ScatterSeries& series, const std::string& title = {},
                        const std::string& metadata_comment = {});
std::string scatter_csv(const ScatterSeries& series, const std::string& metadata_comment = {});

/// Parses the CSV twin back. Series names are taken from the file.
ScatterSeries parse_scatter_csv(const std::string& text);

/// Writes `out` (SVG) and its CSV twin next to it (same stem, .csv).
void render_scatter(const ScatterSeries& series, const std::filesystem::path& out, const std::string& title = {},
                    const std::string& metadata_comment = {});

}  // namespace pareto_lens

#endif  // PARETO_LENS_SCATTER_HPP
