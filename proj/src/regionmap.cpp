#include "pareto_lens/regionmap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

void check_arity(std::size_t m) {
  if (m < 1 || m > kMaxRegionObjectives) {
    throw ArgumentError("region maps support 1.." + std::to_string(kMaxRegionObjectives) + " objectives");
  }
}

std::vector<double> as_percentages(std::span<const std::size_t> counts, std::size_t total) {
  std::vector<double> out(counts.size(), 0.0);
  if (total == 0) return out;
  for (std::size_t k = 0; k < counts.size(); ++k) out[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
  return out;
}

std::string describe_code(std::uint32_t code, std::size_t first_objective, std::size_t bits) {
  std::string out;
  for (std::size_t b = 0; b < bits; ++b) {
    if (b) out += ", ";
    out += "Z" + std::to_string(first_objective + b) + (((code >> b) & 1U) ? " bad" : " good");
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<double> RegionMap::percentages() const { return as_percentages(counts, total); }

std::vector<double> FrequencyMap::percentages() const { return as_percentages(counts, instance_total); }

std::uint32_t region_index(std::span<const double> v, std::span<const double> thresholds,
                           std::span<const ObjectiveSpec> specs) {
  if (v.size() != specs.size() || thresholds.size() != specs.size()) {
    throw ArgumentError("region_index: vector, thresholds and specs differ in length");
  }
  check_arity(specs.size());
  std::uint32_t region = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!better(v[i], thresholds[i], specs[i])) region |= 1U << i;
  }
  return region;
}

std::size_t good_objectives(std::uint32_t region, std::size_t m) {
  return m - static_cast<std::size_t>(std::popcount(region));
}

RegionMap build_distribution_map(const ApproximationSet& set, const ThresholdVector& thresholds) {
  if (set.empty()) throw InsufficientDataError("build_distribution_map: empty set");
  const std::size_t m = set.objective_count();
  check_arity(m);
  if (thresholds.size() != m) throw ArgumentError("build_distribution_map: threshold arity mismatch");
  for (double t : thresholds) {
    if (!std::isfinite(t)) throw ArgumentError("build_distribution_map: thresholds must be finite");
  }
  RegionMap map{m, thresholds, std::vector<std::size_t>(std::size_t{1} << m, 0), set.size()};
  for (const auto& s : set.solutions()) ++map.counts[region_index(s.objectives, thresholds, set.specs())];
  return map;
}

FrequencyMap build_frequency_map(std::span<const RegionMap> maps) {
  FrequencyMap freq;
  if (maps.empty()) return freq;
  freq.m = maps.front().m;
  freq.counts.assign(maps.front().counts.size(), 0);
  for (const auto& map : maps) {
    if (map.m != freq.m || map.counts.size() != freq.counts.size()) {
      throw ArgumentError("build_frequency_map: maps have different objective counts");
    }
    for (std::size_t k = 0; k < map.counts.size(); ++k) freq.counts[k] += map.counts[k] > 0 ? 1 : 0;
  }
  freq.instance_total = maps.size();
  return freq;
}

std::vector<double> average_percentages(std::span<const RegionMap> maps) {
  if (maps.empty()) return {};
  std::vector<double> avg(maps.front().counts.size(), 0.0);
  for (const auto& map : maps) {
    if (map.counts.size() != avg.size()) throw ArgumentError("average_percentages: maps have different objective counts");
    const auto pct = map.percentages();
    for (std::size_t k = 0; k < avg.size(); ++k) avg[k] += pct[k];
  }
  for (double& v : avg) v /= static_cast<double>(maps.size());
  return avg;
}

GrayLayout gray_layout(std::size_t m) {
  if (m < 3 || m > 5) throw UnsupportedArityError("printable region layouts exist for 3, 4 or 5 objectives");
  GrayLayout layout;
  layout.m = m;
  layout.col_codes = {0, 1, 3, 2};
  layout.row_codes = m == 3 ? std::vector<std::uint32_t>{0, 1} : std::vector<std::uint32_t>{0, 1, 3, 2};
  const std::size_t block_count = m == 5 ? 2 : 1;
  for (std::size_t b = 0; b < block_count; ++b) {
    GrayLayout::Block block;
    block.rows = layout.row_codes.size();
    block.cols = layout.col_codes.size();
    for (auto rc : layout.row_codes) {
      for (auto cc : layout.col_codes) block.cells.push_back(static_cast<std::uint32_t>(b << 4) | rc << 2 | cc);
    }
    layout.blocks.push_back(std::move(block));
  }
  return layout;
}

std::vector<std::uint32_t> GrayLayout::neighbours(std::uint32_t region) const {
  std::vector<std::uint32_t> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    for (std::size_t r = 0; r < blk.rows; ++r) {
      for (std::size_t c = 0; c < blk.cols; ++c) {
        if (blk.at(r, c) != region) continue;
        out.push_back(blk.at((r + 1) % blk.rows, c));
        out.push_back(blk.at((r + blk.rows - 1) % blk.rows, c));
        out.push_back(blk.at(r, (c + 1) % blk.cols));
        out.push_back(blk.at(r, (c + blk.cols - 1) % blk.cols));
        for (std::size_t other = 0; other < blocks.size(); ++other) {
          if (other != b) out.push_back(blocks[other].at(r, c));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, region);
  return out;
}

std::string GrayLayout::column_label(std::size_t col) const { return describe_code(col_codes.at(col), 1, 2); }

std::string GrayLayout::row_label(std::size_t row) const {
  return describe_code(row_codes.at(row), 3, m == 3 ? 1 : 2);
}

std::string GrayLayout::block_label(std::size_t block) const {
  if (blocks.size() == 1) return {};
  return block == 0 ? "Z5 good" : "Z5 bad";
}

ThresholdVector level_thresholds(const ApproximationSet& set, double level) {
  if (set.empty()) throw InsufficientDataError("level_thresholds: empty set");
  ThresholdVector t(set.objective_count());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto col = set.column(i);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const bool maximise = set.specs()[i].sense == Sense::Maximise;
    if (*hi - *lo <= 0.0) {
      t[i] = maximise ? std::nextafter(*lo, -std::numeric_limits<double>::infinity())
                      : std::nextafter(*hi, std::numeric_limits<double>::infinity());
    } else {
      t[i] = maximise ? *lo + level * (*hi - *lo) : *hi - level * (*hi - *lo);
    }
  }
  return t;
}

ThresholdVector mean_thresholds(const ApproximationSet& set) {
  if (set.empty()) throw InsufficientDataError("mean_thresholds: empty set");
  ThresholdVector t(set.objective_count());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto col = set.column(i);
    t[i] = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size());
  }
  return t;
}

std::vector<SweepPoint> threshold_sweep(std::span<const ApproximationSet> sets, int alpha, std::uint32_t region) {
  if (alpha < 2) throw ArgumentError("threshold_sweep: alpha must be at least 2");
  if (sets.empty()) throw InsufficientDataError("threshold_sweep: no sets");
  for (const auto& s : sets) {
    if (s.empty()) throw InsufficientDataError("threshold_sweep: empty set '" + s.instance_id() + "'");
    if (region >= (std::uint32_t{1} << s.objective_count())) throw ArgumentError("threshold_sweep: region out of range");
  }
  std::vector<SweepPoint> curve;
  for (int k = 1; k < alpha; ++k) {
    const double level = static_cast<double>(k) / alpha;
    SweepPoint point{level, 0};
    for (const auto& s : sets) {
      const auto t = level_thresholds(s, level);
      const bool hit = std::any_of(s.solutions().begin(), s.solutions().end(), [&](const Solution& sol) {
        return region_index(sol.objectives, t, s.specs()) == region;
      });
      point.instances += hit ? 1 : 0;
    }
    curve.push_back(point);
  }
  return curve;
}

std::optional<double> minimal_empty_r0_threshold(const ApproximationSet& set, int resolution) {
  if (resolution < 2) throw ArgumentError("minimal_empty_r0_threshold: resolution must be at least 2");
  if (set.empty()) return 1.0 / resolution;
  for (int k = 1; k < resolution; ++k) {
    const double level = static_cast<double>(k) / resolution;
    const auto t = level_thresholds(set, level);
    const bool occupied = std::any_of(set.solutions().begin(), set.solutions().end(), [&](const Solution& sol) {
      return region_index(sol.objectives, t, set.specs()) == 0;
    });
    if (!occupied) return level;
  }
  return std::nullopt;
}

ThresholdVector maximal_all_good_threshold(const ApproximationSet& set) {
  if (set.empty()) throw InsufficientDataError("maximal_all_good_threshold: empty set");
  ThresholdVector t(set.objective_count());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto col = set.column(i);
    t[i] = set.specs()[i].sense == Sense::Maximise ? *std::min_element(col.begin(), col.end())
                                                   : *std::max_element(col.begin(), col.end());
  }
  return t;
}

std::string render_region_map_svg(const GrayLayout& layout, std::span<const double> values,
                                  std::span<const std::size_t> counts, const std::string& title,
                                  const std::string& metadata_comment) {
  static constexpr const char* kShade[] = {"#FFFFFF", "#EFEFEF", "#C0C0C0", "#9B9B9B", "#656565", "#343434"};
  const std::size_t region_count = std::size_t{1} << layout.m;
  if (values.size() != region_count) throw ArgumentError("render_region_map_svg: need one value per region");
  if (!counts.empty() && counts.size() != region_count) throw ArgumentError("render_region_map_svg: count arity");

  constexpr int kCellW = 96, kCellH = 56, kLeft = 150, kTop = 70, kGap = 60;
  const auto& first = layout.blocks.front();
  const int block_w = static_cast<int>(first.cols) * kCellW;
  const int width = kLeft + static_cast<int>(layout.blocks.size()) * (block_w + kGap) + 20;
  const int height = kTop + static_cast<int>(first.rows) * kCellH + 60;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  if (!metadata_comment.empty()) svg << "<!-- " << metadata_comment << " -->\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"10\" y=\"20\" font-size=\"15\">" << xml_escape(title) << "</text>\n";
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
    const auto& blk = layout.blocks[b];
    const int x0 = kLeft + static_cast<int>(b) * (block_w + kGap);
    if (const auto label = layout.block_label(b); !label.empty()) {
      svg << "<text x=\"" << x0 + block_w / 2 << "\" y=\"40\" text-anchor=\"middle\">" << label << "</text>\n";
    }
    for (std::size_t c = 0; c < blk.cols; ++c) {
      svg << "<text x=\"" << x0 + static_cast<int>(c) * kCellW + kCellW / 2 << "\" y=\"" << kTop - 8
          << "\" text-anchor=\"middle\" font-size=\"10\">" << layout.column_label(c) << "</text>\n";
    }
    for (std::size_t r = 0; r < blk.rows; ++r) {
      const int y = kTop + static_cast<int>(r) * kCellH;
      if (b == 0) {
        svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + kCellH / 2 + 4
            << "\" text-anchor=\"end\" font-size=\"10\">" << layout.row_label(r) << "</text>\n";
      }
      for (std::size_t c = 0; c < blk.cols; ++c) {
        const std::uint32_t region = blk.at(r, c);
        const int x = x0 + static_cast<int>(c) * kCellW;
        const auto bad = static_cast<std::size_t>(std::popcount(region));
        const char* fill = kShade[std::min<std::size_t>(bad, 5)];
        const char* ink = bad >= 4 ? "#FFFFFF" : "#000000";
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCellW << "\" height=\"" << kCellH
            << "\" fill=\"" << fill << "\" stroke=\"#000000\"/>\n";
        svg << "<text x=\"" << x + kCellW / 2 << "\" y=\"" << y + 20 << "\" text-anchor=\"middle\" fill=\"" << ink
            << "\">r" << region << "</text>\n";
        std::string body = fixed(100.0 * values[region], 1) + "%";
        if (!counts.empty()) body += " (" + std::to_string(counts[region]) + ")";
        svg << "<text x=\"" << x + kCellW / 2 << "\" y=\"" << y + 40 << "\" text-anchor=\"middle\" fill=\"" << ink
            << "\">" << body << "</text>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pareto_lens
