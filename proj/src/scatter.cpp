#include "pareto_lens/scatter.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "pareto_lens/errors.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens {

namespace {

// Fixed palette, assigned by objective index.
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

ScatterSeries pivot_scatter(const ApproximationSet& set, std::size_t pivot) {
  if (set.empty()) throw InsufficientDataError("pivot_scatter: empty set");
  const std::size_t m = set.objective_count();
  if (pivot >= m) throw ArgumentError("pivot_scatter: pivot out of range");
  const auto norm = normalize(set);
  const auto x = norm.column(pivot);
  ScatterSeries out;
  out.pivot = pivot;
  out.pivot_name = set.specs()[pivot].name;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == pivot) continue;
    ScatterSeriesEntry entry{i, set.specs()[i].name, {}};
    const auto y = norm.column(i);
    entry.points.reserve(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) entry.points.push_back({x[k], y[k]});
    out.series.push_back(std::move(entry));
  }
  return out;
}

std::vector<double> pivot_spread_scores(const ApproximationSet& set) {
  if (set.empty()) throw InsufficientDataError("pivot_spread_scores: empty set");
  const auto norm = normalize(set);
  std::vector<double> scores;
  for (std::size_t i = 0; i < set.objective_count(); ++i) {
    const auto col = norm.column(i);
    const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size());
    double var = 0.0;
    for (double v : col) var += (v - mean) * (v - mean);
    scores.push_back(std::sqrt(var / static_cast<double>(col.size())));
  }
  return scores;
}

std::size_t choose_pivot(const ApproximationSet& set) {
  const auto scores = pivot_spread_scores(set);
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

std::string scatter_svg(const ScatterSeries& series, const std::string& title, const std::string& metadata_comment) {
  constexpr int kLeft = 60, kTop = 40, kSize = 480, kLegend = 140;
  const int width = kLeft + kSize + kLegend;
  const int height = kTop + kSize + 50;
  auto px = [&](double x) { return fixed(kLeft + x * kSize, 2); };
  auto py = [&](double y) { return fixed(kTop + (1.0 - y) * kSize, 2); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  if (!metadata_comment.empty()) svg << "<!-- " << metadata_comment << " -->\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) svg << "<text x=\"" << kLeft << "\" y=\"22\" font-size=\"15\">" << xml_escape(title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = t / 4.0;
    svg << "<text x=\"" << px(v) << "\" y=\"" << kTop + kSize + 16 << "\" text-anchor=\"middle\">" << fixed(v, 2)
        << "</text>\n";
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(v) << "\" text-anchor=\"end\">" << fixed(v, 2) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + kSize / 2 << "\" y=\"" << kTop + kSize + 36 << "\" text-anchor=\"middle\">"
      << xml_escape(series.pivot_name) << " (pivot, normalised)</text>\n";
  for (std::size_t s = 0; s < series.series.size(); ++s) {
    const auto& entry = series.series[s];
    const char* colour = kPalette[entry.objective % std::size(kPalette)];
    svg << "<g class=\"series\" fill=\"" << colour << "\">\n";
    for (const auto& p : entry.points) {
      svg << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"2.5\"/>\n";
    }
    svg << "</g>\n";
    const int ly = kTop + 10 + static_cast<int>(s) * 20;
    svg << "<rect x=\"" << kLeft + kSize + 16 << "\" y=\"" << ly - 9 << "\" width=\"10\" height=\"10\" fill=\"" << colour
        << "\"/>\n";
    svg << "<text x=\"" << kLeft + kSize + 32 << "\" y=\"" << ly << "\">" << xml_escape(entry.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string scatter_csv(const ScatterSeries& series, const std::string& metadata_comment) {
  std::ostringstream csv;
  if (!metadata_comment.empty()) csv << "# " << metadata_comment << '\n';
  csv << "# pivot: " << series.pivot + 1 << ' ' << series.pivot_name << '\n';
  csv << "# series:";
  for (const auto& e : series.series) csv << ' ' << e.objective + 1 << '=' << e.name;
  csv << '\n';
  csv << "series_objective,x,y\n";
  for (const auto& e : series.series) {
    for (const auto& p : e.points) csv << e.name << ',' << format_number(p.x) << ',' << format_number(p.y) << '\n';
  }
  return csv.str();
}

ScatterSeries parse_scatter_csv(const std::string& text) {
  ScatterSeries out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("# pivot: ")) {
      std::istringstream ls(line.substr(9));
      std::size_t idx = 0;
      if (!(ls >> idx >> out.pivot_name) || idx == 0) throw ParseError("bad pivot line", line_no);
      out.pivot = idx - 1;
    } else if (line.starts_with("# series:")) {
      std::istringstream ls(line.substr(9));
      std::string item;
      while (ls >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("bad series entry", line_no);
        out.series.push_back({std::stoul(item.substr(0, eq)) - 1, item.substr(eq + 1), {}});
      }
    } else if (line.front() == '#') {
      continue;
    } else if (!header_seen) {
      if (line != "series_objective,x,y") throw ParseError("unexpected header", line_no);
      header_seen = true;
    } else {
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) throw ParseError("expected 3 columns", line_no);
      const auto name = line.substr(0, c1);
      ScatterSeriesEntry* target = nullptr;
      for (auto& e : out.series) {
        if (e.name == name) target = &e;
      }
      if (!target) throw ParseError("unknown series '" + name + "'", line_no);
      target->points.push_back({std::stod(line.substr(c1 + 1, c2 - c1 - 1)), std::stod(line.substr(c2 + 1))});
    }
  }
  return out;
}

void render_scatter(const ScatterSeries& series, const std::filesystem::path& out, const std::string& title,
                    const std::string& metadata_comment) {
  write_file_atomic(out, scatter_svg(series, title, metadata_comment));
  auto csv_path = out;
  csv_path.replace_extension(".csv");
  write_file_atomic(csv_path, scatter_csv(series, metadata_comment));
}

}  // namespace pareto_lens
