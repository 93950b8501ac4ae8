#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "pareto_lens/parallel.hpp"
#include "pareto_lens/ranges.hpp"
#include "pareto_lens/scatter.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens::cli {

namespace {

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string out_dir = "report";
  std::string tie_policy = "tau-a";
  std::string threshold_policy = "min-empty-r0";
  std::string thresholds;
  int resolution = kDefaultSweepAlpha;
  int alpha = kDefaultSweepAlpha;
  std::size_t pivot = 0;
  double fraction = kDefaultMeaningfulFraction;
};

/// Everything index.html needs about one input.
struct InputReport {
  std::string input;
  std::string dir;
  std::optional<ApproximationSet> set;
  Json corr;
  Json ranges;
  RegionMap map;
  std::optional<double> level;
  std::string threshold_note;
  bool map_drawn = false;
  std::size_t pivot = 0;
  std::string pivot_note;
  std::string warning;
};

std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(digits);
  ss << v;
  return ss.str();
}

/// Directory names from file stems, made unique with a numeric suffix.
std::vector<std::string> directory_names(const std::vector<std::string>& inputs) {
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (const auto& in : inputs) {
    std::string stem = std::filesystem::path(in).stem().string();
    if (stem.empty() || stem == "." || stem == "..") stem = "input";
    std::string name = stem;
    while (seen.count(name)) name = stem + "-" + std::to_string(++seen[stem]);
    seen[name] = 1;
    names.push_back(name);
  }
  return names;
}

void table_row(std::ostringstream& html, std::initializer_list<std::string> cells, bool header = false) {
  html << "<tr>";
  for (const auto& c : cells) html << (header ? "<th>" : "<td>") << c << (header ? "</th>" : "</td>");
  html << "</tr>\n";
}

std::string region_table(const RegionMap& map, const ApproximationSet& set) {
  std::ostringstream html;
  html << "<table>\n";
  table_row(html, {"region", "good objectives", "solutions", "%"}, true);
  const auto pct = map.percentages();
  for (std::uint32_t r = 0; r < map.counts.size(); ++r) {
    std::string good;
    for (std::size_t i = 0; i < map.m; ++i) {
      if (!((r >> i) & 1u)) good += (good.empty() ? "" : " ") + set.specs()[i].name;
    }
    table_row(html, {"r" + std::to_string(r), html_escape(good), std::to_string(map.counts[r]), fixed(100.0 * pct[r], 1)});
  }
  html << "</table>\n";
  return html.str();
}

void process_input(const ReportOptions& opt, const ThresholdPolicy& policy, TiePolicy tie, const Json& base_meta,
                   const std::filesystem::path& root, InputReport& rep) {
  rep.set = read_approximation_set(rep.input);
  const auto& set = *rep.set;
  if (set.empty()) throw InsufficientDataError(rep.input + ": no solutions");
  const auto dir = root / rep.dir;
  ensure_directory(dir);

  auto meta = base_meta;
  meta["input"] = rep.input;
  meta["instance"] = set.instance_id();

  rep.corr = correlation_json(set, tie);
  Json corr_doc;
  corr_doc["meta"] = meta;
  merge_into(corr_doc, rep.corr);
  write_json(dir / "corr.json", corr_doc);

  rep.ranges = ranges_json(set, std::nullopt, opt.fraction);
  Json ranges_doc;
  ranges_doc["meta"] = meta;
  merge_into(ranges_doc, rep.ranges);
  write_json(dir / "ranges.json", ranges_doc);

  const auto choice = resolve_thresholds(policy, set);
  rep.level = choice.level;
  rep.threshold_note = choice.note;
  rep.map = build_distribution_map(set, choice.thresholds);
  auto map_meta = meta;
  map_meta["thresholds"] = choice.thresholds;
  map_meta["level"] = choice.level ? Json(*choice.level) : Json(nullptr);
  if (!choice.note.empty()) map_meta["note"] = choice.note;
  Json map_doc;
  map_doc["meta"] = map_meta;
  map_doc["level"] = map_meta["level"];
  merge_into(map_doc, region_map_json(rep.map));
  write_json(dir / "regionmap.json", map_doc);
  const auto m = set.objective_count();
  if (m >= 3 && m <= 5) {
    const auto fractions = rep.map.percentages();
    write_file_atomic(dir / "regionmap.svg",
                      render_region_map_svg(gray_layout(m), fractions, rep.map.counts,
                                            "Distribution of solutions: " + set.instance_id(),
                                            meta_comment(map_meta)));
    rep.map_drawn = true;
  }

  const ApproximationSet single[] = {set};
  write_file_atomic(dir / "sweep.csv", sweep_csv(single, opt.alpha, 0, meta));

  const auto pivot = select_pivot(set, opt.pivot);
  rep.pivot = pivot.pivot;
  rep.pivot_note = pivot.note;
  rep.warning = pivot.warning;
  auto scatter_meta = meta;
  scatter_meta["pivot"] = pivot.pivot + 1;
  scatter_meta["spread_scores"] = pivot.spread;
  if (!pivot.note.empty()) scatter_meta["note"] = pivot.note;
  if (!pivot.warning.empty()) scatter_meta["warning"] = pivot.warning;
  render_scatter(pivot_scatter(set, pivot.pivot), dir / "scatter.svg",
                 "Pivot " + set.specs()[pivot.pivot].name + ": " + set.instance_id(), meta_comment(scatter_meta));
}

std::string index_html(const std::vector<InputReport>& reports, bool combined, const Json& meta) {
  std::ostringstream html;
  html << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>pareto_lens report</title>\n";
  html << "<!-- " << meta_comment(meta) << " -->\n";
  html << "<style>body{font-family:sans-serif;margin:2em}table{border-collapse:collapse;margin:0.5em 0}"
          "td,th{border:1px solid #999;padding:2px 8px;text-align:right}img{max-width:640px}</style>\n";
  html << "</head>\n<body>\n<h1>Objective relationship report</h1>\n";
  html << "<p>Tie policy: " << html_escape(meta.value("tie_policy", "")) << ". Threshold policy: "
       << html_escape(meta.value("threshold_policy", "")) << ".</p>\n";
  if (combined) {
    html << "<h2>All inputs</h2>\n<p><a href=\"frequency.json\">frequency.json</a> | "
         << "<a href=\"sweep.csv\">sweep.csv</a></p>\n";
    if (meta.contains("frequency_svg")) html << "<img src=\"frequency.svg\" alt=\"frequency of instances\">\n";
  }
  for (const auto& rep : reports) {
    const auto& set = *rep.set;
    const std::string d = rep.dir + "/";
    html << "<h2>" << html_escape(set.instance_id()) << "</h2>\n";
    html << "<p>Input <code>" << html_escape(rep.input) << "</code>, " << set.size() << " solutions, "
         << set.objective_count() << " objectives.</p>\n";

    html << "<h3>Step 1: pairwise relationships</h3>\n<p><a href=\"" << d << "corr.json\">corr.json</a></p>\n";
    if (rep.corr.contains("note")) html << "<p>" << html_escape(rep.corr["note"].get<std::string>()) << "</p>\n";
    html << "<table>\n";
    table_row(html, {"pair", "tau", "relationship"}, true);
    for (const auto& p : rep.corr["pairs"]) {
      const auto i = p["i"].get<std::size_t>() - 1, j = p["j"].get<std::size_t>() - 1;
      table_row(html, {html_escape(set.specs()[i].name + " / " + set.specs()[j].name),
                       fixed(p["tau"].get<double>(), 3), p["kind"].get<std::string>()});
    }
    html << "</table>\n";

    html << "<h3>Step 2: objective ranges</h3>\n<p><a href=\"" << d << "ranges.json\">ranges.json</a> ("
         << html_escape(rep.ranges["policy"].get<std::string>()) << ")</p>\n<table>\n";
    table_row(html, {"objective", "min", "max", "range", "range fraction", "meaningful"}, true);
    for (const auto& r : rep.ranges["ranges"]) {
      table_row(html, {html_escape(r["name"].get<std::string>()), format_number(r["min"].get<double>()),
                       format_number(r["max"].get<double>()), format_number(r["range"].get<double>()),
                       fixed(r["range_fraction"].get<double>(), 4), r["meaningful"].get<bool>() ? "yes" : "no"});
    }
    html << "</table>\n";

    html << "<h3>Step 3: trade-off regions</h3>\n<p>";
    if (rep.level) html << "Normalised threshold level " << format_number(*rep.level) << ". ";
    if (!rep.threshold_note.empty()) html << html_escape(rep.threshold_note) << ". ";
    html << "Thresholds " << html_escape(numbers_text(rep.map.thresholds)) << ". <a href=\"" << d
         << "regionmap.json\">regionmap.json</a> | <a href=\"" << d << "sweep.csv\">sweep.csv</a></p>\n";
    if (rep.map_drawn) {
      html << "<img src=\"" << d << "regionmap.svg\" alt=\"region map\">\n";
    } else {
      html << region_table(rep.map, set);
    }

    html << "<h3>Step 4: pivot scatter</h3>\n<p>Pivot " << html_escape(set.specs()[rep.pivot].name);
    if (!rep.pivot_note.empty()) html << " (" << html_escape(rep.pivot_note) << ")";
    html << ". <a href=\"" << d << "scatter.csv\">scatter.csv</a></p>\n";
    if (!rep.warning.empty()) html << "<p><strong>Warning:</strong> " << html_escape(rep.warning) << "</p>\n";
    html << "<img src=\"" << d << "scatter.svg\" alt=\"pivot scatter\">\n";
  }
  html << "</body>\n</html>\n";
  return html.str();
}

void run_report(const ReportOptions& opt, Context& ctx) {
  const auto tie = parse_tie_policy(opt.tie_policy);
  const auto policy = ThresholdPolicy::parse(opt.threshold_policy, opt.thresholds, opt.resolution);
  if (opt.alpha < 2) throw UsageError("--alpha must be at least 2");
  if (!(opt.fraction > 0.0 && opt.fraction < 1.0)) throw UsageError("--fraction must lie in (0,1)");

  auto meta = make_meta("report");
  meta["tie_policy"] = std::string(to_string(tie));
  meta["threshold_policy"] = policy.id();
  meta["resolution"] = policy.resolution;
  if (policy.kind == ThresholdPolicy::Kind::Explicit) meta["thresholds"] = policy.values;
  meta["alpha"] = opt.alpha;
  meta["fraction"] = opt.fraction;
  meta["pivot"] = opt.pivot == 0 ? Json("auto") : Json(opt.pivot);

  const std::filesystem::path root(opt.out_dir);
  ensure_directory(root);
  const auto dirs = directory_names(opt.inputs);
  std::vector<InputReport> reports(opt.inputs.size());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    reports[k].input = opt.inputs[k];
    reports[k].dir = dirs[k];
    for (const char* name : {"corr.json", "ranges.json", "regionmap.json", "regionmap.svg", "sweep.csv", "scatter.svg",
                             "scatter.csv"}) {
      check_not_input(root / dirs[k] / name, opt.inputs);
    }
  }
  for (const char* name : {"frequency.json", "frequency.svg", "sweep.csv", "index.html"}) {
    check_not_input(root / name, opt.inputs);
  }
  parallel_for(reports.size(), [&](std::size_t k) { process_input(opt, policy, tie, meta, root, reports[k]); });
  for (const auto& rep : reports) {
    if (!rep.warning.empty()) ctx.err << "warning: " << rep.set->instance_id() << ": " << rep.warning << '\n';
  }

  const bool combined = reports.size() > 1;
  auto index_meta = meta;
  index_meta["inputs"] = opt.inputs;
  if (combined) {
    const auto m = reports.front().set->objective_count();
    std::vector<RegionMap> maps;
    std::vector<ApproximationSet> sets;
    Json thresholds = Json::array();
    for (const auto& rep : reports) {
      if (rep.set->objective_count() != m) throw DimensionError("all inputs must have the same number of objectives");
      maps.push_back(rep.map);
      sets.push_back(*rep.set);
      thresholds.push_back(rep.map.thresholds);
    }
    const auto freq = build_frequency_map(maps);
    auto freq_meta = index_meta;
    freq_meta["thresholds"] = thresholds;
    Json doc;
    doc["meta"] = freq_meta;
    doc["m"] = m;
    doc["instance_total"] = freq.instance_total;
    doc["counts"] = freq.counts;
    doc["percentages"] = freq.percentages();
    doc["average_percentages"] = average_percentages(maps);
    write_json(root / "frequency.json", doc);
    if (m >= 3 && m <= 5) {
      const auto fractions = freq.percentages();
      write_file_atomic(root / "frequency.svg",
                        render_region_map_svg(gray_layout(m), fractions, freq.counts,
                                              "Frequency of instances (" + std::to_string(maps.size()) + ")",
                                              meta_comment(freq_meta)));
      index_meta["frequency_svg"] = true;
    }
    write_file_atomic(root / "sweep.csv", sweep_csv(sets, opt.alpha, 0, index_meta));
  }
  write_file_atomic(root / "index.html", index_html(reports, combined, index_meta));
  ctx.out << "wrote report for " << reports.size() << " input(s) to " << (root / "index.html").string() << '\n';
}

}  // namespace

void add_report_command(CLI::App& app, Context& ctx) {
  auto opt = std::make_shared<ReportOptions>();
  auto* cmd = app.add_subcommand("report", "Run all four analysis steps and write an HTML report");
  cmd->add_option("--input,-i", opt->inputs, "Approximation set file(s)")->required();
  cmd->add_option("--out-dir", opt->out_dir, "Report directory")->capture_default_str();
  cmd->add_option("--tie-policy", opt->tie_policy, "tau-a or tau-b")->capture_default_str();
  cmd->add_option("--threshold-policy", opt->threshold_policy, "min-empty-r0, mean or fixed:<level>")
      ->capture_default_str();
  cmd->add_option("--threshold", opt->thresholds, "Explicit raw thresholds t1,...,tm (overrides the policy)");
  cmd->add_option("--resolution", opt->resolution, "Level grid used by min-empty-r0")->capture_default_str();
  cmd->add_option("--alpha", opt->alpha, "Number of equal parts of the sweep")->capture_default_str();
  cmd->add_option("--pivot", opt->pivot, "1-based pivot objective (default: largest spread)");
  cmd->add_option("--fraction", opt->fraction, "Meaningfulness cut-off")->capture_default_str();
  cmd->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_report(*opt, ctx); }; });
}

}  // namespace pareto_lens::cli
