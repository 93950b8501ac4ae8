#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "pareto_lens/ranges.hpp"
#include "pareto_lens/scatter.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens::cli {

namespace {

struct AnalyzeOptions {
  std::vector<std::string> inputs;
  std::string out;
  std::string out_dir;
  // corr
  std::string tie_policy = "tau-a";
  std::string matrix_csv;
  // ranges
  std::string reference;
  double fraction = kDefaultMeaningfulFraction;
  // regionmap
  std::string threshold_policy = "min-empty-r0";
  std::string thresholds;
  int resolution = kDefaultSweepAlpha;
  std::string svg;
  // sweep
  int alpha = kDefaultSweepAlpha;
  std::uint32_t region = 0;
  // scatter
  std::size_t pivot = 0;
};

std::filesystem::path resolve(const AnalyzeOptions& opt, const std::string& name) {
  std::filesystem::path p(name);
  if (!opt.out_dir.empty() && p.is_relative()) p = std::filesystem::path(opt.out_dir) / p;
  check_not_input(p, opt.inputs);
  ensure_directory(p.parent_path());
  return p;
}

/// Writes to the --out path when given, stdout otherwise.
void emit(const AnalyzeOptions& opt, Context& ctx, const std::string& text) {
  if (opt.out.empty()) {
    ctx.out << text;
  } else {
    const auto path = resolve(opt, opt.out);
    write_file_atomic(path, text);
    ctx.out << "wrote " << path.string() << '\n';
  }
}

std::vector<ApproximationSet> load_all(const std::vector<std::string>& paths) {
  std::vector<ApproximationSet> sets;
  for (const auto& p : paths) sets.push_back(read_approximation_set(p));
  return sets;
}

void run_corr(const AnalyzeOptions& opt, Context& ctx) {
  const auto tie = parse_tie_policy(opt.tie_policy);
  const auto set = read_approximation_set(opt.inputs.at(0));
  auto meta = make_meta("analyze corr");
  meta["input"] = opt.inputs[0];
  meta["tie_policy"] = std::string(to_string(tie));
  meta["classification"] = "tau<-0.5 conflicting, tau>0.5 harmonious";
  Json doc;
  doc["meta"] = meta;
  merge_into(doc, correlation_json(set, tie));
  if (!opt.matrix_csv.empty()) {
    if (set.size() < 2) throw InsufficientDataError("correlation matrix needs at least two solutions");
    const auto m = set.objective_count();
    std::vector<double> matrix(m * m, 1.0);
    for (const auto& r : pairwise_matrix(set, tie)) matrix[r.i * m + r.j] = matrix[r.j * m + r.i] = r.tau;
    std::ostringstream csv;
    csv << "# " << meta_comment(meta) << "\nobjective";
    for (const auto& s : set.specs()) csv << ',' << s.name;
    csv << '\n';
    for (std::size_t i = 0; i < m; ++i) {
      csv << set.specs()[i].name;
      for (std::size_t j = 0; j < m; ++j) csv << ',' << format_number(matrix[i * m + j]);
      csv << '\n';
    }
    write_file_atomic(resolve(opt, opt.matrix_csv), csv.str());
  }
  emit(opt, ctx, dump_json(doc));
}

void run_ranges(const AnalyzeOptions& opt, Context& ctx) {
  if (!(opt.fraction > 0.0 && opt.fraction < 1.0)) throw UsageError("--fraction must lie in (0,1)");
  std::optional<std::vector<double>> reference;
  if (!opt.reference.empty()) reference = parse_number_list(opt.reference);
  const auto set = read_approximation_set(opt.inputs.at(0));
  auto meta = make_meta("analyze ranges");
  meta["input"] = opt.inputs[0];
  meta["fraction"] = opt.fraction;
  meta["reference"] = reference ? Json(*reference) : Json("set-max");
  Json doc;
  doc["meta"] = meta;
  merge_into(doc, ranges_json(set, reference, opt.fraction));
  emit(opt, ctx, dump_json(doc));
}

void run_regionmap(const AnalyzeOptions& opt, Context& ctx) {
  const auto policy = ThresholdPolicy::parse(opt.threshold_policy, opt.thresholds, opt.resolution);
  const auto sets = load_all(opt.inputs);
  const auto m = sets.front().objective_count();
  for (const auto& s : sets) {
    if (s.objective_count() != m) throw DimensionError("all inputs must have the same number of objectives");
  }
  auto meta = make_meta("analyze regionmap");
  meta["inputs"] = opt.inputs;
  meta["threshold_policy"] = policy.id();
  meta["resolution"] = policy.resolution;
  meta["goodness"] = "max: value>t, min: value<t";

  std::vector<RegionMap> maps;
  Json instances = Json::array();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto choice = resolve_thresholds(policy, sets[k]);
    maps.push_back(build_distribution_map(sets[k], choice.thresholds));
    Json entry;
    entry["input"] = opt.inputs[k];
    entry["level"] = choice.level ? Json(*choice.level) : Json(nullptr);
    if (!choice.note.empty()) entry["note"] = choice.note;
    merge_into(entry, region_map_json(maps.back()));
    instances.push_back(entry);
  }

  Json doc;
  std::vector<double> svg_values;
  std::vector<std::size_t> svg_counts;
  std::string title;
  if (sets.size() == 1) {
    meta["thresholds"] = maps[0].thresholds;
    doc["meta"] = meta;
    merge_into(doc, instances[0]);
    svg_values = maps[0].percentages();
    svg_counts = maps[0].counts;
    title = "Distribution of solutions: " + sets[0].instance_id();
  } else {
    const auto freq = build_frequency_map(maps);
    Json thresholds = Json::array();
    for (const auto& map : maps) thresholds.push_back(map.thresholds);
    meta["thresholds"] = thresholds;
    doc["meta"] = meta;
    doc["m"] = m;
    doc["instances"] = instances;
    doc["frequency"] = {{"instance_total", freq.instance_total},
                        {"counts", freq.counts},
                        {"percentages", freq.percentages()}};
    doc["average_percentages"] = average_percentages(maps);
    svg_values = freq.percentages();
    svg_counts = freq.counts;
    title = "Frequency of instances (" + std::to_string(sets.size()) + ")";
  }
  if (!opt.svg.empty()) {
    if (m >= 3 && m <= 5) {
      write_file_atomic(resolve(opt, opt.svg),
                        render_region_map_svg(gray_layout(m), svg_values, svg_counts, title, meta_comment(meta)));
    } else {
      ctx.err << "warning: region map drawings exist for 3 to 5 objectives; only the JSON table was written\n";
    }
  }
  emit(opt, ctx, dump_json(doc));
}

void run_sweep(const AnalyzeOptions& opt, Context& ctx) {
  if (opt.alpha < 2) throw UsageError("--alpha must be at least 2");
  const auto sets = load_all(opt.inputs);
  auto meta = make_meta("analyze sweep");
  meta["inputs"] = opt.inputs;
  meta["alpha"] = opt.alpha;
  meta["region"] = opt.region;
  meta["threshold_policy"] = "normalised level k/alpha per instance";
  emit(opt, ctx, sweep_csv(sets, opt.alpha, opt.region, meta));
}

void run_scatter(const AnalyzeOptions& opt, Context& ctx) {
  const auto set = read_approximation_set(opt.inputs.at(0));
  const auto choice = select_pivot(set, opt.pivot);
  auto meta = make_meta("analyze scatter");
  meta["input"] = opt.inputs[0];
  meta["pivot"] = choice.pivot + 1;
  meta["spread_scores"] = choice.spread;
  if (!choice.note.empty()) meta["note"] = choice.note;
  if (!choice.warning.empty()) {
    meta["warning"] = choice.warning;
    ctx.err << "warning: " << choice.warning << '\n';
  }
  const auto series = pivot_scatter(set, choice.pivot);
  const auto out = resolve(opt, opt.out.empty() ? set.instance_id() + ".scatter.svg" : opt.out);
  check_not_input(std::filesystem::path(out).replace_extension(".csv"), opt.inputs);
  render_scatter(series, out, "Pivot " + series.pivot_name + ": " + set.instance_id(), meta_comment(meta));
  ctx.out << "wrote " << out.string() << " (pivot " << series.pivot_name;
  if (!choice.note.empty()) ctx.out << ", " << choice.note;
  ctx.out << ")\n";
}

CLI::App* add_step(CLI::App& parent, const std::string& name, const std::string& help, AnalyzeOptions& opt,
                   bool multi_input) {
  auto* cmd = parent.add_subcommand(name, help);
  auto* in = cmd->add_option("--input,-i", opt.inputs, multi_input ? "Approximation set file(s)" : "Approximation set file")
                 ->required();
  if (!multi_input) in->expected(1);
  cmd->add_option("--out,-o", opt.out, "Output file (default: standard output)");
  cmd->add_option("--out-dir", opt.out_dir, "Directory for relative output paths");
  return cmd;
}

}  // namespace

void add_analyze_command(CLI::App& app, Context& ctx) {
  auto opt = std::make_shared<AnalyzeOptions>();
  auto* analyze = app.add_subcommand("analyze", "Run one analysis step");
  analyze->require_subcommand(1);

  auto* corr = add_step(*analyze, "corr", "Step 1: pairwise Kendall correlations", *opt, false);
  corr->add_option("--tie-policy", opt->tie_policy, "tau-a or tau-b")->capture_default_str();
  corr->add_option("--matrix-csv", opt->matrix_csv, "Also write the full tau matrix as CSV");
  corr->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_corr(*opt, ctx); }; });

  auto* ranges = add_step(*analyze, "ranges", "Step 2: objective ranges and meaningfulness", *opt, false);
  ranges->add_option("--reference", opt->reference, "Per-objective scale values (default: largest magnitude in the set)");
  ranges->add_option("--fraction", opt->fraction, "Meaningfulness cut-off as a fraction of the scale")
      ->capture_default_str();
  ranges->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_ranges(*opt, ctx); }; });

  auto* region = add_step(*analyze, "regionmap", "Step 3: trade-off region maps", *opt, true);
  region->add_option("--threshold-policy", opt->threshold_policy, "min-empty-r0, mean or fixed:<level>")
      ->capture_default_str();
  region->add_option("--threshold", opt->thresholds, "Explicit raw thresholds t1,...,tm (overrides the policy)");
  region->add_option("--resolution", opt->resolution, "Level grid used by min-empty-r0")->capture_default_str();
  region->add_option("--svg", opt->svg, "Also draw the map as SVG");
  region->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_regionmap(*opt, ctx); }; });

  auto* sweep = add_step(*analyze, "sweep", "Step 3: instances with solutions in a region across threshold levels",
                         *opt, true);
  sweep->add_option("--alpha", opt->alpha, "Number of equal parts")->capture_default_str();
  sweep->add_option("--region", opt->region, "Region number to track")->capture_default_str();
  sweep->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_sweep(*opt, ctx); }; });

  auto* scatter = add_step(*analyze, "scatter", "Step 4: normalised pivot scatter plot (SVG plus CSV)", *opt, false);
  scatter->add_option("--pivot", opt->pivot, "1-based pivot objective (default: largest spread)");
  scatter->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_scatter(*opt, ctx); }; });
}

}  // namespace pareto_lens::cli
