#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "pareto_lens/ranges.hpp"
#include "pareto_lens/scatter.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(trim(item));
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) throw UsageError("not a finite number: '" + text + "'");
  return v;
}

}  // namespace

std::string tool_version() { return PARETO_LENS_VERSION; }

Json make_meta(const std::string& command) {
  Json meta;
  meta["tool"] = "pareto_lens";
  meta["version"] = tool_version();
  meta["command"] = command;
  return meta;
}

std::string meta_comment(const Json& meta) {
  std::string text = "meta: " + meta.dump();
  // "--" may not appear inside an XML comment.
  for (std::size_t pos = text.find("--"); pos != std::string::npos; pos = text.find("--", pos)) {
    text.replace(pos, 2, "-\\u002d");
  }
  return text;
}

void merge_into(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& doc) { write_file_atomic(path, dump_json(doc)); }

void ensure_directory(const std::filesystem::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

void check_not_input(const std::filesystem::path& out, const std::vector<std::string>& inputs) {
  std::error_code ec;
  if (!std::filesystem::exists(out, ec)) return;
  for (const auto& input : inputs) {
    if (std::filesystem::equivalent(out, input, ec)) {
      throw UsageError("refusing to overwrite input file '" + input + "' with '" + out.string() + "'");
    }
  }
}

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t limit) {
  std::vector<std::size_t> out;
  for (const auto& part : split_commas(text)) {
    std::size_t v = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (part.empty() || ec != std::errc() || ptr != end || v == 0) {
      throw UsageError("expected a comma-separated list of 1-based indices, got '" + text + "'");
    }
    if (limit != 0 && v > limit) {
      throw UsageError("index " + std::to_string(v) + " exceeds the " + std::to_string(limit) + " available");
    }
    if (std::find(out.begin(), out.end(), v - 1) != out.end()) {
      throw UsageError("index " + std::to_string(v) + " repeated");
    }
    out.push_back(v - 1);
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split_commas(text)) out.push_back(parse_double(part));
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

TiePolicy parse_tie_policy(const std::string& text) {
  if (text == "tau-a") return TiePolicy::TauA;
  if (text == "tau-b") return TiePolicy::TauB;
  throw UsageError("tie policy must be tau-a or tau-b, got '" + text + "'");
}

ThresholdPolicy ThresholdPolicy::parse(const std::string& policy, const std::string& explicit_thresholds,
                                       int resolution) {
  ThresholdPolicy p;
  if (resolution < 2) throw UsageError("--resolution must be at least 2");
  p.resolution = resolution;
  if (!explicit_thresholds.empty()) {
    p.kind = Kind::Explicit;
    p.values = parse_number_list(explicit_thresholds);
    return p;
  }
  if (policy == "min-empty-r0") {
    p.kind = Kind::MinEmptyR0;
  } else if (policy == "mean") {
    p.kind = Kind::Mean;
  } else if (policy.rfind("fixed:", 0) == 0) {
    p.kind = Kind::Fixed;
    p.level = parse_double(policy.substr(6));
    if (!(p.level > 0.0 && p.level < 1.0)) throw UsageError("fixed threshold level must lie in (0,1)");
  } else {
    throw UsageError("threshold policy must be min-empty-r0, mean or fixed:<level>, got '" + policy + "'");
  }
  return p;
}

std::string ThresholdPolicy::id() const {
  switch (kind) {
    case Kind::MinEmptyR0:
      return "min-empty-r0";
    case Kind::Mean:
      return "mean";
    case Kind::Fixed:
      return "fixed:" + format_number(level);
    case Kind::Explicit:
      return "explicit";
  }
  return {};
}

ThresholdChoice resolve_thresholds(const ThresholdPolicy& policy, const ApproximationSet& set) {
  ThresholdChoice choice;
  switch (policy.kind) {
    case ThresholdPolicy::Kind::MinEmptyR0: {
      choice.level = minimal_empty_r0_threshold(set, policy.resolution);
      if (choice.level) {
        choice.thresholds = level_thresholds(set, *choice.level);
      } else {
        choice.thresholds = mean_thresholds(set);
        choice.note = "r0 is occupied at every level; mean thresholds used instead";
      }
      break;
    }
    case ThresholdPolicy::Kind::Mean:
      choice.thresholds = mean_thresholds(set);
      break;
    case ThresholdPolicy::Kind::Fixed:
      choice.level = policy.level;
      choice.thresholds = level_thresholds(set, policy.level);
      break;
    case ThresholdPolicy::Kind::Explicit:
      if (policy.values.size() != set.objective_count()) {
        throw UsageError("--threshold needs " + std::to_string(set.objective_count()) + " values, got " +
                         std::to_string(policy.values.size()));
      }
      choice.thresholds = policy.values;
      break;
  }
  return choice;
}

Json region_map_json(const RegionMap& map) {
  Json doc;
  doc["m"] = map.m;
  doc["thresholds"] = map.thresholds;
  doc["total"] = map.total;
  doc["counts"] = map.counts;
  doc["percentages"] = map.percentages();
  return doc;
}

Json correlation_json(const ApproximationSet& set, TiePolicy policy) {
  Json doc;
  doc["instance"] = set.instance_id();
  doc["solutions"] = set.size();
  Json names = Json::array();
  for (const auto& s : set.specs()) names.push_back(s.name);
  doc["objectives"] = names;
  Json pairs = Json::array();
  if (set.size() >= 2) {
    for (const auto& r : pairwise_matrix(set, policy)) {
      Json p;
      p["i"] = r.i + 1;
      p["j"] = r.j + 1;
      p["tau"] = r.tau;
      p["kind"] = std::string(to_string(r.kind));
      pairs.push_back(p);
    }
  } else {
    doc["note"] = "fewer than two solutions; no correlation computed";
  }
  doc["pairs"] = pairs;
  return doc;
}

Json ranges_json(const ApproximationSet& set, const std::optional<std::vector<double>>& reference, double fraction) {
  const auto ref = reference ? RangeReference::from(*reference) : RangeReference::set_max();
  Json rows = Json::array();
  std::string policy;
  for (const auto& st : objective_ranges(set, ref)) {
    const auto verdict = classify_meaningful(st, fraction);
    policy = verdict.policy;
    Json row;
    row["objective"] = st.objective + 1;
    row["name"] = set.specs()[st.objective].name;
    row["min"] = st.min;
    row["max"] = st.max;
    row["mean"] = st.mean;
    row["range"] = st.range;
    row["range_fraction"] = st.range_fraction;
    row["meaningful"] = verdict.meaningful;
    rows.push_back(row);
  }
  Json doc;
  doc["instance"] = set.instance_id();
  doc["reference"] = reference ? Json(*reference) : Json("set-max");
  doc["policy"] = policy;
  doc["policy_note"] = "stand-in rule: the fraction-of-scale cutoff replaces a domain-specific categorisation";
  doc["ranges"] = rows;
  return doc;
}

std::string sweep_csv(std::span<const ApproximationSet> sets, int alpha, std::uint32_t region, const Json& meta) {
  Json full = meta;
  full["alpha"] = alpha;
  full["normalisation"] = "per-instance min-max";
  std::ostringstream csv;
  csv << "# " << meta_comment(full) << '\n';
  csv << "level,instances_with_r" << region << '\n';
  for (const auto& pt : threshold_sweep(sets, alpha, region)) {
    csv << format_number(pt.level) << ',' << pt.instances << '\n';
  }
  return csv.str();
}

PivotChoice select_pivot(const ApproximationSet& set, std::size_t requested) {
  PivotChoice choice;
  choice.spread = pivot_spread_scores(set);
  const auto m = set.objective_count();
  if (requested == 0) {
    choice.pivot = choose_pivot(set);
    choice.note = "pivot auto-chosen by spread score";
  } else {
    if (requested > m) throw UsageError("--pivot must lie in 1.." + std::to_string(m));
    choice.pivot = requested - 1;
  }
  const auto [lo, hi] = std::minmax_element(choice.spread.begin(), choice.spread.end());
  if (*lo < *hi && choice.spread[choice.pivot] == *lo) {
    choice.warning = "pivot " + set.specs()[choice.pivot].name +
                     " has the lowest spread score; the other objectives will look compressed";
  }
  return choice;
}

std::string numbers_text(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_number(values[i]);
  return s;
}

}  // namespace pareto_lens::cli
