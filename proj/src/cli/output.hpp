#ifndef PARETO_LENS_CLI_OUTPUT_HPP
#define PARETO_LENS_CLI_OUTPUT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pareto_lens/core.hpp"
#include "pareto_lens/correlation.hpp"
#include "pareto_lens/errors.hpp"
#include "pareto_lens/regionmap.hpp"

namespace CLI {
class App;
}

namespace pareto_lens::cli {

using Json = nlohmann::ordered_json;

/// Invalid flag values detected after parsing; reported with exit code 2.
class UsageError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// State shared by the subcommands of one invocation.
struct Context {
  std::ostream& out;
  std::ostream& err;
  /// Set by the selected subcommand's parse callback, run after parsing succeeds.
  std::function<void()> action;
};

void add_generate_command(CLI::App& app, Context& ctx);
void add_solve_command(CLI::App& app, Context& ctx);
void add_analyze_command(CLI::App& app, Context& ctx);
void add_report_command(CLI::App& app, Context& ctx);

std::string tool_version();

/// {"tool", "version", "command"} followed by whatever the caller adds.
Json make_meta(const std::string& command);

/// Compact single-line JSON, safe to place inside an XML comment.
std::string meta_comment(const Json& meta);

/// Copies every member of the object `src` into `dst`.
void merge_into(Json& dst, const Json& src);

void write_json(const std::filesystem::path& path, const Json& doc);
std::string dump_json(const Json& doc);

/// Creates `dir` (and parents); IoError on failure.
void ensure_directory(const std::filesystem::path& dir);

/// Throws UsageError when `out` names the same file as one of `inputs`.
void check_not_input(const std::filesystem::path& out, const std::vector<std::string>& inputs);

/// "1,3,4" -> {0,2,3}; rejects 0, duplicates and indices above `limit` (when non-zero).
std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t limit = 0);
std::vector<double> parse_number_list(const std::string& text);

TiePolicy parse_tie_policy(const std::string& text);

/**
 * @brief How thresholds are picked for a region map.
 *
 * `min-empty-r0` uses the smallest normalised level leaving r_0 empty,
 * `mean` the per-objective means, `fixed:<v>` the normalised level v, and
 * explicit raw thresholds override all of them.
 */
struct ThresholdPolicy {
  enum class Kind { MinEmptyR0, Mean, Fixed, Explicit };

  Kind kind = Kind::MinEmptyR0;
  double level = 0.0;
  ThresholdVector values;
  int resolution = kDefaultSweepAlpha;

  static ThresholdPolicy parse(const std::string& policy, const std::string& explicit_thresholds, int resolution);
  std::string id() const;
};

struct ThresholdChoice {
  ThresholdVector thresholds;
  std::optional<double> level;
  std::string note;
};

ThresholdChoice resolve_thresholds(const ThresholdPolicy& policy, const ApproximationSet& set);

Json region_map_json(const RegionMap& map);
Json correlation_json(const ApproximationSet& set, TiePolicy policy);
Json ranges_json(const ApproximationSet& set, const std::optional<std::vector<double>>& reference, double fraction);
std::string sweep_csv(std::span<const ApproximationSet> sets, int alpha, std::uint32_t region, const Json& meta);

struct PivotChoice {
  std::size_t pivot = 0;
  std::vector<double> spread;
  std::string note;
  std::string warning;
};

/// `requested` is 1-based; 0 picks the objective with the largest spread score.
PivotChoice select_pivot(const ApproximationSet& set, std::size_t requested);

std::string numbers_text(std::span<const double> values);

}  // namespace pareto_lens::cli

#endif  // PARETO_LENS_CLI_OUTPUT_HPP
