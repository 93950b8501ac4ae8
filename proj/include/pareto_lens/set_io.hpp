#ifndef PARETO_LENS_SET_IO_HPP
#define PARETO_LENS_SET_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pareto_lens/core.hpp"

namespace pareto_lens {

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

/**
 * Approximation-set CSV:
 *
 *     # objectives: Z1:max,Z2:max,Z3:min
 *     # instance: C-1
 *     45,68,85
 *     6,63,99|0110010
 *
 * Any other `#` line is a comment. A row may carry the decision bit string
 * after a `|`. Rows of the wrong arity are rejected with their line number.
 * When no `# instance:` line exists `default_id` is used.
 */
ApproximationSet parse_approximation_set(std::istream& in, const std::string& default_id = {});
ApproximationSet read_approximation_set(const std::filesystem::path& path);

/// Writes the CSV form; `comments` become extra `# key: value` lines.
void write_approximation_set(std::ostream& out, const ApproximationSet& set,
                             const std::vector<std::pair<std::string, std::string>>& comments = {});

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace pareto_lens

#endif  // PARETO_LENS_SET_IO_HPP
