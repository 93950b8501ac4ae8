/**
 * @file cli.hpp
 * @brief Entry point of the `pareto_lens` command-line tool.
 */

#ifndef PARETO_LENS_CLI_HPP
#define PARETO_LENS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pareto_lens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

/// Parses `args` (without the program name), runs the subcommand and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pareto_lens::cli

#endif  // PARETO_LENS_CLI_HPP
