#include "pareto_lens/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "output.hpp"

namespace pareto_lens::cli {

namespace {

int run_app(CLI::App& app, Context& ctx, const std::vector<std::string>& args) {
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    ctx.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    ctx.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    ctx.out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const ArgumentError& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  if (!ctx.action) {
    ctx.err << "error: no command given\n" << app.help();
    return kExitUsageError;
  }
  try {
    ctx.action();
  } catch (const ArgumentError& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    ctx.err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis and visualisation of relationships between objectives", "pareto_lens"};
  app.set_version_flag("--version", tool_version());
  app.set_config("--config", "", "TOML/INI file providing option values");
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err, {}};
  add_generate_command(app, ctx);
  add_solve_command(app, ctx);
  add_analyze_command(app, ctx);
  add_report_command(app, ctx);
  return run_app(app, ctx, args);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace pareto_lens::cli
