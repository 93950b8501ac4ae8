#include <ostream>

#include <CLI11.hpp>

#include "output.hpp"
#include "pareto_lens/momkp.hpp"
#include "pareto_lens/rng.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens::cli {

namespace {

struct GenerateOptions {
  std::string kind;
  std::size_t n = 1000;
  std::size_t m = 4;
  std::size_t p = 4;
  std::int64_t capacity = 50000;
  bool proportional = false;
  std::size_t count = 5;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string prefix;
};

void run_generate(const GenerateOptions& opt, Context& ctx) {
  const auto kind = parse_set_kind(opt.kind);
  if (!kind || *kind == SetKind::External) throw UsageError("--kind must be one of A, B, C, D, X");
  if (opt.n < 1) throw UsageError("--n must be positive");
  if (opt.count < 1) throw UsageError("--count must be positive");
  if (opt.capacity < 1) throw UsageError("--capacity must be positive");
  const auto rule = opt.proportional ? CapacityRule::proportional() : CapacityRule::fixed(opt.capacity);
  const std::string prefix = opt.prefix.empty() ? to_string(*kind) : opt.prefix;

  // Everything is generated before the first file is written.
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  for (std::size_t k = 1; k <= opt.count; ++k) {
    const auto seed = derive_seed(opt.seed, "generate:" + to_string(*kind) + ":" + std::to_string(k));
    const auto inst = generate(*kind, opt.n, opt.m, opt.p, rule, seed);
    auto meta = make_meta("generate");
    meta["kind"] = to_string(*kind);
    meta["index"] = k;
    meta["master_seed"] = opt.seed;
    meta["seed"] = seed;
    meta["n"] = opt.n;
    meta["m"] = opt.m;
    meta["p"] = opt.p;
    meta["capacity_rule"] = opt.proportional ? "proportional" : "fixed";
    meta["capacity"] = rule.capacity_for(opt.n);
    files.emplace_back(std::filesystem::path(opt.out_dir) / (prefix + "-" + std::to_string(k) + ".momkp"),
                       "# " + meta_comment(meta) + "\n" + instance_text(inst));
  }
  ensure_directory(opt.out_dir);
  for (const auto& [path, text] : files) {
    write_file_atomic(path, text);
    ctx.out << path.string() << '\n';
  }
}

}  // namespace

void add_generate_command(CLI::App& app, Context& ctx) {
  auto opt = std::make_shared<GenerateOptions>();
  auto* cmd = app.add_subcommand("generate", "Generate MOMKP instances of one set kind");
  cmd->add_option("--kind", opt->kind, "Set kind: A, B, C, D or X")->required();
  cmd->add_option("--n", opt->n, "Number of items")->capture_default_str();
  cmd->add_option("--m", opt->m, "Knapsack dimensions")->capture_default_str();
  cmd->add_option("--p", opt->p, "Profit objectives")->capture_default_str();
  cmd->add_option("--capacity", opt->capacity, "Capacity of every dimension")->capture_default_str();
  cmd->add_flag("--proportional", opt->proportional, "Use a capacity of 50 per item instead of --capacity");
  cmd->add_option("--count", opt->count, "Instances to generate")->capture_default_str();
  cmd->add_option("--seed", opt->seed, "Master seed; instance seeds are derived from it")->capture_default_str();
  cmd->add_option("--out-dir", opt->out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--prefix", opt->prefix, "File name prefix (default: the kind letter)");
  cmd->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_generate(*opt, ctx); }; });
}

}  // namespace pareto_lens::cli
