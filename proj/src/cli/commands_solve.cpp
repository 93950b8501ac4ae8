#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "pareto_lens/momkp.hpp"
#include "pareto_lens/set_io.hpp"
#include "pareto_lens/solver.hpp"

namespace pareto_lens::cli {

namespace {

struct SolveOptions {
  std::string instance;
  std::uint64_t seed = 1;
  std::size_t budget = 100000;
  std::size_t population = 200;
  std::string mask;
  std::string stage;
  std::optional<double> mutation_rate;
  double crossover_rate = 1.0;
  std::string out;
  std::string out_dir;
};

void run_solve(const SolveOptions& opt, Context& ctx) {
  const auto inst = read_instance(opt.instance);
  SolverParams params;
  params.seed = opt.seed;
  params.evaluations = opt.budget;
  params.population = opt.population;
  params.crossover_rate = opt.crossover_rate;
  params.mutation_rate = opt.mutation_rate;
  if (!opt.mask.empty()) params.objective_mask = parse_index_list(opt.mask, inst.p);
  params.validate(inst.p);

  const std::string id = std::filesystem::path(opt.instance).stem().string();
  std::vector<Solution> solutions;
  if (!opt.stage.empty()) {
    const auto stage = find_stage(inst.p, opt.stage, params.objective_mask);
    if (!stage) throw UsageError("unknown stage '" + opt.stage + "'");
    solutions = run_stage(inst, *stage, params);
  } else {
    solutions = seeded_pipeline(inst, params, id).solutions();
  }
  const ApproximationSet set(default_specs(inst.p), std::move(solutions), id);

  auto meta = make_meta("solve");
  meta["instance"] = opt.instance;
  meta["instance_kind"] = to_string(inst.kind);
  meta["instance_seed"] = inst.seed;
  meta["seed"] = opt.seed;
  meta["budget"] = opt.budget;
  meta["population"] = opt.population;
  meta["crossover_rate"] = opt.crossover_rate;
  meta["mutation_rate"] = opt.mutation_rate ? Json(*opt.mutation_rate) : Json("1/n");
  Json mask = Json::array();
  for (auto k : params.objective_mask) mask.push_back(k + 1);
  meta["mask"] = mask;
  meta["stage"] = opt.stage.empty() ? "pipeline" : opt.stage;

  std::filesystem::path out = opt.out.empty() ? std::filesystem::path(id + ".set.csv") : std::filesystem::path(opt.out);
  if (!opt.out_dir.empty() && out.is_relative()) out = std::filesystem::path(opt.out_dir) / out;
  ensure_directory(out.parent_path());
  std::ostringstream text;
  write_approximation_set(text, set, {{"meta", meta.dump()}});
  write_file_atomic(out, text.str());
  ctx.out << "wrote " << set.size() << " solutions to " << out.string() << '\n';
}

}  // namespace

void add_solve_command(CLI::App& app, Context& ctx) {
  auto opt = std::make_shared<SolveOptions>();
  auto* cmd = app.add_subcommand("solve", "Run the evolutionary pipeline (or one stage) on an instance");
  cmd->add_option("--instance", opt->instance, "Instance file")->required();
  cmd->add_option("--seed", opt->seed, "Master seed; stage seeds are derived from it")->capture_default_str();
  cmd->add_option("--budget", opt->budget, "Evaluations per stage")->capture_default_str();
  cmd->add_option("--population", opt->population, "Population size")->capture_default_str();
  cmd->add_option("--mask", opt->mask, "1-based objectives to optimise, e.g. 1,3 (default: all)");
  cmd->add_option("--stage", opt->stage, "Run a single stage, e.g. soga:1, nsga2:1,2, moead-seeded:1,2,3,4#1");
  cmd->add_option("--mutation-rate", opt->mutation_rate, "Per-bit flip probability (default 1/n)");
  cmd->add_option("--crossover-rate", opt->crossover_rate, "Crossover probability")->capture_default_str();
  cmd->add_option("--out", opt->out, "Output set file (default <instance stem>.set.csv)");
  cmd->add_option("--out-dir", opt->out_dir, "Directory for a relative --out");
  cmd->callback([opt, &ctx] { ctx.action = [opt, &ctx] { run_solve(*opt, ctx); }; });
}

}  // namespace pareto_lens::cli
