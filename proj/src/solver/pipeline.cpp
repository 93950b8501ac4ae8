#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "pareto_lens/errors.hpp"
#include "pareto_lens/parallel.hpp"

namespace pareto_lens {

namespace {

constexpr int kSeededReplicates = 3;

std::vector<std::size_t> resolve_universe(std::size_t p, std::span<const std::size_t> universe) {
  if (!universe.empty()) return {universe.begin(), universe.end()};
  std::vector<std::size_t> all(p);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

std::string StageSpec::id() const {
  std::string out;
  switch (algorithm) {
    case Algorithm::SingleObjective: out = "soga"; break;
    case Algorithm::Nsga2: out = "nsga2"; break;
    case Algorithm::Decomposition: out = "moead"; break;
  }
  if (seeded) out += "-seeded";
  out += ':';
  for (std::size_t k = 0; k < objectives.size(); ++k) out += (k ? "," : "") + std::to_string(objectives[k] + 1);
  if (seeded) out += "#" + std::to_string(replicate);
  return out;
}

std::vector<StageSpec> pipeline_stages(std::size_t p, std::span<const std::size_t> universe_in) {
  if (p < 2) throw ArgumentError("pipeline_stages: need at least two objectives");
  const auto universe = resolve_universe(p, universe_in);
  if (universe.size() < 2) throw ArgumentError("pipeline_stages: need at least two objectives in the mask");
  using A = StageSpec::Algorithm;
  std::vector<StageSpec> stages;
  for (std::size_t k : universe) stages.push_back({A::SingleObjective, {k}, false, 0});
  const std::size_t u = universe.size();
  for (std::size_t a = 0; a < u; ++a) {
    for (std::size_t b = a + 1; b < u; ++b) {
      for (auto algo : {A::Nsga2, A::Decomposition}) stages.push_back({algo, {universe[a], universe[b]}, false, 0});
    }
  }
  for (std::size_t a = 0; a < u; ++a) {
    for (std::size_t b = a + 1; b < u; ++b) {
      for (std::size_t c = b + 1; c < u; ++c) {
        for (auto algo : {A::Nsga2, A::Decomposition}) {
          stages.push_back({algo, {universe[a], universe[b], universe[c]}, false, 0});
        }
      }
    }
  }
  for (auto algo : {A::Nsga2, A::Decomposition}) {
    for (int r = 1; r <= kSeededReplicates; ++r) stages.push_back({algo, universe, true, r});
  }
  return stages;
}

std::optional<StageSpec> find_stage(std::size_t p, const std::string& id, std::span<const std::size_t> universe) {
  for (auto& s : pipeline_stages(p, universe)) {
    if (s.id() == id) return s;
  }
  return std::nullopt;
}

std::vector<Solution> run_stage(const MomkpInstance& inst, const StageSpec& stage, const SolverParams& params,
                                std::span<const Solution> seeds) {
  SolverParams local = params;
  local.seed = derive_seed(params.seed, stage.id());
  local.objective_mask = stage.objectives;
  std::vector<Solution> out;
  switch (stage.algorithm) {
    case StageSpec::Algorithm::SingleObjective:
      out = soga(inst, stage.objectives.at(0), local);
      break;
    case StageSpec::Algorithm::Nsga2:
      out = nsga2_run(inst, local, stage.seeded ? seeds : std::span<const Solution>{}).entries();
      break;
    case StageSpec::Algorithm::Decomposition:
      out = decomposition_run(inst, local, {}, stage.seeded ? seeds : std::span<const Solution>{}).entries();
      break;
  }
  for (auto& s : out) s.origin = stage.id();
  return out;
}

ApproximationSet seeded_pipeline(const MomkpInstance& inst, const SolverParams& params, const std::string& instance_id) {
  params.validate(inst.p);
  const auto stages = pipeline_stages(inst.p, params.objective_mask);

  std::vector<StageSpec> first, second;
  for (const auto& s : stages) (s.seeded ? second : first).push_back(s);

  auto run_all = [&](const std::vector<StageSpec>& list, std::span<const Solution> seeds) {
    std::vector<std::vector<Solution>> results(list.size());
    parallel_for(list.size(), [&](std::size_t k) { results[k] = run_stage(inst, list[k], params, seeds); });
    return results;
  };

  Archive archive(default_specs(inst.p), params.objective_mask);
  for (auto& batch : run_all(first, {})) {
    for (auto& s : batch) archive.insert(std::move(s));
  }
  const std::vector<Solution> seeds = archive.entries();
  for (auto& batch : run_all(second, seeds)) {
    for (auto& s : batch) archive.insert(std::move(s));
  }
  return archive.to_set(instance_id);
}

}  // namespace pareto_lens
