/**
 * @file solver.hpp
 * @brief Evolutionary machinery producing MOMKP approximation sets.
 *
 * All algorithms work on bit strings, repair every offspring to feasibility
 * before evaluating it, and are deterministic given their seed.
 */

#ifndef PARETO_LENS_SOLVER_HPP
#define PARETO_LENS_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pareto_lens/core.hpp"
#include "pareto_lens/momkp.hpp"
#include "pareto_lens/rng.hpp"

namespace pareto_lens {

struct SolverParams {
  std::size_t population = 200;
  /// Evaluation budget of one run (initial population included).
  std::size_t evaluations = 100000;
  double crossover_rate = 1.0;
  /// Per-bit flip probability; 1/n when unset.
  std::optional<double> mutation_rate;
  std::uint64_t seed = 1;
  /// 0-based objectives the run optimises; empty means all.
  std::vector<std::size_t> objective_mask;

  /// Throws ArgumentError unless population >= 2 and even, evaluations >= population,
  /// rates in [0,1] and the mask is valid for `p` objectives.
  void validate(std::size_t p) const;
};

struct DecompositionParams {
  std::size_t neighbourhood = 20;
  /// At most this many neighbours adopt one child.
  std::size_t replacement_limit = 2;
  /// Explicit weight vectors (one per subproblem, arity |mask|). When empty a
  /// simplex lattice with at most `population` points is used.
  std::vector<std::vector<double>> weights;
};

/**
 * @brief Solutions that are mutually non-dominated on a subset of objectives.
 *
 * Objective vectors are always stored in full (all p profits); `mask` picks
 * the objectives used for dominance. Identical masked vectors are kept once.
 */
class Archive {
 public:
  Archive(std::vector<ObjectiveSpec> specs, std::vector<std::size_t> mask = {});

  /// Adds `s` unless an entry dominates or equals it; evicts entries it dominates.
  bool insert(Solution s);

  const std::vector<Solution>& entries() const noexcept { return entries_; }
  const std::vector<ObjectiveSpec>& specs() const noexcept { return specs_; }
  const std::vector<std::size_t>& mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return entries_.size(); }

  ApproximationSet to_set(const std::string& instance_id = {}) const;

 private:
  std::vector<ObjectiveSpec> specs_;
  std::vector<std::size_t> mask_;
  std::vector<ObjectiveSpec> masked_specs_;
  std::vector<Solution> entries_;
  std::vector<ObjectiveVector> masked_;
};

/// Half-uniform crossover: swaps floor(h/2) of the h differing bits, chosen uniformly.
std::pair<BitString, BitString> hux_crossover(const BitString& a, const BitString& b, Rng& rng);

/// Flips each bit independently with probability `rate`.
void bit_flip_mutation(BitString& x, double rate, Rng& rng);

/// Fronts of a maximisation problem (Deb's fast non-dominated sort); front 0 first.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> points);

/// Crowding distance of each member of `front` (same order); boundary members get +infinity.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> points, std::span<const std::size_t> front);

/// Uniform simplex lattice with the largest number of divisions whose size does not exceed `max_points`.
std::vector<std::vector<double>> simplex_lattice(std::size_t objectives, std::size_t max_points);

/// Greedy profit-density fill for one objective; used as a reference lower bound.
Selection greedy_density(const MomkpInstance& inst, std::size_t objective);

/// Generational GA on one objective with elitism; returns the best-of-run solution.
std::vector<Solution> soga(const MomkpInstance& inst, std::size_t objective, const SolverParams& params);

/// NSGA-II on params.objective_mask (must name >= 2 objectives); half of the
/// initial population is drawn from `seeds` when it is non-empty.
Archive nsga2_run(const MomkpInstance& inst, const SolverParams& params, std::span<const Solution> seeds = {});

/// MOEA/D with weighted Tchebycheff scalarisation and an external archive.
Archive decomposition_run(const MomkpInstance& inst, const SolverParams& params,
                          const DecompositionParams& dparams = {}, std::span<const Solution> seeds = {});

struct StageSpec {
  enum class Algorithm { SingleObjective, Nsga2, Decomposition };

  Algorithm algorithm = Algorithm::Nsga2;
  std::vector<std::size_t> objectives;  ///< 0-based
  bool seeded = false;
  int replicate = 0;

  /// Stable identifier, e.g. "soga:1", "nsga2:1,3", "moead-seeded:1,2,3,4#2".
  std::string id() const;
};

/**
 * Stage list over `universe` (all p objectives when empty): one single-objective
 * GA per objective, NSGA-II and MOEA/D per pair and per triplet, then three
 * seeded NSGA-II and three seeded MOEA/D runs over the whole universe.
 */
std::vector<StageSpec> pipeline_stages(std::size_t p, std::span<const std::size_t> universe = {});

std::optional<StageSpec> find_stage(std::size_t p, const std::string& id, std::span<const std::size_t> universe = {});

/// Runs one stage with seed derive_seed(params.seed, stage.id()).
std::vector<Solution> run_stage(const MomkpInstance& inst, const StageSpec& stage, const SolverParams& params,
                                std::span<const Solution> seeds = {});

/**
 * Full archive-seeded pipeline. Unseeded stages run independently (in
 * parallel), their results are merged, then the seeded stages start from that
 * archive. Returns the non-dominated union of everything found, with
 * decision vectors, dominance taken over params.objective_mask (all when empty).
 */
ApproximationSet seeded_pipeline(const MomkpInstance& inst, const SolverParams& params,
                                 const std::string& instance_id = {});

}  // namespace pareto_lens

#endif  // PARETO_LENS_SOLVER_HPP
