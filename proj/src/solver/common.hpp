// Shared internals of the evolutionary algorithms.

#ifndef PARETO_LENS_SOLVER_COMMON_HPP
#define PARETO_LENS_SOLVER_COMMON_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pareto_lens/momkp.hpp"
#include "pareto_lens/solver.hpp"

namespace pareto_lens::detail {

struct Individual {
  BitString bits;
  ObjectiveVector objectives;  ///< all p profits
};

/// Per-run state common to every algorithm: instance, mask, rates, rng.
class Breeder {
 public:
  Breeder(const MomkpInstance& inst, const SolverParams& params, std::vector<std::size_t> mask, std::uint64_t seed);

  Individual random_individual();
  Individual from_bits(BitString bits);
  /// Crossover (with the configured rate), mutation, repair and evaluation.
  std::pair<Individual, Individual> breed(const Individual& a, const Individual& b);
  /// As `breed`, keeping (and evaluating) only the first child.
  Individual breed_one(const Individual& a, const Individual& b);

  ObjectiveVector masked(const ObjectiveVector& full) const;
  const std::vector<std::size_t>& mask() const noexcept { return mask_; }
  Rng& rng() noexcept { return rng_; }

  /// Up to `count` individuals from `seeds` (without replacement while possible).
  std::vector<Individual> draw_seeds(std::span<const Solution> seeds, std::size_t count);

 private:
  const MomkpInstance& inst_;
  std::vector<std::size_t> mask_;
  double crossover_rate_;
  double mutation_rate_;
  Rng rng_;
};

std::vector<std::size_t> resolve_mask(const SolverParams& params, std::size_t p);

Solution to_solution(const Individual& ind, const std::string& origin);

}  // namespace pareto_lens::detail

#endif  // PARETO_LENS_SOLVER_COMMON_HPP
