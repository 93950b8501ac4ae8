#include <numeric>

#include "common.hpp"
#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

// Primary key: the optimised profit. Ties go to the larger total profit so the
// returned solution is not needlessly dominated.
bool fitter(const detail::Individual& a, const detail::Individual& b, std::size_t objective) {
  if (a.objectives[objective] != b.objectives[objective]) return a.objectives[objective] > b.objectives[objective];
  return std::accumulate(a.objectives.begin(), a.objectives.end(), 0.0) >
         std::accumulate(b.objectives.begin(), b.objectives.end(), 0.0);
}

}  // namespace

std::vector<Solution> soga(const MomkpInstance& inst, std::size_t objective, const SolverParams& params) {
  if (objective >= inst.p) throw ArgumentError("soga: objective out of range");
  params.validate(inst.p);
  const std::vector<std::size_t> mask{objective};
  detail::Breeder breeder(inst, params, mask, params.seed);
  Rng& rng = breeder.rng();
  const std::size_t n_pop = params.population;

  std::vector<detail::Individual> pop;
  pop.reserve(n_pop);
  for (std::size_t k = 0; k < n_pop; ++k) pop.push_back(breeder.random_individual());
  std::size_t evaluations = n_pop;

  auto best_of = [&](const std::vector<detail::Individual>& group) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < group.size(); ++k) {
      if (fitter(group[k], group[best], objective)) best = k;
    }
    return best;
  };
  detail::Individual best = pop[best_of(pop)];

  auto tournament = [&]() -> const detail::Individual& {
    const auto& a = pop[rng.index(n_pop)];
    const auto& b = pop[rng.index(n_pop)];
    return fitter(b, a, objective) ? b : a;
  };

  while (evaluations + n_pop <= params.evaluations) {
    std::vector<detail::Individual> next;
    next.reserve(n_pop);
    while (next.size() < n_pop) {
      const auto& a = tournament();
      const auto& b = tournament();
      auto [c1, c2] = breeder.breed(a, b);
      next.push_back(std::move(c1));
      next.push_back(std::move(c2));
    }
    evaluations += n_pop;
    // Elitism: the best individual so far replaces the worst child.
    std::size_t worst = 0;
    for (std::size_t k = 1; k < next.size(); ++k) {
      if (fitter(next[worst], next[k], objective)) worst = k;
    }
    next[worst] = best;
    pop = std::move(next);
    const auto& gen_best = pop[best_of(pop)];
    if (fitter(gen_best, best, objective)) best = gen_best;
  }
  return {detail::to_solution(best, "soga:" + std::to_string(objective + 1))};
}

}  // namespace pareto_lens
