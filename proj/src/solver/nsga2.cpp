#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

struct Ranked {
  std::vector<std::size_t> rank;
  std::vector<double> crowding;
};

Ranked rank_population(const std::vector<ObjectiveVector>& masked) {
  Ranked r{std::vector<std::size_t>(masked.size()), std::vector<double>(masked.size())};
  const auto fronts = fast_nondominated_sort(masked);
  for (std::size_t f = 0; f < fronts.size(); ++f) {
    const auto dist = crowding_distance(masked, fronts[f]);
    for (std::size_t k = 0; k < fronts[f].size(); ++k) {
      r.rank[fronts[f][k]] = f;
      r.crowding[fronts[f][k]] = dist[k];
    }
  }
  return r;
}

}  // namespace

Archive nsga2_run(const MomkpInstance& inst, const SolverParams& params, std::span<const Solution> seeds) {
  const auto mask = detail::resolve_mask(params, inst.p);
  if (mask.size() < 2) throw ArgumentError("nsga2_run: the objective mask must name at least two objectives");
  detail::Breeder breeder(inst, params, mask, params.seed);
  Rng& rng = breeder.rng();
  const std::size_t n_pop = params.population;

  std::vector<detail::Individual> pop = breeder.draw_seeds(seeds, seeds.empty() ? 0 : n_pop / 2);
  while (pop.size() < n_pop) pop.push_back(breeder.random_individual());
  std::size_t evaluations = n_pop;

  auto masked_of = [&](const std::vector<detail::Individual>& group) {
    std::vector<ObjectiveVector> out;
    out.reserve(group.size());
    for (const auto& ind : group) out.push_back(breeder.masked(ind.objectives));
    return out;
  };
  Ranked ranked = rank_population(masked_of(pop));

  auto tournament = [&]() -> const detail::Individual& {
    const std::size_t a = rng.index(n_pop);
    const std::size_t b = rng.index(n_pop);
    if (ranked.rank[a] != ranked.rank[b]) return ranked.rank[a] < ranked.rank[b] ? pop[a] : pop[b];
    return ranked.crowding[b] > ranked.crowding[a] ? pop[b] : pop[a];
  };

  while (evaluations + n_pop <= params.evaluations) {
    std::vector<detail::Individual> merged = pop;
    merged.reserve(2 * n_pop);
    while (merged.size() < 2 * n_pop) {
      const auto& a = tournament();
      const auto& b = tournament();
      auto [c1, c2] = breeder.breed(a, b);
      merged.push_back(std::move(c1));
      merged.push_back(std::move(c2));
    }
    evaluations += n_pop;

    const auto masked = masked_of(merged);
    const auto fronts = fast_nondominated_sort(masked);
    std::vector<detail::Individual> next;
    next.reserve(n_pop);
    for (const auto& front : fronts) {
      if (next.size() + front.size() <= n_pop) {
        for (std::size_t k : front) next.push_back(std::move(merged[k]));
        continue;
      }
      const auto dist = crowding_distance(masked, front);
      std::vector<std::size_t> order(front.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
      for (std::size_t k = 0; next.size() < n_pop; ++k) next.push_back(std::move(merged[front[order[k]]]));
      break;
    }
    pop = std::move(next);
    ranked = rank_population(masked_of(pop));
  }

  Archive out(default_specs(inst.p), mask);
  std::string origin = "nsga2:";
  for (std::size_t k = 0; k < mask.size(); ++k) origin += (k ? "," : "") + std::to_string(mask[k] + 1);
  for (std::size_t k = 0; k < pop.size(); ++k) {
    if (ranked.rank[k] == 0) out.insert(detail::to_solution(pop[k], origin));
  }
  return out;
}

}  // namespace pareto_lens
