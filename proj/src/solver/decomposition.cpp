#include <algorithm>
#include <limits>
#include <numeric>

#include "common.hpp"
#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

// Zero weights would ignore an objective entirely.
constexpr double kMinWeight = 1e-6;

double tchebycheff(const ObjectiveVector& f, const std::vector<double>& lambda, const ObjectiveVector& ideal) {
  double g = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) g = std::max(g, std::max(lambda[k], kMinWeight) * (ideal[k] - f[k]));
  return g;
}

}  // namespace

Archive decomposition_run(const MomkpInstance& inst, const SolverParams& params, const DecompositionParams& dparams,
                          std::span<const Solution> seeds) {
  const auto mask = detail::resolve_mask(params, inst.p);
  if (mask.size() < 2) throw ArgumentError("decomposition_run: the objective mask must name at least two objectives");
  if (dparams.neighbourhood < 1) throw ArgumentError("decomposition_run: neighbourhood must be positive");

  auto weights = dparams.weights.empty() ? simplex_lattice(mask.size(), params.population) : dparams.weights;
  for (const auto& w : weights) {
    if (w.size() != mask.size()) throw ArgumentError("decomposition_run: weight vector arity differs from the mask");
  }
  const std::size_t subproblems = weights.size();

  // Neighbourhoods: the T closest weight vectors (Euclidean), each including itself.
  const std::size_t t_size = std::min(dparams.neighbourhood, subproblems);
  std::vector<std::vector<std::size_t>> neighbours(subproblems);
  for (std::size_t i = 0; i < subproblems; ++i) {
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t j = 0; j < subproblems; ++j) {
      double d = 0.0;
      for (std::size_t k = 0; k < mask.size(); ++k) d += (weights[i][k] - weights[j][k]) * (weights[i][k] - weights[j][k]);
      dist.emplace_back(d, j);
    }
    std::stable_sort(dist.begin(), dist.end());
    for (std::size_t k = 0; k < t_size; ++k) neighbours[i].push_back(dist[k].second);
  }

  detail::Breeder breeder(inst, params, mask, params.seed);
  Rng& rng = breeder.rng();

  std::vector<detail::Individual> pop = breeder.draw_seeds(seeds, seeds.empty() ? 0 : subproblems / 2);
  while (pop.size() < subproblems) pop.push_back(breeder.random_individual());
  // Seeds land on random subproblems.
  for (std::size_t k = pop.size(); k > 1; --k) std::swap(pop[k - 1], pop[rng.index(k)]);
  std::size_t evaluations = subproblems;

  std::vector<ObjectiveVector> fitness;
  ObjectiveVector ideal(mask.size(), -std::numeric_limits<double>::infinity());
  for (const auto& ind : pop) {
    fitness.push_back(breeder.masked(ind.objectives));
    for (std::size_t k = 0; k < mask.size(); ++k) ideal[k] = std::max(ideal[k], fitness.back()[k]);
  }

  std::string origin = "moead:";
  for (std::size_t k = 0; k < mask.size(); ++k) origin += (k ? "," : "") + std::to_string(mask[k] + 1);
  Archive external(default_specs(inst.p), mask);
  for (const auto& ind : pop) external.insert(detail::to_solution(ind, origin));

  auto pick_parent = [&](std::size_t sub) -> const detail::Individual& {
    const auto& hood = neighbours[sub];
    const std::size_t a = hood[rng.index(hood.size())];
    const std::size_t b = hood[rng.index(hood.size())];
    return tchebycheff(fitness[b], weights[sub], ideal) < tchebycheff(fitness[a], weights[sub], ideal) ? pop[b] : pop[a];
  };

  while (evaluations < params.evaluations) {
    for (std::size_t sub = 0; sub < subproblems && evaluations < params.evaluations; ++sub) {
      const auto& a = pick_parent(sub);
      const auto& b = pick_parent(sub);
      auto child = breeder.breed_one(a, b);
      ++evaluations;
      const auto child_fit = breeder.masked(child.objectives);
      for (std::size_t k = 0; k < mask.size(); ++k) ideal[k] = std::max(ideal[k], child_fit[k]);

      std::vector<std::size_t> hood = neighbours[sub];
      for (std::size_t k = hood.size(); k > 1; --k) std::swap(hood[k - 1], hood[rng.index(k)]);
      std::size_t replaced = 0;
      for (std::size_t j : hood) {
        if (replaced >= dparams.replacement_limit) break;
        if (tchebycheff(child_fit, weights[j], ideal) <= tchebycheff(fitness[j], weights[j], ideal)) {
          pop[j] = child;
          fitness[j] = child_fit;
          ++replaced;
        }
      }
      external.insert(detail::to_solution(child, origin));
    }
  }
  return external;
}

}  // namespace pareto_lens
