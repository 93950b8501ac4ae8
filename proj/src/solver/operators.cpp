#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "pareto_lens/errors.hpp"

namespace pareto_lens {

void SolverParams::validate(std::size_t p) const {
  if (population < 2 || population % 2 != 0) throw ArgumentError("population must be even and at least 2");
  if (evaluations < population) throw ArgumentError("evaluation budget must be at least the population size");
  if (crossover_rate < 0.0 || crossover_rate > 1.0) throw ArgumentError("crossover rate must lie in [0,1]");
  if (mutation_rate && (*mutation_rate < 0.0 || *mutation_rate > 1.0)) {
    throw ArgumentError("mutation rate must lie in [0,1]");
  }
  std::vector<std::size_t> seen;
  for (std::size_t k : objective_mask) {
    if (k >= p) throw ArgumentError("objective mask names objective " + std::to_string(k + 1) + " of " + std::to_string(p));
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) throw ArgumentError("objective mask repeats an objective");
    seen.push_back(k);
  }
}

Archive::Archive(std::vector<ObjectiveSpec> specs, std::vector<std::size_t> mask)
    : specs_(std::move(specs)), mask_(std::move(mask)) {
  if (mask_.empty()) {
    mask_.resize(specs_.size());
    std::iota(mask_.begin(), mask_.end(), 0);
  }
  for (std::size_t k : mask_) {
    if (k >= specs_.size()) throw ArgumentError("archive mask out of range");
    masked_specs_.push_back(specs_[k]);
  }
}

bool Archive::insert(Solution s) {
  if (s.objectives.size() != specs_.size()) throw DimensionError("archive: objective arity mismatch");
  ObjectiveVector mv;
  mv.reserve(mask_.size());
  for (std::size_t k : mask_) mv.push_back(s.objectives[k]);
  for (const auto& e : masked_) {
    if (e == mv || dominates(e, mv, masked_specs_)) return false;
  }
  std::size_t out = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (dominates(mv, masked_[k], masked_specs_)) continue;
    if (out != k) {
      entries_[out] = std::move(entries_[k]);
      masked_[out] = std::move(masked_[k]);
    }
    ++out;
  }
  entries_.resize(out);
  masked_.resize(out);
  entries_.push_back(std::move(s));
  masked_.push_back(std::move(mv));
  return true;
}

ApproximationSet Archive::to_set(const std::string& instance_id) const {
  return ApproximationSet(specs_, entries_, instance_id);
}

std::pair<BitString, BitString> hux_crossover(const BitString& a, const BitString& b, Rng& rng) {
  if (a.size() != b.size()) throw ArgumentError("hux_crossover: parents differ in length");
  std::vector<std::size_t> differing;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) differing.push_back(i);
  }
  BitString c1 = a, c2 = b;
  const std::size_t swaps = differing.size() / 2;
  for (std::size_t k = 0; k < swaps; ++k) {
    std::swap(differing[k], differing[k + rng.index(differing.size() - k)]);
    const std::size_t pos = differing[k];
    std::swap(c1[pos], c2[pos]);
  }
  return {std::move(c1), std::move(c2)};
}

void bit_flip_mutation(BitString& x, double rate, Rng& rng) {
  if (rate <= 0.0) return;
  for (auto& bit : x) {
    if (rng.bernoulli(rate)) bit ^= 1U;
  }
}

std::vector<std::vector<double>> simplex_lattice(std::size_t objectives, std::size_t max_points) {
  if (objectives < 1) throw ArgumentError("simplex_lattice: need at least one objective");
  if (max_points < 1) throw ArgumentError("simplex_lattice: need at least one point");
  if (objectives == 1) return {{1.0}};
  // Size of the lattice with h divisions is C(h + k - 1, k - 1).
  auto lattice_size = [&](std::size_t h) {
    double c = 1.0;
    for (std::size_t i = 1; i < objectives; ++i) c = c * static_cast<double>(h + i) / static_cast<double>(i);
    return c;
  };
  std::size_t h = 0;
  while (lattice_size(h + 1) <= static_cast<double>(max_points)) ++h;
  if (h == 0) {
    // Not even the corners fit: use the centroid alone.
    return {std::vector<double>(objectives, 1.0 / static_cast<double>(objectives))};
  }
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> parts(objectives, 0);
  // Enumerate compositions of h into `objectives` non-negative parts.
  auto recurse = [&](auto&& self, std::size_t idx, std::size_t left) -> void {
    if (idx + 1 == objectives) {
      parts[idx] = left;
      std::vector<double> w(objectives);
      for (std::size_t i = 0; i < objectives; ++i) w[i] = static_cast<double>(parts[i]) / static_cast<double>(h);
      out.push_back(std::move(w));
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      parts[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  recurse(recurse, 0, h);
  return out;
}

Selection greedy_density(const MomkpInstance& inst, std::size_t objective) {
  if (objective >= inst.p) throw ArgumentError("greedy_density: objective out of range");
  std::vector<std::size_t> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  auto density = [&](std::size_t i) {
    std::int64_t w = 0;
    for (std::size_t j = 0; j < inst.m; ++j) w += inst.weight(i, j);
    return w > 0 ? static_cast<double>(inst.profit(i, objective)) / static_cast<double>(w)
                 : static_cast<double>(inst.profit(i, objective)) * 1e18;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return density(a) > density(b); });
  Selection x(inst.n, 0);
  std::vector<std::int64_t> load(inst.m, 0);
  for (std::size_t i : order) {
    bool fits = true;
    for (std::size_t j = 0; j < inst.m && fits; ++j) fits = load[j] + inst.weight(i, j) <= inst.capacities[j];
    if (!fits) continue;
    x[i] = 1;
    for (std::size_t j = 0; j < inst.m; ++j) load[j] += inst.weight(i, j);
  }
  return x;
}

namespace detail {

Breeder::Breeder(const MomkpInstance& inst, const SolverParams& params, std::vector<std::size_t> mask,
                 std::uint64_t seed)
    : inst_(inst),
      mask_(std::move(mask)),
      crossover_rate_(params.crossover_rate),
      mutation_rate_(params.mutation_rate.value_or(1.0 / static_cast<double>(inst.n))),
      rng_(seed) {}

Individual Breeder::from_bits(BitString bits) {
  bits = repair(inst_, std::move(bits), rng_, mask_);
  auto obj = evaluate(inst_, bits);
  return {std::move(bits), std::move(obj)};
}

Individual Breeder::random_individual() {
  BitString bits(inst_.n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng_.next() >> 63);
  return from_bits(std::move(bits));
}

std::pair<Individual, Individual> Breeder::breed(const Individual& a, const Individual& b) {
  BitString c1, c2;
  if (rng_.bernoulli(crossover_rate_)) {
    std::tie(c1, c2) = hux_crossover(a.bits, b.bits, rng_);
  } else {
    c1 = a.bits;
    c2 = b.bits;
  }
  bit_flip_mutation(c1, mutation_rate_, rng_);
  bit_flip_mutation(c2, mutation_rate_, rng_);
  auto first = from_bits(std::move(c1));
  auto second = from_bits(std::move(c2));
  return {std::move(first), std::move(second)};
}

Individual Breeder::breed_one(const Individual& a, const Individual& b) {
  BitString child = rng_.bernoulli(crossover_rate_) ? hux_crossover(a.bits, b.bits, rng_).first : a.bits;
  bit_flip_mutation(child, mutation_rate_, rng_);
  return from_bits(std::move(child));
}

ObjectiveVector Breeder::masked(const ObjectiveVector& full) const {
  ObjectiveVector out;
  out.reserve(mask_.size());
  for (std::size_t k : mask_) out.push_back(full[k]);
  return out;
}

std::vector<Individual> Breeder::draw_seeds(std::span<const Solution> seeds, std::size_t count) {
  std::vector<Individual> out;
  std::vector<std::size_t> pool;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (seeds[k].decision && seeds[k].decision->size() == inst_.n) pool.push_back(k);
  }
  if (pool.empty()) return out;
  std::size_t pos = pool.size();
  for (std::size_t c = 0; c < count; ++c) {
    if (pos == pool.size()) pos = 0;  // next pass over the pool
    std::swap(pool[pos], pool[pos + rng_.index(pool.size() - pos)]);
    out.push_back(from_bits(*seeds[pool[pos]].decision));
    ++pos;
  }
  return out;
}

std::vector<std::size_t> resolve_mask(const SolverParams& params, std::size_t p) {
  params.validate(p);
  if (!params.objective_mask.empty()) return params.objective_mask;
  std::vector<std::size_t> all(p);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

Solution to_solution(const Individual& ind, const std::string& origin) {
  return {ind.objectives, ind.bits, origin};
}

}  // namespace detail

}  // namespace pareto_lens
