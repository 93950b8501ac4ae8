#include "pareto_lens/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "pareto_lens/errors.hpp"

namespace pareto_lens {

std::vector<ObjectiveSpec> default_specs(std::size_t m, Sense sense) {
  std::vector<ObjectiveSpec> specs;
  specs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) specs.push_back({"Z" + std::to_string(i + 1), sense});
  return specs;
}

ApproximationSet::ApproximationSet(std::vector<ObjectiveSpec> specs, std::vector<Solution> solutions,
                                   std::string instance_id)
    : specs_(std::move(specs)), solutions_(std::move(solutions)), instance_id_(std::move(instance_id)) {
  if (specs_.size() < 2) throw DimensionError("an approximation set needs at least two objectives");
  std::set<std::string> names;
  for (const auto& s : specs_) {
    if (s.name.empty()) throw ArgumentError("objective names must be non-empty");
    if (!names.insert(s.name).second) throw ArgumentError("duplicate objective name '" + s.name + "'");
  }
  for (std::size_t k = 0; k < solutions_.size(); ++k) {
    const auto& v = solutions_[k].objectives;
    if (v.size() != specs_.size()) {
      throw DimensionError("solution " + std::to_string(k) + " has " + std::to_string(v.size()) +
                           " objectives, expected " + std::to_string(specs_.size()));
    }
    for (double x : v) {
      if (!std::isfinite(x)) throw ArgumentError("solution " + std::to_string(k) + " has a non-finite value");
    }
  }
}

std::vector<double> ApproximationSet::column(std::size_t i) const {
  if (i >= specs_.size()) throw ArgumentError("objective index out of range");
  std::vector<double> out;
  out.reserve(solutions_.size());
  for (const auto& s : solutions_) out.push_back(s.objectives[i]);
  return out;
}

bool dominates(std::span<const double> a, std::span<const double> b, std::span<const ObjectiveSpec> specs) {
  if (a.size() != specs.size() || b.size() != specs.size()) {
    throw DimensionError("dominates: vectors and specs differ in length");
  }
  bool strict = false;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (better(b[i], a[i], specs[i])) return false;
    if (better(a[i], b[i], specs[i])) strict = true;
  }
  return strict;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points,
                                              std::span<const ObjectiveSpec> specs) {
  const std::size_t m = specs.size();
  for (const auto& p : points) {
    if (p.size() != m) throw DimensionError("nondominated_indices: arity mismatch");
  }

  // Lexicographic best-first order: a dominator always precedes what it dominates,
  // and identical vectors end up adjacent with the earliest input first.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i) {
      if (points[x][i] != points[y][i]) return better(points[x][i], points[y][i], specs[i]);
    }
    return false;
  });

  std::vector<std::size_t> front;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& cand = points[order[pos]];
    if (pos > 0 && points[order[pos - 1]] == cand) continue;
    bool dominated = false;
    for (std::size_t f : front) {
      if (dominates(points[f], cand, specs)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(order[pos]);
  }
  std::sort(front.begin(), front.end());
  return front;
}

ApproximationSet nondominated_filter(const ApproximationSet& set) {
  std::vector<ObjectiveVector> points;
  points.reserve(set.size());
  for (const auto& s : set.solutions()) points.push_back(s.objectives);
  std::vector<Solution> kept;
  for (std::size_t k : nondominated_indices(points, set.specs())) kept.push_back(set.solutions()[k]);
  return ApproximationSet(set.specs(), std::move(kept), set.instance_id());
}

std::vector<double> normalize_column(std::span<const double> values, Sense sense) {
  std::vector<double> out(values.size(), 0.5);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (range <= 0.0) return out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double t = (values[k] - *lo) / range;
    out[k] = sense == Sense::Maximise ? t : 1.0 - t;
  }
  return out;
}

ApproximationSet normalize(const ApproximationSet& set) {
  if (set.empty()) throw InsufficientDataError("normalize: empty set");
  const std::size_t m = set.objective_count();
  std::vector<Solution> out = set.solutions();
  for (std::size_t i = 0; i < m; ++i) {
    const auto col = normalize_column(set.column(i), set.specs()[i].sense);
    for (std::size_t k = 0; k < out.size(); ++k) out[k].objectives[i] = col[k];
  }
  auto specs = set.specs();
  for (auto& s : specs) s.sense = Sense::Maximise;
  return ApproximationSet(std::move(specs), std::move(out), set.instance_id());
}

}  // namespace pareto_lens
