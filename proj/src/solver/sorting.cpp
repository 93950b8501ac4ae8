#include <algorithm>
#include <limits>
#include <numeric>

#include "pareto_lens/errors.hpp"
#include "pareto_lens/solver.hpp"

namespace pareto_lens {

namespace {

// Maximisation dominance without the spec bookkeeping of core::dominates.
bool max_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

}  // namespace

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> points) {
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw DimensionError("fast_nondominated_sort: arity mismatch");
  }
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> fronts(1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (max_dominates(points[a], points[b])) {
        dominated_by[a].push_back(b);
        ++domination_count[b];
      } else if (max_dominates(points[b], points[a])) {
        dominated_by[b].push_back(a);
        ++domination_count[a];
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (domination_count[a] == 0) fronts[0].push_back(a);
  }
  while (!fronts.back().empty()) {
    std::vector<std::size_t> next;
    for (std::size_t a : fronts.back()) {
      for (std::size_t b : dominated_by[a]) {
        if (--domination_count[b] == 0) next.push_back(b);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(next));
  }
  fronts.pop_back();
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> points, std::span<const std::size_t> front) {
  const std::size_t size = front.size();
  std::vector<double> distance(size, 0.0);
  if (size == 0) return distance;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (size <= 2) {
    std::fill(distance.begin(), distance.end(), kInf);
    return distance;
  }
  const std::size_t m = points[front[0]].size();
  std::vector<std::size_t> order(size);
  for (std::size_t obj = 0; obj < m; ++obj) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[front[a]][obj] < points[front[b]][obj]; });
    const double lo = points[front[order.front()]][obj];
    const double hi = points[front[order.back()]][obj];
    distance[order.front()] = kInf;
    distance[order.back()] = kInf;
    if (hi - lo <= 0.0) continue;
    for (std::size_t k = 1; k + 1 < size; ++k) {
      if (distance[order[k]] == kInf) continue;
      distance[order[k]] +=
          (points[front[order[k + 1]]][obj] - points[front[order[k - 1]]][obj]) / (hi - lo);
    }
  }
  return distance;
}

}  // namespace pareto_lens
