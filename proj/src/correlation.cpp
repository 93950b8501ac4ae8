#include "pareto_lens/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

#include "pareto_lens/errors.hpp"

namespace pareto_lens {

namespace {

// Number of unordered pairs inside runs of equal values of a sorted range.
template <typename Equal>
std::int64_t tied_pairs(std::size_t n, Equal equal) {
  std::int64_t total = 0;
  std::int64_t run = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (equal(k - 1, k)) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total + run * (run - 1) / 2;
}

// Merge sort on `v` returning the number of inversions (strictly greater before smaller).
std::int64_t count_swaps(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = count_swaps(v, buf, lo, mid) + count_swaps(v, buf, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (v[b] < v[a]) {
      swaps += static_cast<std::int64_t>(mid - a);
      buf[out++] = v[b++];
    } else {
      buf[out++] = v[a++];
    }
  }
  while (a < mid) buf[out++] = v[a++];
  while (b < hi) buf[out++] = v[b++];
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return swaps;
}

}  // namespace

Relation classify_tau(double tau) {
  if (tau < -0.5) return Relation::Conflicting;
  if (tau > 0.5) return Relation::Harmonious;
  return Relation::Independent;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Conflicting: return "conflicting";
    case Relation::Harmonious: return "harmonious";
    case Relation::Independent: return "independent";
  }
  return "independent";
}

std::string_view to_string(TiePolicy p) { return p == TiePolicy::TauA ? "tau-a" : "tau-b"; }

// Knight's algorithm: sort by (x, y), count joint and x ties, then count the
// inversions of y by merge sort; concordant - discordant follows from the totals.
double kendall_tau(std::span<const double> x, std::span<const double> y, TiePolicy policy) {
  if (x.size() != y.size()) throw DimensionError("kendall_tau: samples differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw InsufficientDataError("kendall_tau: need at least two solutions");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });

  const auto total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t x_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[order[a]] == x[order[b]]; });
  const std::int64_t joint_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return x[order[a]] == x[order[b]] && y[order[a]] == y[order[b]];
  });

  std::vector<double> ys(n);
  for (std::size_t k = 0; k < n; ++k) ys[k] = y[order[k]];
  std::vector<double> buf(n);
  const std::int64_t swaps = count_swaps(ys, buf, 0, n);
  const std::int64_t y_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });

  // Pairs untied in both variables number total - x_ties - y_ties + joint_ties;
  // exactly `swaps` of them are discordant.
  const std::int64_t untied = total - x_ties - y_ties + joint_ties;
  const auto numerator = static_cast<double>(untied - 2 * swaps);

  if (policy == TiePolicy::TauA) return numerator / static_cast<double>(total);
  const double denom = std::sqrt(static_cast<double>(total - x_ties) * static_cast<double>(total - y_ties));
  return denom == 0.0 ? 0.0 : numerator / denom;
}

double kendall_tau(const ApproximationSet& set, std::size_t i, std::size_t j, TiePolicy policy) {
  const std::size_t m = set.objective_count();
  if (i >= m || j >= m) throw ArgumentError("kendall_tau: objective index out of range");
  if (i == j) throw ArgumentError("kendall_tau: objectives must differ");
  if (set.size() < 2) throw InsufficientDataError("kendall_tau: need at least two solutions");
  const auto xi = set.column(i);
  const auto xj = set.column(j);
  return kendall_tau(xi, xj, policy);
}

std::vector<PairwiseRelation> pairwise_matrix(const ApproximationSet& set, TiePolicy policy) {
  std::vector<PairwiseRelation> out;
  const std::size_t m = set.objective_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double tau = kendall_tau(set, i, j, policy);
      out.push_back({i, j, tau, classify_tau(tau)});
    }
  }
  return out;
}

}  // namespace pareto_lens
