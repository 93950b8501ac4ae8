/**
 * @file correlation.hpp
 * @brief Global pairwise relationship analysis via Kendall rank correlation.
 */

#ifndef PARETO_LENS_CORRELATION_HPP
#define PARETO_LENS_CORRELATION_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pareto_lens/core.hpp"

namespace pareto_lens {

enum class TiePolicy {
  /// (concordant - discordant) / (mu(mu-1)/2); ties count as neither.
  TauA,
  /// Same numerator, denominator corrected for ties in either variable.
  TauB,
};

enum class Relation { Conflicting, Harmonious, Independent };

struct PairwiseRelation {
  std::size_t i = 0;  ///< 0-based, i < j
  std::size_t j = 0;
  double tau = 0.0;
  Relation kind = Relation::Independent;
};

/// Strict cut-offs: tau < -0.5 conflicting, tau > 0.5 harmonious.
Relation classify_tau(double tau);

std::string_view to_string(Relation r);
std::string_view to_string(TiePolicy p);

/// Kendall tau of two equally long samples, O(n log n).
double kendall_tau(std::span<const double> x, std::span<const double> y, TiePolicy policy = TiePolicy::TauA);

/// Kendall tau between objectives i and j of `set`. Senses are ignored: tau is
/// computed on raw values.
double kendall_tau(const ApproximationSet& set, std::size_t i, std::size_t j, TiePolicy policy = TiePolicy::TauA);

/// All m(m-1)/2 objective pairs in (0,1),(0,2),...,(m-2,m-1) order.
std::vector<PairwiseRelation> pairwise_matrix(const ApproximationSet& set, TiePolicy policy = TiePolicy::TauA);

}  // namespace pareto_lens

#endif  // PARETO_LENS_CORRELATION_HPP
