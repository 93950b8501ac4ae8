/**
 * @file core.hpp
 * @brief Objective-space fundamentals: objective vectors, Pareto dominance,
 * non-dominated filtering and min-max normalisation.
 */

#ifndef PARETO_LENS_CORE_HPP
#define PARETO_LENS_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pareto_lens {

enum class Sense { Maximise, Minimise };

struct ObjectiveSpec {
  std::string name;
  Sense sense = Sense::Maximise;

  bool operator==(const ObjectiveSpec&) const = default;
};

/// One value per objective; index i holds Z_{i+1}.
using ObjectiveVector = std::vector<double>;

/// Decision bits of a 0-1 problem (one byte per bit, values 0 or 1).
using BitString = std::vector<std::uint8_t>;

struct Solution {
  ObjectiveVector objectives;
  std::optional<BitString> decision;
  std::string origin;
};

/// True iff `a` is strictly better than `b` on objective `spec`.
inline bool better(double a, double b, const ObjectiveSpec& spec) {
  return spec.sense == Sense::Maximise ? a > b : a < b;
}

/// Builds specs named Z1..Zm, all maximised.
std::vector<ObjectiveSpec> default_specs(std::size_t m, Sense sense = Sense::Maximise);

/**
 * @brief A collection of objective vectors sharing one objective definition.
 *
 * Construction validates the invariants: at least two objectives, unique
 * non-empty names, every vector of arity m with finite entries. The set is
 * immutable afterwards.
 */
class ApproximationSet {
 public:
  ApproximationSet(std::vector<ObjectiveSpec> specs, std::vector<Solution> solutions,
                   std::string instance_id = {});

  const std::vector<ObjectiveSpec>& specs() const noexcept { return specs_; }
  const std::vector<Solution>& solutions() const noexcept { return solutions_; }
  const std::string& instance_id() const noexcept { return instance_id_; }

  std::size_t size() const noexcept { return solutions_.size(); }
  bool empty() const noexcept { return solutions_.empty(); }
  std::size_t objective_count() const noexcept { return specs_.size(); }

  const ObjectiveVector& objectives(std::size_t k) const { return solutions_.at(k).objectives; }

  /// Values of objective `i` across all solutions, in solution order.
  std::vector<double> column(std::size_t i) const;

 private:
  std::vector<ObjectiveSpec> specs_;
  std::vector<Solution> solutions_;
  std::string instance_id_;
};

/// Pareto dominance: `a` no worse everywhere and strictly better somewhere.
bool dominates(std::span<const double> a, std::span<const double> b,
               std::span<const ObjectiveSpec> specs);

/**
 * @brief Keeps the maximal mutually non-dominated subset.
 *
 * Survivors keep their input order. Identical objective vectors are kept
 * once (first occurrence wins).
 */
ApproximationSet nondominated_filter(const ApproximationSet& set);

/// Indices (ascending) of the solutions `nondominated_filter` keeps.
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points,
                                              std::span<const ObjectiveSpec> specs);

/**
 * @brief Per-objective min-max map onto [0,1] with 1 always best.
 *
 * Minimised objectives are flipped, so every returned spec is Maximise.
 * An objective whose values are all equal maps to 0.5.
 */
ApproximationSet normalize(const ApproximationSet& set);

/// Normalised values of a single column (same rules as `normalize`).
std::vector<double> normalize_column(std::span<const double> values, Sense sense);

}  // namespace pareto_lens

#endif  // PARETO_LENS_CORE_HPP
