/**
 * @file momkp.hpp
 * @brief Multiobjective multidimensional 0-1 knapsack: instance generators,
 * evaluation, feasibility, repair and the text instance format.
 */

#ifndef PARETO_LENS_MOMKP_HPP
#define PARETO_LENS_MOMKP_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pareto_lens/core.hpp"
#include "pareto_lens/rng.hpp"

namespace pareto_lens {

/**
 * Generator families.
 *  - A: independent weights and profits in [1,1000].
 *  - B: harmonious; each profit within +-100 of the previous one.
 *  - C: conflicting; consecutive profits sum to roughly 1000.
 *  - D: like C, with weights tied to consecutive profit differences.
 *  - X: each item is strong in at most two objectives; weights are sums of profits.
 */
enum class SetKind { A, B, C, D, X, External };

std::string to_string(SetKind kind);
std::optional<SetKind> parse_set_kind(const std::string& text);

/// Capacity choice: the same W for every dimension, or 50 per item.
struct CapacityRule {
  enum class Mode { Fixed, Proportional } mode = Mode::Fixed;
  std::int64_t value = 50000;

  static CapacityRule fixed(std::int64_t w) { return {Mode::Fixed, w}; }
  static CapacityRule proportional() { return {Mode::Proportional, 50}; }
  std::int64_t capacity_for(std::size_t n) const {
    return mode == Mode::Fixed ? value : value * static_cast<std::int64_t>(n);
  }
};

struct MomkpInstance {
  std::size_t n = 0;
  std::size_t m = 0;  ///< weight dimensions
  std::size_t p = 0;  ///< profits (objectives)
  std::vector<std::int64_t> capacities;
  std::vector<std::int64_t> weights;  ///< n x m, row-major by item
  std::vector<std::int64_t> profits;  ///< n x p, row-major by item
  SetKind kind = SetKind::External;
  std::uint64_t seed = 0;

  std::int64_t weight(std::size_t item, std::size_t dim) const { return weights[item * m + dim]; }
  std::int64_t profit(std::size_t item, std::size_t obj) const { return profits[item * p + obj]; }
};

using Selection = BitString;

/// Side information from `generate`: the set-X case (1..5) drawn for each item.
struct GenerationTrace {
  std::vector<int> x_branch;
};

/**
 * Deterministic in (kind, n, m, p, capacity, seed). Sets B, C, D and X need
 * p = 4; sets D and X also need m = 4.
 */
MomkpInstance generate(SetKind kind, std::size_t n, std::size_t m, std::size_t p, CapacityRule capacity,
                       std::uint64_t seed, GenerationTrace* trace = nullptr);

/// The p profit sums (feasibility not checked).
ObjectiveVector evaluate(const MomkpInstance& inst, std::span<const std::uint8_t> x);

bool feasible(const MomkpInstance& inst, std::span<const std::uint8_t> x);

/**
 * Drops selected items, lowest profit/weight ratio first, until feasible.
 * The ratio sums the profits in `objective_mask` (all objectives when
 * empty) over the sum of all weights. Equal ratios are ordered by `rng`.
 */
Selection repair(const MomkpInstance& inst, Selection x, Rng& rng, std::span<const std::size_t> objective_mask = {});

/// Throws ArgumentError describing the first violated generator invariant.
void validate(const MomkpInstance& inst);

std::string specs_label(const MomkpInstance& inst);

/// `MOMKP n m p kind seed`, capacities, then one line per item: m weights then p profits.
/// Lines starting with `#` are skipped by the parser.
void write_instance(std::ostream& out, const MomkpInstance& inst);
MomkpInstance parse_instance(std::istream& in);
MomkpInstance read_instance(const std::filesystem::path& path);
std::string instance_text(const MomkpInstance& inst);

}  // namespace pareto_lens

#endif  // PARETO_LENS_MOMKP_HPP
