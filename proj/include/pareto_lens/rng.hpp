#ifndef PARETO_LENS_RNG_HPP
#define PARETO_LENS_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace pareto_lens {

/**
 * @brief Seeded generator with platform-independent draws.
 *
 * Bounded integers use rejection sampling and reals use the top 53 bits, so a
 * given seed produces the same stream on every standard library.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], both inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);

  /// Uniform real in [0, 1).
  double uniform_real();

  bool bernoulli(double p) { return uniform_real() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent child seed for a named stage: hash(master, stage_id).
std::uint64_t derive_seed(std::uint64_t master, std::string_view stage_id);

}  // namespace pareto_lens

#endif  // PARETO_LENS_RNG_HPP
