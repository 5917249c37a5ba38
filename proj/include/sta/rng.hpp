#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace sta {

/// SplitMix64 output function. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30U)) * UINT64_C(0xbf58476d1ce4e5b9);
  z = (z ^ (z >> 27U)) * UINT64_C(0x94d049bb133111eb);
  return z ^ (z >> 31U);
}

/// Seed of run `run_index` within an experiment seeded by `master_seed`.
///
/// run_seed = mix64(master_seed + 0x9e3779b97f4a7c15 * (run_index + 1)).
/// The multiplier is odd, so distinct run indices give distinct seeds.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t run_index) noexcept {
  return mix64(master_seed + UINT64_C(0x9e3779b97f4a7c15) * (run_index + 1));
}

/**
 * Deterministic random source behind every stochastic operator.
 *
 * The generator is xoshiro256** (Blackman & Vigna), its 256-bit state filled
 * from the seed by four SplitMix64 steps. Draw sequences depend only on the
 * seed, never on the platform or the standard library.
 *
 *  - uniform() maps the top 53 bits of a draw onto [0, 1), then onto [lo, hi].
 *  - gaussian() uses the Marsaglia polar method; the second deviate of each
 *    accepted pair is cached and returned by the next call.
 *  - pick_index() uses Lemire's multiply-and-reject method (unbiased).
 *
 * Single owner: a source must never be shared between threads.
 */
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  /// Raw 64-bit draw.
  result_type operator()() noexcept;

  /// Uniform in [lo, hi]. Throws InvalidRange when lo > hi.
  double uniform(double lo, double hi);

  /// Standard normal deviate.
  double gaussian() noexcept;

  /// Uniform over {0, ..., n-1}. Throws InvalidRange when n == 0.
  std::size_t pick_index(std::size_t n);

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  double unit() noexcept;

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
  std::optional<double> spare_gaussian_;
};

}  // namespace sta
