#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "sta/benchmarks.hpp"
#include "sta/rng.hpp"

namespace sta {

enum class SpotCheckMethod { Optimizer, Probe };

template <typename Scalar>
struct SpotCheck {
  std::string name;
  SpotCheckMethod method{SpotCheckMethod::Optimizer};
  Vector<Scalar> point;
  Scalar value{};
  Scalar reference{};
  Scalar deviation{};
  bool pass{false};
};

/**
 * Self-test of a benchmark's closed form against its theoretical best.
 *
 * With a recorded optimizer the objective is evaluated there and must match
 * within `tolerance`. Without one, `probe_samples` uniform points are drawn
 * from the box (the surrogate box when unbounded) and the best sample must
 * not undercut the theoretical best by more than `tolerance`.
 */
template <typename Scalar>
SpotCheck<Scalar> spot_check(const Benchmark<Scalar>& b, double tolerance = 1e-3,
                             std::size_t probe_samples = 1'000'000,
                             std::uint64_t probe_seed = 0x5eedULL) {
  SpotCheck<Scalar> r;
  r.name = b.name;
  r.reference = b.theoretical_best;
  if (b.optimizer) {
    r.method = SpotCheckMethod::Optimizer;
    r.point = *b.optimizer;
    r.value = evaluate(b, r.point);
    r.deviation = std::abs(r.value - r.reference);
    r.pass = r.deviation <= static_cast<Scalar>(tolerance);
    return r;
  }

  r.method = SpotCheckMethod::Probe;
  RandomSource rng(probe_seed);
  Vector<Scalar> x(b.dim);
  r.value = std::numeric_limits<Scalar>::infinity();
  for (std::size_t s = 0; s < probe_samples; ++s) {
    for (Index i = 0; i < b.dim; ++i) {
      const double lo = std::isfinite(double(b.lo(i))) ? double(b.lo(i)) : -kSurrogateBound;
      const double hi = std::isfinite(double(b.hi(i))) ? double(b.hi(i)) : kSurrogateBound;
      x(i) = static_cast<Scalar>(rng.uniform(lo, hi));
    }
    const Scalar v = evaluate(b, x);
    if (v < r.value) {
      r.value = v;
      r.point = x;
    }
  }
  r.deviation = std::abs(r.value - r.reference);
  r.pass = r.value >= r.reference - static_cast<Scalar>(tolerance);
  return r;
}

}  // namespace sta
