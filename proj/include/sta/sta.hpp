#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sta/benchmarks.hpp"
#include "sta/rng.hpp"
#include "sta/transforms.hpp"
#include "sta/types.hpp"

namespace sta {

enum class Operator { Rotation, Translation, Expansion, Axesion };

constexpr std::string_view to_string(Operator op) noexcept {
  switch (op) {
    case Operator::Rotation: return "rotation";
    case Operator::Translation: return "translation";
    case Operator::Expansion: return "expansion";
    case Operator::Axesion: return "axesion";
  }
  return "?";
}

/// Reported once per operator call inside a run.
template <typename Scalar>
struct StepEvent {
  long epoch{};
  Operator op{};
  Scalar alpha{};
  bool skipped{false};  ///< degenerate state or direction, nothing evaluated
  bool improved{false};
  Scalar before{};     ///< incumbent value entering the call
  Scalar after{};      ///< incumbent value leaving the call
  Scalar candidate{};  ///< best candidate value, +inf when skipped
};

template <typename Scalar>
struct RunConfig {
  StaVariant variant{StaVariant::New};
  TransformParams<Scalar> params{TransformParams<Scalar>::defaults(StaVariant::New)};
  long epochs{1000};
  std::uint64_t seed{0};
  /// Operator order within one epoch of the New variant.
  std::array<Operator, 3> new_order{Operator::Rotation, Operator::Expansion, Operator::Axesion};
  /// Starting point; drawn from the box when empty.
  std::optional<Vector<Scalar>> initial;
  std::function<void(const StepEvent<Scalar>&)> observer;

  static RunConfig defaults(StaVariant variant, std::uint64_t seed = 0) {
    RunConfig c;
    c.variant = variant;
    c.params = TransformParams<Scalar>::defaults(variant);
    c.seed = seed;
    return c;
  }
};

template <typename Scalar>
struct TracePoint {
  long epoch{};
  Scalar best_f{};

  bool operator==(const TracePoint&) const = default;
};

template <typename Scalar>
struct RunResult {
  State<Scalar> best;
  std::vector<TracePoint<Scalar>> trace;
  std::uint64_t evaluations{0};
  std::uint64_t seed{0};
};

template <typename Scalar>
struct GreedyOutcome {
  State<Scalar> state;
  bool improved{false};
};

/// Objective value with NaN and infinities mapped to +inf.
template <typename Scalar>
Scalar quarantined(Scalar v) {
  return std::isfinite(v) ? v : std::numeric_limits<Scalar>::infinity();
}

/**
 * Evaluates every candidate and keeps the best one if it is strictly better
 * than the incumbent. Ties among candidates go to the lowest column. Adds
 * the candidate count to `evaluations`. The best candidate value goes to
 * `best_candidate` when given.
 */
template <typename Scalar, typename Fn>
GreedyOutcome<Scalar> greedy_step(const State<Scalar>& incumbent, const CandidateSet<Scalar>& cands,
                                  Fn&& objective, std::uint64_t& evaluations,
                                  Scalar* best_candidate = nullptr) {
  const Scalar current = incumbent.value();
  Scalar best = std::numeric_limits<Scalar>::infinity();
  Index best_col = -1;
  Vector<Scalar> point(cands.dim());
  for (Index k = 0; k < cands.size(); ++k) {
    point = cands.points.col(k);
    const Scalar v = point.allFinite() ? quarantined<Scalar>(objective(point))
                                       : std::numeric_limits<Scalar>::infinity();
    if (v < best) {
      best = v;
      best_col = k;
    }
  }
  evaluations += static_cast<std::uint64_t>(cands.size());
  if (best_candidate) *best_candidate = best;
  if (best_col >= 0 && best < current) {
    return {State<Scalar>(cands.points.col(best_col), best), true};
  }
  return {incumbent, false};
}

/// Uniform point in the box (surrogate box on infinite sides), evaluated.
template <typename Scalar>
State<Scalar> initial_state(const Benchmark<Scalar>& bench, RandomSource& rng) {
  Vector<Scalar> x(bench.dim);
  for (Index i = 0; i < bench.dim; ++i) {
    const double lo = std::isfinite(double(bench.lo(i))) ? double(bench.lo(i)) : -kSurrogateBound;
    const double hi = std::isfinite(double(bench.hi(i))) ? double(bench.hi(i)) : kSurrogateBound;
    x(i) = static_cast<Scalar>(rng.uniform(lo, hi));
  }
  const Scalar f = quarantined(evaluate(bench, x));
  return State<Scalar>(std::move(x), f);
}

namespace detail {

template <typename Scalar>
class Driver {
 public:
  Driver(const RunConfig<Scalar>& cfg, const Benchmark<Scalar>& bench)
      : cfg_(cfg), bench_(bench), params_(cfg.params), rng_(cfg.seed) {
    params_.validate();
    if (cfg.epochs < 1) throw ConfigError("epochs must be at least 1");
    if (cfg.initial) {
      if (cfg.initial->size() != bench.dim) {
        throw ConfigError(bench.name + ": initial state has dimension " +
                          std::to_string(cfg.initial->size()) + ", expected " +
                          std::to_string(bench.dim));
      }
      Vector<Scalar> x = cfg.initial->cwiseMax(bench.lo).cwiseMin(bench.hi);
      const Scalar f = quarantined(evaluate(bench, x));
      best_ = State<Scalar>(std::move(x), f);
    } else {
      best_ = initial_state(bench, rng_);
    }
    evaluations_ = 1;
    result_.trace.reserve(static_cast<std::size_t>(cfg.epochs));
  }

  TransformParams<Scalar>& params() { return params_; }

  /// One operator call followed, on improvement, by a translation.
  void step(Operator op) {
    const State<Scalar> before = best_;
    if (!attempt(op, [&] { return generate(op); })) return;
    attempt(Operator::Translation,
            [&] { return op_translate(best_, before, params_, rng_); });
  }

  void close_epoch() { result_.trace.push_back({epoch_, *best_.f}); }
  void begin_epoch(long e) { epoch_ = e; }

  RunResult<Scalar> finish() && {
    result_.best = std::move(best_);
    result_.evaluations = evaluations_;
    result_.seed = cfg_.seed;
    return std::move(result_);
  }

 private:
  CandidateSet<Scalar> generate(Operator op) {
    switch (op) {
      case Operator::Rotation: return op_rotate(best_, params_, rng_);
      case Operator::Expansion: return op_expand(best_, params_, rng_);
      case Operator::Axesion: return op_axesion(best_, params_, rng_);
      case Operator::Translation: break;
    }
    throw ConfigError("translation needs a previous state");
  }

  template <typename Make>
  bool attempt(Operator op, Make&& make) {
    StepEvent<Scalar> event{epoch_, op, params_.alpha};
    event.before = *best_.f;
    event.candidate = std::numeric_limits<Scalar>::infinity();
    CandidateSet<Scalar> cands;
    try {
      cands = make();
    } catch (const DegenerateState&) {
      event.skipped = true;
    } catch (const DegenerateDirection&) {
      event.skipped = true;
    }
    if (!event.skipped) {
      clip_to_bounds(cands, bench_.lo, bench_.hi);
      auto outcome = greedy_step(best_, cands, bench_.objective, evaluations_, &event.candidate);
      event.improved = outcome.improved;
      if (outcome.improved) best_ = std::move(outcome.state);
    }
    event.after = *best_.f;
    if (cfg_.observer) cfg_.observer(event);
    return event.improved;
  }

  const RunConfig<Scalar>& cfg_;
  const Benchmark<Scalar>& bench_;
  TransformParams<Scalar> params_;
  RandomSource rng_;
  State<Scalar> best_;
  std::uint64_t evaluations_{0};
  long epoch_{0};
  RunResult<Scalar> result_;
};

}  // namespace detail

/**
 * Original three-operator algorithm.
 *
 * Each epoch sweeps alpha from alpha_max down by fc while alpha >= alpha_min,
 * trying rotation at every level, then tries expansion once. Every
 * improvement is followed by a translation along the step just taken.
 */
template <typename Scalar>
RunResult<Scalar> run_original(const RunConfig<Scalar>& cfg, const Benchmark<Scalar>& bench) {
  if (cfg.variant != StaVariant::Original) throw ConfigError("run_original needs variant original");
  detail::Driver<Scalar> driver(cfg, bench);
  auto& p = driver.params();
  for (long e = 1; e <= cfg.epochs; ++e) {
    driver.begin_epoch(e);
    p.alpha = p.alpha_max;
    while (p.alpha >= p.alpha_min) {
      driver.step(Operator::Rotation);
      p.alpha /= p.fc;
    }
    p.alpha = p.alpha_min;
    driver.step(Operator::Expansion);
    driver.close_epoch();
  }
  return std::move(driver).finish();
}

/**
 * Four-operator algorithm with periodic alpha.
 *
 * Each epoch runs rotation, expansion and axesion once (order taken from
 * cfg.new_order), each followed by a translation on improvement. Alpha is
 * divided by fc after every epoch and wraps to alpha_max once it drops below
 * alpha_min.
 */
template <typename Scalar>
RunResult<Scalar> run_new(const RunConfig<Scalar>& cfg, const Benchmark<Scalar>& bench) {
  if (cfg.variant != StaVariant::New) throw ConfigError("run_new needs variant new");
  detail::Driver<Scalar> driver(cfg, bench);
  auto& p = driver.params();
  for (long e = 1; e <= cfg.epochs; ++e) {
    driver.begin_epoch(e);
    for (Operator op : cfg.new_order) driver.step(op);
    driver.close_epoch();
    p.alpha /= p.fc;
    if (p.alpha < p.alpha_min) p.alpha = p.alpha_max;
  }
  return std::move(driver).finish();
}

template <typename Scalar>
RunResult<Scalar> run(const RunConfig<Scalar>& cfg, const Benchmark<Scalar>& bench) {
  return cfg.variant == StaVariant::Original ? run_original(cfg, bench) : run_new(cfg, bench);
}

/// Number of alpha levels from alpha_max down to alpha_min in steps of 1/fc.
template <typename Scalar>
int alpha_levels(const TransformParams<Scalar>& p) {
  int count = 0;
  for (Scalar a = p.alpha_max; a >= p.alpha_min; a /= p.fc) ++count;
  return count;
}

}  // namespace sta
