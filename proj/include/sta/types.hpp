#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sta/errors.hpp"

namespace sta {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

enum class StaVariant { Original, New };

constexpr std::string_view to_string(StaVariant v) noexcept {
  return v == StaVariant::Original ? "original" : "new";
}

/// Parses "original" or "new". Throws ConfigError otherwise.
StaVariant parse_variant(std::string_view text);

/// A candidate solution and, once evaluated, its objective value.
template <typename Scalar>
struct State {
  Vector<Scalar> x;
  std::optional<Scalar> f;

  State() = default;
  explicit State(Vector<Scalar> point, std::optional<Scalar> value = std::nullopt)
      : x(std::move(point)), f(value) {}

  Index dim() const noexcept { return x.size(); }
  bool evaluated() const noexcept { return f.has_value(); }

  Scalar value() const {
    if (!f) throw ConfigError("state has not been evaluated");
    return *f;
  }
};

/**
 * Tunable constants of both algorithm variants.
 *
 * `alpha` is the current rotation factor and moves inside
 * [alpha_min, alpha_max] while a run progresses. `fc` divides alpha on each
 * decay step.
 */
template <typename Scalar>
struct TransformParams {
  Scalar alpha{1};
  Scalar alpha_max{1};
  Scalar alpha_min{Scalar(1e-4)};
  Scalar beta{1};
  Scalar gamma{1};
  Scalar delta{1};
  int se{32};
  Scalar fc{4};

  /// Defaults of the given variant: fc = 4 for Original, 2 for New.
  static TransformParams defaults(StaVariant variant) {
    TransformParams p;
    p.fc = variant == StaVariant::Original ? Scalar(4) : Scalar(2);
    return p;
  }

  void validate() const {
    if (!(alpha_min > 0) || !(alpha_max >= alpha_min))
      throw ConfigError("alpha range must satisfy 0 < alpha_min <= alpha_max");
    if (!(alpha >= alpha_min && alpha <= alpha_max))
      throw ConfigError("alpha must lie in [alpha_min, alpha_max]");
    if (!(beta >= 0) || !(gamma >= 0) || !(delta >= 0))
      throw ConfigError("beta, gamma and delta must be non-negative");
    if (se < 1) throw ConfigError("se must be at least 1");
    if (!(fc > 1)) throw ConfigError("fc must exceed 1");
  }
};

/// SE candidates produced by one operator call, one per column.
template <typename Scalar>
struct CandidateSet {
  Matrix<Scalar> points;
  State<Scalar> origin;

  Index size() const noexcept { return points.cols(); }
  Index dim() const noexcept { return points.rows(); }
  State<Scalar> candidate(Index i) const { return State<Scalar>(points.col(i)); }
};

}  // namespace sta
