#pragma once

#include <cmath>

#include "sta/rng.hpp"
#include "sta/types.hpp"

namespace sta {

// Single-candidate kernels. The random operators below draw the random
// quantities and delegate to these, so each formula lives in one place.

/// x + alpha / (n * |x|) * R x
template <typename DerivedX, typename DerivedR>
auto rotation_candidate(const Eigen::MatrixBase<DerivedX>& x,
                        typename DerivedX::Scalar alpha,
                        const Eigen::MatrixBase<DerivedR>& rotation) {
  using Scalar = typename DerivedX::Scalar;
  const Scalar scale = alpha / (static_cast<Scalar>(x.size()) * x.norm());
  return (x + scale * (rotation * x)).eval();
}

/// x + beta * t * (x - prev) / |x - prev|
template <typename DerivedX, typename DerivedP>
auto translation_candidate(const Eigen::MatrixBase<DerivedX>& x,
                           const Eigen::MatrixBase<DerivedP>& prev,
                           typename DerivedX::Scalar beta,
                           typename DerivedX::Scalar t) {
  const auto direction = (x - prev).eval();
  return (x + (beta * t / direction.norm()) * direction).eval();
}

/// x + gamma * diag(g) x
template <typename DerivedX, typename DerivedG>
auto expansion_candidate(const Eigen::MatrixBase<DerivedX>& x,
                         typename DerivedX::Scalar gamma,
                         const Eigen::MatrixBase<DerivedG>& deviates) {
  return (x + gamma * deviates.cwiseProduct(x)).eval();
}

/// x + delta * g * e_axis e_axis^T x: only coordinate `axis` moves.
template <typename DerivedX>
auto axesion_candidate(const Eigen::MatrixBase<DerivedX>& x,
                       typename DerivedX::Scalar delta, Index axis,
                       typename DerivedX::Scalar deviate) {
  auto c = x.eval();
  c(axis) = x(axis) + delta * deviate * x(axis);
  return c;
}

/**
 * Rotation: SE points in the closed ball of radius alpha around x.
 *
 * A fresh dense n-by-n matrix of uniform [-1, 1] entries is drawn for every
 * candidate, filled in column-major order. Throws DegenerateState when x is
 * the zero vector.
 */
template <typename Scalar>
CandidateSet<Scalar> op_rotate(const State<Scalar>& x, const TransformParams<Scalar>& p,
                               RandomSource& rng) {
  const Index n = x.dim();
  if (!(x.x.norm() > Scalar(0))) {
    throw DegenerateState("rotation needs a state with nonzero norm");
  }
  CandidateSet<Scalar> out{Matrix<Scalar>(n, p.se), x};
  Matrix<Scalar> rotation(n, n);
  for (int k = 0; k < p.se; ++k) {
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i)
        rotation(i, j) = static_cast<Scalar>(rng.uniform(-1.0, 1.0));
    out.points.col(k) = rotation_candidate(x.x, p.alpha, rotation);
  }
  return out;
}

/**
 * Translation: SE points on the segment from x of length at most beta, in the
 * direction x - prev. Throws DegenerateDirection when x == prev.
 */
template <typename Scalar>
CandidateSet<Scalar> op_translate(const State<Scalar>& x, const State<Scalar>& prev,
                                  const TransformParams<Scalar>& p, RandomSource& rng) {
  if (x.dim() != prev.dim()) throw ConfigError("translation states differ in dimension");
  if (!((x.x - prev.x).norm() > Scalar(0))) {
    throw DegenerateDirection("translation needs two distinct states");
  }
  CandidateSet<Scalar> out{Matrix<Scalar>(x.dim(), p.se), x};
  for (int k = 0; k < p.se; ++k) {
    const auto t = static_cast<Scalar>(rng.uniform(0.0, 1.0));
    out.points.col(k) = translation_candidate(x.x, prev.x, p.beta, t);
  }
  return out;
}

/// Expansion: every coordinate scaled by an independent factor 1 + gamma * N(0,1).
template <typename Scalar>
CandidateSet<Scalar> op_expand(const State<Scalar>& x, const TransformParams<Scalar>& p,
                               RandomSource& rng) {
  const Index n = x.dim();
  CandidateSet<Scalar> out{Matrix<Scalar>(n, p.se), x};
  Vector<Scalar> deviates(n);
  for (int k = 0; k < p.se; ++k) {
    for (Index i = 0; i < n; ++i) deviates(i) = static_cast<Scalar>(rng.gaussian());
    out.points.col(k) = expansion_candidate(x.x, p.gamma, deviates);
  }
  return out;
}

/**
 * Axesion: one uniformly chosen coordinate scaled by 1 + delta * N(0,1), the
 * others left untouched. The axis is drawn before the deviate.
 *
 * Multiplicative, so a coordinate that is exactly zero never moves.
 */
template <typename Scalar>
CandidateSet<Scalar> op_axesion(const State<Scalar>& x, const TransformParams<Scalar>& p,
                                RandomSource& rng) {
  const Index n = x.dim();
  CandidateSet<Scalar> out{Matrix<Scalar>(n, p.se), x};
  for (int k = 0; k < p.se; ++k) {
    const auto axis = static_cast<Index>(rng.pick_index(static_cast<std::size_t>(n)));
    const auto g = static_cast<Scalar>(rng.gaussian());
    out.points.col(k) = axesion_candidate(x.x, p.delta, axis, g);
  }
  return out;
}

/// Clamps every component into [lo_i, hi_i]. Infinite bounds pass through.
template <typename Scalar>
State<Scalar> clip_to_bounds(const State<Scalar>& c, const Vector<Scalar>& lo,
                             const Vector<Scalar>& hi) {
  return State<Scalar>(c.x.cwiseMax(lo).cwiseMin(hi));
}

/// In-place clamp of every candidate column.
template <typename Scalar>
void clip_to_bounds(CandidateSet<Scalar>& cands, const Vector<Scalar>& lo,
                    const Vector<Scalar>& hi) {
  for (Index k = 0; k < cands.size(); ++k) {
    cands.points.col(k) = cands.points.col(k).cwiseMax(lo).cwiseMin(hi);
  }
}

}  // namespace sta
