#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "sta/types.hpp"

namespace sta {

/// Half-width of the sampling box used in place of infinite bounds.
inline constexpr double kSurrogateBound = 10.0;

template <typename Scalar>
using Objective = std::function<Scalar(const Vector<Scalar>&)>;

/// A named test problem with its box, objective and reference optimum.
template <typename Scalar>
struct Benchmark {
  std::string name;
  Index dim{};
  Vector<Scalar> lo;
  Vector<Scalar> hi;
  Scalar theoretical_best{};
  Objective<Scalar> objective;
  /// Known minimizer, when one is recorded.
  std::optional<Vector<Scalar>> optimizer;

  bool bounded() const { return lo.allFinite() && hi.allFinite(); }
};

template <typename Scalar>
Scalar evaluate(const Benchmark<Scalar>& b, const std::type_identity_t<Vector<Scalar>>& x) {
  if (x.size() != b.dim) {
    throw ConfigError(b.name + ": expected dimension " + std::to_string(b.dim) + ", got " +
                      std::to_string(x.size()));
  }
  return b.objective(x);
}

namespace functions {

// Closed forms of the registry problems. Each takes a vector of the
// registry dimension; no checking is done here.

template <typename Scalar>
Scalar f1(const Vector<Scalar>& v) {
  const Scalar x = v(0);
  return x <= Scalar(1) ? x * x : (x - 3) * (x - 3) - 3;
}

template <typename Scalar>
Scalar f2(const Vector<Scalar>& v) {
  using std::cos;
  using std::sin;
  const Scalar x = v(0);
  if (x == Scalar(0)) return Scalar(0);
  const Scalar s = x * sin(1 / x);
  const Scalar c = x * cos(1 / x);
  return (s * s) * (s * s) + (c * c) * (c * c);
}

template <typename Scalar>
Scalar f3(const Vector<Scalar>& v) {
  using std::pow;
  const Scalar a = pow(v(0) - 3, 8);
  const Scalar b = pow(v(1) - 3, 4);
  return a / (1 + a) + b / (1 + b);
}

template <typename Scalar>
Scalar f4(const Vector<Scalar>& v) {
  const Scalar x = v(0), y = v(1);
  return 100 * (x - y * y) * (x - y * y) + (1 - x) * (1 - x);
}

template <typename Scalar>
Scalar f5(const Vector<Scalar>& v) {
  using std::abs;
  return v(0) / (1 + abs(v(1)));
}

template <typename Scalar>
Scalar g1(const Vector<Scalar>& v) {
  using std::cos;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar x = v(0), y = v(1);
  return x * x + 2 * y * y - Scalar(0.3) * cos(3 * pi * x) - Scalar(0.4) * cos(4 * pi * y) +
         Scalar(0.7);
}

// The second factor carries -cos(3.5 pi y); with a plus sign the minimum over
// [-1,1]^2 would be about -12.34 rather than -16.0917.
template <typename Scalar>
Scalar g2(const Vector<Scalar>& v) {
  using std::cos;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar x = v(0), y = v(1);
  return (cos(2 * pi * x) + cos(Scalar(2.5) * pi * x) - Scalar(2.1)) *
         (Scalar(2.1) - cos(3 * pi * y) - cos(Scalar(3.5) * pi * y));
}

// Shekel's foxholes. Column j of the coefficient matrix is
// (-32 + 16 (j mod 5), -32 + 16 (j div 5)).
template <typename Scalar>
Scalar g3(const Vector<Scalar>& v) {
  using std::pow;
  Scalar sum = Scalar(0.002);
  for (int j = 0; j < 25; ++j) {
    const Scalar a0 = Scalar(-32 + 16 * (j % 5));
    const Scalar a1 = Scalar(-32 + 16 * (j / 5));
    sum += 1 / (Scalar(j + 1) + pow(v(0) - a0, 6) + pow(v(1) - a1, 6));
  }
  return 1 / sum;
}

// Branin.
template <typename Scalar>
Scalar g4(const Vector<Scalar>& v) {
  using std::cos;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar x = v(0), y = v(1);
  const Scalar r = y - Scalar(5.1) / (4 * pi * pi) * x * x + 5 / pi * x - 6;
  return r * r + 10 * (1 - 1 / (8 * pi)) * cos(x) + 10;
}

// Six-hump camel back.
template <typename Scalar>
Scalar g5(const Vector<Scalar>& v) {
  const Scalar x = v(0), y = v(1);
  const Scalar x2 = x * x, y2 = y * y;
  return (4 - Scalar(2.1) * x2 + x2 * x2 / 3) * x2 + x * y + (4 * y2 - 4) * y2;
}

// Goldstein-Price.
template <typename Scalar>
Scalar g6(const Vector<Scalar>& v) {
  const Scalar x = v(0), y = v(1);
  const Scalar a = x + y + 1;
  const Scalar b = 2 * x - 3 * y;
  return (1 + a * a * (19 - 14 * x + 3 * x * x - 14 * y + 6 * x * y + 3 * y * y)) *
         (30 + b * b * (18 - 32 * x + 12 * x * x + 48 * y - 36 * x * y + 27 * y * y));
}

// Shubert.
template <typename Scalar>
Scalar g7(const Vector<Scalar>& v) {
  using std::cos;
  Scalar sx = 0, sy = 0;
  for (int i = 1; i <= 5; ++i) {
    sx += i * cos(Scalar(i + 1) * v(0) + Scalar(i));
    sy += i * cos(Scalar(i + 1) * v(1) + Scalar(i));
  }
  return sx * sy;
}

template <typename Scalar>
Scalar g8(const Vector<Scalar>& v) {
  using std::pow;
  static constexpr double a[5] = {5, 3, 0.6, 0.1, 3};
  static constexpr double b[5] = {10, 1, 0.6, 2, 1.8};
  static constexpr double c[5] = {2.122, 9.429, 23.57, 74.25, 6.286};
  Scalar sum = 0;
  for (int i = 0; i < 5; ++i) {
    const Scalar r = v(0) * pow(Scalar(a[i]), v(1)) * pow(Scalar(b[i]), v(2)) - Scalar(c[i]);
    sum += r * r;
  }
  return sum;
}

// Colville.
template <typename Scalar>
Scalar g9(const Vector<Scalar>& v) {
  const Scalar x1 = v(0), x2 = v(1), x3 = v(2), x4 = v(3);
  return 100 * (x2 - x1 * x1) * (x2 - x1 * x1) + (1 - x1) * (1 - x1) +
         90 * (x4 - x3 * x3) * (x4 - x3 * x3) + (1 - x3) * (1 - x3) +
         Scalar(10.1) * ((x2 - 1) * (x2 - 1) + (x4 - 1) * (x4 - 1)) +
         Scalar(19.8) * (x2 - 1) * (x4 - 1);
}

namespace detail {
// (u^2)^(v^2 + 1), with a zero base giving zero.
template <typename Scalar>
Scalar even_power(Scalar u, Scalar v) {
  using std::exp;
  using std::log;
  const Scalar base = u * u;
  if (base == Scalar(0)) return Scalar(0);
  return exp((v * v + 1) * log(base));
}
}  // namespace detail

template <typename Scalar>
Scalar g10(const Vector<Scalar>& v) {
  Scalar sum = 0;
  for (Index i = 0; i + 1 < v.size(); ++i) {
    sum += detail::even_power(v(i), v(i + 1)) + detail::even_power(v(i + 1), v(i));
  }
  return sum;
}

// Penalized sine function.
template <typename Scalar>
Scalar g11(const Vector<Scalar>& v) {
  using std::sin;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Index n = v.size();
  const Scalar s1 = sin(pi * v(0));
  Scalar sum = 10 * s1 * s1;
  for (Index i = 0; i + 1 < n; ++i) {
    const Scalar s = sin(pi * v(i + 1));
    sum += (v(i) - 1) * (v(i) - 1) * (1 + 10 * s * s);
  }
  sum += (v(n - 1) - 1) * (v(n - 1) - 1);
  return pi / 20 * sum;
}

template <typename Scalar>
Scalar g12(const Vector<Scalar>& v) {
  const Scalar x = v(0), y = v(1);
  return 100 * (y - x * x) * (y - x * x) + (1 - x) * (1 - x);
}

template <typename Scalar>
Scalar g13(const Vector<Scalar>& v) {
  using std::exp;
  using std::sin;
  const Scalar x = v(0), y = v(1);
  const Scalar r = x * x + y * y - 25;
  const Scalar s = sin(4 * x - 3 * y);
  const Scalar l = 2 * x + y - 10;
  return exp(Scalar(0.5) * r * r) + (s * s) * (s * s) + Scalar(0.5) * l * l;
}

template <typename Scalar>
Scalar g14(const Vector<Scalar>& v) {
  const Scalar x = v(0), y = v(1);
  const Scalar x2 = x * x, y2 = y * y;
  const Scalar xy2 = x2 * y2;
  return Scalar(0.1) * (12 + x2 + (1 + y2) / x2 + (xy2 + 100) / (xy2 * xy2));
}

// Powell singular.
template <typename Scalar>
Scalar g15(const Vector<Scalar>& v) {
  const Scalar x1 = v(0), x2 = v(1), x3 = v(2), x4 = v(3);
  const Scalar a = x1 + 10 * x2;
  const Scalar b = x3 - x4;
  const Scalar c = (x2 - 2 * x3) * (x2 - 2 * x3);
  const Scalar d = (x1 - x4) * (x1 - x4);
  return a * a + 5 * b * b + c * c + 10 * d * d;
}

}  // namespace functions

namespace detail {

template <typename Scalar>
Vector<Scalar> filled(Index n, double value) {
  return Vector<Scalar>::Constant(n, static_cast<Scalar>(value));
}

template <typename Scalar>
Vector<Scalar> of(std::initializer_list<double> values) {
  Vector<Scalar> v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = static_cast<Scalar>(x);
  return v;
}

template <typename Scalar>
Benchmark<Scalar> make(std::string name, Vector<Scalar> lo, Vector<Scalar> hi, double best,
                       Objective<Scalar> objective,
                       std::optional<Vector<Scalar>> optimizer = std::nullopt) {
  Benchmark<Scalar> b;
  b.name = std::move(name);
  b.dim = lo.size();
  b.lo = std::move(lo);
  b.hi = std::move(hi);
  b.theoretical_best = static_cast<Scalar>(best);
  b.objective = std::move(objective);
  b.optimizer = std::move(optimizer);
  return b;
}

template <typename Scalar>
Benchmark<Scalar> boxed(std::string name, Index dim, double lo, double hi, double best,
                        Objective<Scalar> objective,
                        std::optional<Vector<Scalar>> optimizer = std::nullopt) {
  return make<Scalar>(std::move(name), filled<Scalar>(dim, lo), filled<Scalar>(dim, hi), best,
                      std::move(objective), std::move(optimizer));
}

}  // namespace detail

/**
 * All twenty test problems, f1..f5 then g1..g15.
 *
 * The f-group boxes are [-10, 10]^n. g8 is unbounded; initial states for it
 * are drawn from [-kSurrogateBound, kSurrogateBound]^3. Recorded optimizers
 * for g2, g3, g7 and g14 were located numerically; g8 has none.
 */
template <typename Scalar>
std::vector<Benchmark<Scalar>> registry() {
  namespace fn = functions;
  using detail::boxed;
  using detail::make;
  using detail::of;
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr double pi = std::numbers::pi;

  std::vector<Benchmark<Scalar>> out;
  out.push_back(boxed<Scalar>("f1", 1, -10, 10, -3, fn::f1<Scalar>, of<Scalar>({3})));
  out.push_back(boxed<Scalar>("f2", 1, -10, 10, 0, fn::f2<Scalar>, of<Scalar>({0})));
  out.push_back(boxed<Scalar>("f3", 2, -10, 10, 0, fn::f3<Scalar>, of<Scalar>({3, 3})));
  out.push_back(boxed<Scalar>("f4", 2, -10, 10, 0, fn::f4<Scalar>, of<Scalar>({1, 1})));
  out.push_back(boxed<Scalar>("f5", 2, -10, 10, -10, fn::f5<Scalar>, of<Scalar>({-10, 0})));

  out.push_back(boxed<Scalar>("g1", 2, -1.28, 1.28, 0, fn::g1<Scalar>, of<Scalar>({0, 0})));
  out.push_back(boxed<Scalar>("g2", 2, -1, 1, -16.0917, fn::g2<Scalar>,
                              of<Scalar>({-0.43880490391374377, -0.3058471452545157})));
  out.push_back(boxed<Scalar>("g3", 2, -65.536, 65.536, 0.9980, fn::g3<Scalar>,
                              of<Scalar>({-31.9783366563066, -31.978334707313756})));
  out.push_back(make<Scalar>("g4", of<Scalar>({-5, 0}), of<Scalar>({10, 15}), 0.3979,
                             fn::g4<Scalar>, of<Scalar>({pi, 2.275})));
  out.push_back(make<Scalar>("g5", of<Scalar>({-3, -2}), of<Scalar>({3, 2}), -1.0316,
                             fn::g5<Scalar>, of<Scalar>({0.0898, -0.7126})));
  out.push_back(boxed<Scalar>("g6", 2, -5, 5, 3, fn::g6<Scalar>, of<Scalar>({0, -1})));
  out.push_back(boxed<Scalar>("g7", 2, -10, 10, -186.7309, fn::g7<Scalar>,
                              of<Scalar>({4.858056878793045, -7.083506409762703})));
  out.push_back(boxed<Scalar>("g8", 3, -inf, inf, 8.0128, fn::g8<Scalar>));
  out.push_back(boxed<Scalar>("g9", 4, -10, 10, 0, fn::g9<Scalar>, of<Scalar>({1, 1, 1, 1})));
  out.push_back(boxed<Scalar>("g10", 20, -1, 4, 0, fn::g10<Scalar>, detail::filled<Scalar>(20, 0)));
  out.push_back(boxed<Scalar>("g11", 20, -10, 10, 0, fn::g11<Scalar>,
                              detail::filled<Scalar>(20, 1)));
  out.push_back(boxed<Scalar>("g12", 2, -10, 10, 0, fn::g12<Scalar>, of<Scalar>({1, 1})));
  out.push_back(boxed<Scalar>("g13", 2, -5, 5, 1, fn::g13<Scalar>, of<Scalar>({3, 4})));
  out.push_back(boxed<Scalar>("g14", 2, 0, 10, 1.7442, fn::g14<Scalar>,
                              of<Scalar>({1.7434520874733082, 2.029694700111274})));
  out.push_back(boxed<Scalar>("g15", 4, -5, 5, 0, fn::g15<Scalar>, of<Scalar>({0, 0, 0, 0})));
  return out;
}

/// Registry lookup by name. Throws NotFound.
template <typename Scalar>
Benchmark<Scalar> find_benchmark(std::string_view name) {
  for (auto& b : registry<Scalar>()) {
    if (b.name == name) return b;
  }
  throw NotFound("unknown benchmark '" + std::string(name) + "'");
}

}  // namespace sta
