#include "sta/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "sta/errors.hpp"

namespace sta {
namespace {

std::vector<ReferenceValue> build_table() {
  using R = ReferenceValue;
  constexpr auto none = std::nullopt;
  return {
      // f1
      R{"HRO", "f1", -3, none, {3.000324}},
      R{"ARSET", "f1", -3, none, {3}},
      R{"RSW", "f1", -3, none, {3}},
      R{"STA(original)", "f1", -3, none, {3}},
      R{"STA(new)", "f1", -3, none, {3}},
      // f2
      R{"HRO", "f2", 2.8595e-19, none, {2.4000e-5}},
      R{"ARSET", "f2", 2.21e-43, none, {-2.53e-11}},
      R{"RSW", "f2", 0, none, {8.17e-82}},
      R{"STA(original)", "f2", 0, none, {2.0447e-82}},
      R{"STA(new)", "f2", 0, none, {3.5197e-84}},
      // f3
      R{"ARSET", "f3", 5.04e-23, none, {3.0015, 3}},
      R{"RSW", "f3", 3.43e-28, none, {2.9996, 3}},
      R{"STA(original)", "f3", 5.8715e-33, none, {3.0000, 3.0000}},
      R{"STA(new)", "f3", 1.0335e-35, none, {3.0000, 3.0000}},
      // f4
      R{"ARSET", "f4", 4.02e-16, none, {1, 1}},
      R{"RSW", "f4", 1.97e-31, none, {1, 1}},
      R{"STA(original)", "f4", 8.2040e-12, none, {1.0000, 1.0000}},
      R{"STA(new)", "f4", 3.7678e-12, none, {1.0000, 1.0000}},
      // f5
      R{"ARSET", "f5", -10, none, {-10, 6.67e-8}},
      R{"RSW", "f5", -9.9996, none, {-9.9996, -6.57e-17}},
      R{"STA(original)", "f5", -10, none, {-10.0000, 0.0000}},
      R{"STA(new)", "f5", -10, none, {-10.0000, 0.0000}},

      // group two: DARSET, RSW, STA(original), STA(new)
      R{"DARSET", "g1", 0, 9.10e-16, {}},
      R{"RSW", "g1", 0, 0, {}},
      R{"STA(original)", "g1", 0, 5.3147e-12, {}},
      R{"STA(new)", "g1", 0, 0, {}},
      R{"DARSET", "g2", -16.0917, -16.0917, {}},
      R{"RSW", "g2", -16.0917, -15.7399, {}},
      R{"STA(original)", "g2", -16.0917, -16.0917, {}},
      R{"STA(new)", "g2", -16.0917, -16.0917, {}},
      R{"DARSET", "g3", 0.998, 1.5885, {}},
      R{"RSW", "g3", 0.998, 6.3728, {}},
      R{"STA(original)", "g3", 0.9980, 3.9354, {}},
      R{"STA(new)", "g3", 0.9980, 0.9980, {}},
      R{"DARSET", "g4", 0.3979, 0.3979, {}},
      R{"RSW", "g4", 0.3979, 0.3979, {}},
      R{"STA(original)", "g4", 0.3979, 0.3979, {}},
      R{"STA(new)", "g4", 0.3979, 0.3979, {}},
      R{"DARSET", "g5", -1.0316, -1.0316, {}},
      R{"RSW", "g5", -1.0316, -1.0316, {}},
      R{"STA(original)", "g5", -1.0316, -1.0316, {}},
      R{"STA(new)", "g5", -1.0316, -1.0316, {}},
      R{"DARSET", "g6", 3, 3, {}},
      R{"RSW", "g6", 3, 3, {}},
      R{"STA(original)", "g6", 3.0000, 3.0000, {}},
      R{"STA(new)", "g6", 3.0000, 3.0000, {}},
      R{"DARSET", "g7", -186.7309, -186.7309, {}},
      R{"RSW", "g7", -186.7309, -186.7309, {}},
      R{"STA(original)", "g7", -186.7309, -186.7309, {}},
      R{"STA(new)", "g7", -186.7309, -186.7309, {}},
      R{"DARSET", "g8", 8.0128, 8.0128, {}},
      R{"RSW", "g8", 8.0128, 8.0128, {}},
      R{"STA(original)", "g8", 8.0128, 8.0128, {}},
      R{"STA(new)", "g8", 8.0128, 8.0128, {}},
      R{"DARSET", "g9", 3.72e-12, 9.30e-6, {}},
      R{"RSW", "g9", 1.28e-28, 2.15e-28, {}},
      R{"STA(original)", "g9", 2.8718e-10, 1.1802e-9, {}},
      R{"STA(new)", "g9", 8.3086e-11, 1.1344e-9, {}},
      R{"DARSET", "g10", 2.45e-16, 4.02e-15, {}},
      R{"RSW", "g10", 0, 0, {}},
      R{"STA(original)", "g10", 0, 0, {}},
      R{"STA(new)", "g10", 4.9783e-94, 2.7247e-84, {}},
      R{"DARSET", "g11", 5.93e-12, 26.227, {}},
      R{"RSW", "g11", 2.36e-32, 3.3927, {}},
      R{"STA(original)", "g11", 7.2021e-11, 1.0417, {}},
      R{"STA(new)", "g11", 2.6223e-11, 3.8022e-11, {}},
      R{"DARSET", "g12", 3.91e-15, 4.28e-14, {}},
      R{"RSW", "g12", 2.84e-29, 6.07e-28, {}},
      R{"STA(original)", "g12", 8.9683e-14, 3.8771e-12, {}},
      R{"STA(new)", "g12", 9.5239e-14, 9.9002e-12, {}},
      R{"DARSET", "g13", 1, 1.0077, {}},
      R{"RSW", "g13", 1.0091, 1.0091, {}},
      R{"STA(original)", "g13", 1.0000, 1.0375, {}},
      R{"STA(new)", "g13", 1.0000, 1.0225, {}},
      R{"DARSET", "g14", 1.7442, 1.7442, {}},
      R{"RSW", "g14", 1.7442, 1.7442, {}},
      R{"STA(original)", "g14", 1.7442, 1.7442, {}},
      R{"STA(new)", "g14", 1.7442, 1.7442, {}},
      R{"DARSET", "g15", 8.17e-9, 1.68e-7, {}},
      R{"RSW", "g15", 1.02e-11, 1.71e-11, {}},
      R{"STA(original)", "g15", 2.1942e-14, 6.4995e-9, {}},
      R{"STA(new)", "g15", 9.9870e-14, 1.0542e-7, {}},
  };
}

struct NamedCriterion {
  std::string_view benchmark;
  Criterion criterion;
};

constexpr Criterion near(double target, double tol) { return {Criterion::Kind::Near, target, tol}; }
constexpr Criterion at_most(double bound) { return {Criterion::Kind::AtMost, bound, 0}; }

constexpr NamedCriterion kCriteria[] = {
    {"f1", near(-3, 1e-6)},         {"f2", at_most(1e-20)},       {"f3", at_most(1e-15)},
    {"f4", at_most(1e-8)},          {"f5", near(-10, 1e-6)},      {"g1", near(0, 1e-3)},
    {"g2", near(-16.0917, 1e-3)},   {"g3", near(0.9980, 1e-3)},   {"g4", near(0.3979, 1e-3)},
    {"g5", near(-1.0316, 1e-3)},    {"g6", near(3.0, 1e-3)},      {"g7", near(-186.7309, 1e-2)},
    {"g8", near(8.0128, 1e-2)},     {"g9", at_most(1e-6)},        {"g10", at_most(1e-12)},
    {"g11", at_most(1e-6)},         {"g12", at_most(1e-8)},       {"g13", near(1.0, 1e-3)},
    {"g14", near(1.7442, 1e-3)},    {"g15", at_most(1e-8)},
};

}  // namespace

std::span<const ReferenceValue> reference_table() {
  static const std::vector<ReferenceValue> table = build_table();
  return table;
}

std::string_view reference_algorithm(StaVariant variant) {
  return variant == StaVariant::Original ? "STA(original)" : "STA(new)";
}

std::optional<ReferenceValue> find_reference(std::string_view benchmark,
                                             std::string_view algorithm) {
  for (const auto& r : reference_table()) {
    if (r.benchmark == benchmark && r.algorithm == algorithm) return r;
  }
  return std::nullopt;
}

bool Criterion::check(double best) const {
  if (std::isnan(best)) return false;
  if (kind == Kind::AtMost) return best <= target;
  return std::abs(best - target) <= tolerance;
}

std::string Criterion::describe() const {
  char buf[96];
  if (kind == Kind::AtMost) {
    std::snprintf(buf, sizeof buf, "best <= %g", target);
  } else {
    std::snprintf(buf, sizeof buf, "|best - %g| <= %g", target, tolerance);
  }
  return buf;
}

Criterion acceptance_criterion(std::string_view benchmark) {
  auto it = std::find_if(std::begin(kCriteria), std::end(kCriteria),
                         [&](const NamedCriterion& c) { return c.benchmark == benchmark; });
  if (it == std::end(kCriteria)) {
    throw NotFound("no acceptance criterion for '" + std::string(benchmark) + "'");
  }
  return it->criterion;
}

}  // namespace sta
