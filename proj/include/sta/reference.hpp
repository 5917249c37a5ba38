#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sta/types.hpp"

namespace sta {

/// One published result row: an algorithm's Best (and Average, when
/// tabulated) on one benchmark. Display data only.
struct ReferenceValue {
  std::string_view algorithm;
  std::string_view benchmark;
  double best;
  std::optional<double> average;
  std::vector<double> best_x;  ///< empty when not published
};

/// Every published row, group one (f1..f5) then group two (g1..g15).
std::span<const ReferenceValue> reference_table();

/// Algorithm label of a variant's published rows: "STA(original)" or "STA(new)".
std::string_view reference_algorithm(StaVariant variant);

std::optional<ReferenceValue> find_reference(std::string_view benchmark,
                                             std::string_view algorithm);

/// Pass rule for a measured Best value.
struct Criterion {
  enum class Kind { Near, AtMost };
  Kind kind{Kind::Near};
  double target{};
  double tolerance{};  ///< |best - target| bound for Near, unused for AtMost

  bool check(double best) const;
  std::string describe() const;
};

/// Acceptance rule of a registry benchmark. Throws NotFound.
Criterion acceptance_criterion(std::string_view benchmark);

}  // namespace sta
