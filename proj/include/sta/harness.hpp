#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sta/sta.hpp"

namespace sta {

/// Optional replacements for the per-variant parameter defaults.
struct ParamOverrides {
  std::optional<double> alpha_max;
  std::optional<double> alpha_min;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<double> fc;
  std::optional<int> se;

  TransformParams<double> apply(StaVariant variant) const;
};

struct ExperimentSpec {
  std::vector<std::string> benchmarks;
  std::vector<StaVariant> variants{StaVariant::Original, StaVariant::New};
  int runs{10};
  long epochs{1000};
  std::uint64_t master_seed{42};
  ParamOverrides overrides;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads{0};

  /// All registry benchmarks, both variants, paper protocol.
  static ExperimentSpec defaults();

  /// Throws ConfigError on an empty or unknown benchmark list, runs < 1, epochs < 1.
  void validate() const;
};

struct RunSummary {
  int run{};
  std::uint64_t seed{};
  double best_f{};
  Vector<double> best_x;
  std::uint64_t evaluations{};
  double wall_seconds{};  ///< informational, never serialized
  std::vector<TracePoint<double>> trace;
};

struct CellReport {
  std::string benchmark;
  StaVariant variant{};
  double best{};
  double average{};
  std::vector<RunSummary> runs;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<CellReport> cells;  ///< benchmark-major, variants in spec order

  /// Throws NotFound.
  const CellReport& cell(std::string_view benchmark, StaVariant variant) const;
};

struct Aggregate {
  double best{};
  double average{};
};

/// Minimum and arithmetic mean, summed in order.
Aggregate aggregate(std::span<const double> values);

/// Runs every (benchmark, variant) pair `runs` times with seeds
/// derive_seed(master_seed, run) and aggregates the final best values.
ExperimentReport run_experiment(const ExperimentSpec& spec);

struct ComparisonRow {
  std::string function;
  StaVariant variant{};
  double best{};
  double average{};
  std::optional<double> reference_best;
  std::optional<double> reference_average;
  std::string criterion;
  bool pass{false};
};

/// Measured aggregates beside the published values of the same variant,
/// with the pass flag from acceptance_criterion().
std::vector<ComparisonRow> compare_to_reference(const ExperimentReport& report);

}  // namespace sta
