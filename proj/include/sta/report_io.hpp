#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sta/benchmarks.hpp"
#include "sta/harness.hpp"

namespace sta {

enum class Format { Csv, Json, Markdown };

/// Parses "csv", "json" or "md". Throws ConfigError.
Format parse_format(std::string_view text);

/// Shortest decimal text that reads back to exactly `v` (17 significant digits).
std::string format_exact(double v);

/// Fixed four decimals, or four-digit scientific below 1e-3 in magnitude.
std::string format_table(double v);

/// One line of the per-run CSV.
struct RunRecord {
  std::string function;
  StaVariant variant{};
  int run{};
  std::uint64_t seed{};
  double best_f{};
  std::uint64_t evaluations{};
};

/// Header `function,variant,run,seed,best_f,evaluations`, one row per run.
void write_runs_csv(std::ostream& os, const ExperimentReport& report);

/// Inverse of write_runs_csv. Throws ConfigError on a malformed document.
std::vector<RunRecord> read_runs_csv(std::istream& is);

/// Full report: spec, comparison rows and per-run records.
void write_report_json(std::ostream& os, const ExperimentReport& report);

/// Markdown table Function | Variant | Best | Average | Reference-Best |
/// Reference-Average | Pass.
void write_comparison_markdown(std::ostream& os, const std::vector<ComparisonRow>& rows);

void write_report(std::ostream& os, const ExperimentReport& report, Format format);

/// Trace CSV `epoch,best_f`.
void write_trace_csv(std::ostream& os, const std::vector<TracePoint<double>>& trace);

/// Point cloud CSV `x1,...,xn`, one column of `points` per row.
void write_points_csv(std::ostream& os, const Matrix<double>& points);

/// Summary of a single run.
struct RunSummaryRecord {
  std::string function;
  StaVariant variant{};
  std::uint64_t seed{};
  long epochs{};
  double best_f{};
  Vector<double> best_x;
  std::uint64_t evaluations{};
};

void write_run_summary(std::ostream& os, const RunSummaryRecord& summary, Format format);

/// Benchmark listing: name, dim, bounds, theoretical best.
void write_benchmark_listing(std::ostream& os, const std::vector<Benchmark<double>>& benches,
                             Format format);

}  // namespace sta
