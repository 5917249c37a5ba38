#include "sta/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "sta/benchmarks.hpp"
#include "sta/reference.hpp"

namespace sta {

TransformParams<double> ParamOverrides::apply(StaVariant variant) const {
  auto p = TransformParams<double>::defaults(variant);
  if (alpha_max) p.alpha_max = *alpha_max;
  if (alpha_min) p.alpha_min = *alpha_min;
  if (beta) p.beta = *beta;
  if (gamma) p.gamma = *gamma;
  if (delta) p.delta = *delta;
  if (fc) p.fc = *fc;
  if (se) p.se = *se;
  p.alpha = p.alpha_max;
  return p;
}

ExperimentSpec ExperimentSpec::defaults() {
  ExperimentSpec spec;
  for (const auto& b : registry<double>()) spec.benchmarks.push_back(b.name);
  return spec;
}

void ExperimentSpec::validate() const {
  if (benchmarks.empty()) throw ConfigError("experiment has no benchmarks");
  if (variants.empty()) throw ConfigError("experiment has no variants");
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (epochs < 1) throw ConfigError("epochs must be at least 1");
  const auto all = registry<double>();
  for (const auto& name : benchmarks) {
    const bool known =
        std::any_of(all.begin(), all.end(), [&](const auto& b) { return b.name == name; });
    if (!known) throw ConfigError("unknown benchmark '" + name + "'");
  }
  for (auto v : variants) overrides.apply(v).validate();
}

const CellReport& ExperimentReport::cell(std::string_view benchmark, StaVariant variant) const {
  for (const auto& c : cells) {
    if (c.benchmark == benchmark && c.variant == variant) return c;
  }
  throw NotFound("report has no cell for " + std::string(benchmark) + "/" +
                 std::string(to_string(variant)));
}

Aggregate aggregate(std::span<const double> values) {
  Aggregate a;
  if (values.empty()) return a;
  a.best = values.front();
  double sum = 0.0;
  for (double v : values) {
    a.best = std::min(a.best, v);
    sum += v;
  }
  a.average = sum / static_cast<double>(values.size());
  return a;
}

namespace {

struct Job {
  std::size_t cell;
  int run;
};

RunSummary execute(const ExperimentSpec& spec, const Benchmark<double>& bench,
                   StaVariant variant, int run) {
  auto cfg = RunConfig<double>::defaults(variant, derive_seed(spec.master_seed, run));
  cfg.params = spec.overrides.apply(variant);
  cfg.epochs = spec.epochs;

  const auto start = std::chrono::steady_clock::now();
  auto result = sta::run(cfg, bench);
  const auto stop = std::chrono::steady_clock::now();

  RunSummary s;
  s.run = run;
  s.seed = result.seed;
  s.best_f = *result.best.f;
  s.best_x = std::move(result.best.x);
  s.evaluations = result.evaluations;
  s.wall_seconds = std::chrono::duration<double>(stop - start).count();
  s.trace = std::move(result.trace);
  return s;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();

  ExperimentReport report;
  report.spec = spec;
  std::vector<Benchmark<double>> benches;
  for (const auto& name : spec.benchmarks) {
    benches.push_back(find_benchmark<double>(name));
    for (auto v : spec.variants) {
      CellReport c;
      c.benchmark = name;
      c.variant = v;
      c.runs.resize(static_cast<std::size_t>(spec.runs));
      report.cells.push_back(std::move(c));
    }
  }

  std::vector<Job> jobs;
  for (std::size_t c = 0; c < report.cells.size(); ++c)
    for (int r = 0; r < spec.runs; ++r) jobs.push_back({c, r});

  // Each job owns its RandomSource and writes only its own slot.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const auto [c, r] = jobs[j];
      auto& cell = report.cells[c];
      try {
        cell.runs[static_cast<std::size_t>(r)] =
            execute(spec, benches[c / spec.variants.size()], cell.variant, r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& cell : report.cells) {
    std::vector<double> finals;
    for (const auto& r : cell.runs) finals.push_back(r.best_f);
    const auto a = aggregate(finals);
    cell.best = a.best;
    cell.average = a.average;
  }
  return report;
}

std::vector<ComparisonRow> compare_to_reference(const ExperimentReport& report) {
  std::vector<ComparisonRow> rows;
  for (const auto& cell : report.cells) {
    ComparisonRow row;
    row.function = cell.benchmark;
    row.variant = cell.variant;
    row.best = cell.best;
    row.average = cell.average;
    if (auto ref = find_reference(cell.benchmark, reference_algorithm(cell.variant))) {
      row.reference_best = ref->best;
      row.reference_average = ref->average;
    }
    const auto criterion = acceptance_criterion(cell.benchmark);
    row.criterion = criterion.describe();
    row.pass = criterion.check(cell.best);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sta
