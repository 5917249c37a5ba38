#include "sta/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sta/config.hpp"
#include "sta/harness.hpp"
#include "sta/report_io.hpp"
#include "sta/spot_check.hpp"
#include "sta/sta.hpp"

namespace sta::cli {
namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STA_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("STA_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

/// Writes through `emit` to `path`, or to `out` when path is empty.
template <typename Emit>
void write_output(const std::string& path, std::ostream& out, Emit&& emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

struct ParamFlags {
  std::optional<int> se;
  std::optional<double> alpha_max, alpha_min, beta, gamma, delta, fc;

  void add(CLI::App& app) {
    app.add_option("--se", se, "Search enforcement (candidates per operator call)");
    app.add_option("--alpha-max", alpha_max, "Upper rotation factor");
    app.add_option("--alpha-min", alpha_min, "Lower rotation factor");
    app.add_option("--beta", beta, "Translation factor");
    app.add_option("--gamma", gamma, "Expansion factor");
    app.add_option("--delta", delta, "Axesion factor");
    app.add_option("--fc", fc, "Lessening coefficient");
  }

  void apply(ParamOverrides& o) const {
    if (se) o.se = se;
    if (alpha_max) o.alpha_max = alpha_max;
    if (alpha_min) o.alpha_min = alpha_min;
    if (beta) o.beta = beta;
    if (gamma) o.gamma = gamma;
    if (delta) o.delta = delta;
    if (fc) o.fc = fc;
  }
};

const std::vector<std::string> kFormats{"csv", "json", "md"};
const std::vector<std::string> kVariants{"original", "new"};

std::string extension(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Markdown: return "md";
  }
  return "txt";
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> v;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0) throw ConfigError("bad coordinate '" + item + "' in --x");
    v.push_back(x);
  }
  if (v.empty()) throw ConfigError("--x needs at least one coordinate");
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State transition algorithm: benchmarks, runs and experiments", "sta"};
  app.require_subcommand(1);

  // list
  auto* list = app.add_subcommand("list", "List the benchmark registry");
  std::string list_format = "md";
  std::string list_out;
  list->add_option("--format", list_format, "csv, json or md")
      ->check(CLI::IsMember(kFormats));
  list->add_option("--out", list_out, "Output file (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Run one optimization");
  std::string run_fn;
  std::string run_variant_name = "new";
  long run_epochs = 1000;
  std::optional<std::uint64_t> run_seed;
  std::string run_out;
  std::string run_format_name = "json";
  ParamFlags run_params;
  std::string run_positional;
  run->add_option("name", run_positional, "Benchmark name");
  run->add_option("-f,--function", run_fn, "Benchmark name (alternative to the positional)");
  run->add_option("--variant", run_variant_name, "original or new")
      ->check(CLI::IsMember(kVariants));
  run->add_option("--epochs", run_epochs, "Epoch budget")->check(CLI::PositiveNumber);
  run->add_option("--seed", run_seed, "Seed (default $STA_SEED, else 42)");
  run->add_option("--out", run_out, "Directory for the trace and summary files");
  run->add_option("--format", run_format_name, "Summary format: csv, json or md")
      ->check(CLI::IsMember(kFormats));
  run_params.add(*run);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a suite of independent runs");
  std::string exp_config;
  std::vector<std::string> exp_functions;
  std::vector<std::string> exp_variants;
  std::optional<int> exp_runs;
  std::optional<long> exp_epochs;
  std::optional<std::uint64_t> exp_seed;
  std::optional<unsigned> exp_threads;
  std::optional<std::string> exp_out;
  std::optional<std::string> exp_format;
  ParamFlags exp_params;
  experiment->add_option("--config", exp_config, "Key/value config file");
  experiment->add_option("-f,--function", exp_functions, "Benchmarks (default all)")
      ->delimiter(',');
  experiment->add_option("--variant", exp_variants, "Variants (default both)")
      ->delimiter(',')
      ->check(CLI::IsMember(kVariants));
  experiment->add_option("--runs", exp_runs, "Independent runs per pair")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--epochs", exp_epochs, "Epoch budget per run")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp_seed, "Master seed (default $STA_SEED, else 42)");
  experiment->add_option("--threads", exp_threads, "Worker threads (0 = hardware)");
  experiment->add_option("--out", exp_out, "Output file (default stdout)");
  experiment->add_option("--format", exp_format, "csv (per run), json (full) or md (table)")
      ->check(CLI::IsMember(kFormats));
  exp_params.add(*experiment);

  // demo-axesion
  auto* demo = app.add_subcommand("demo-axesion", "Point cloud of independent axesion candidates");
  std::string demo_x = "1,1,1";
  double demo_delta = 1.0;
  int demo_samples = 1000;
  std::optional<std::uint64_t> demo_seed;
  std::string demo_out;
  demo->add_option("--x", demo_x, "Origin, comma separated");
  demo->add_option("--delta", demo_delta, "Axesion factor")->check(CLI::NonNegativeNumber);
  demo->add_option("--samples", demo_samples, "Number of candidates")->check(CLI::PositiveNumber);
  demo->add_option("--seed", demo_seed, "Seed (default $STA_SEED, else 42)");
  demo->add_option("--out", demo_out, "Output file (default stdout)");

  // spot-check
  auto* spot = app.add_subcommand("spot-check", "Check each benchmark against its theoretical best");
  std::vector<std::string> spot_functions;
  spot->add_option("-f,--function", spot_functions, "Benchmarks (default all)")->delimiter(',');

  std::vector<const char*> argv{"sta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*list) {
      const auto benches = registry<double>();
      write_output(list_out, out,
                   [&](std::ostream& os) { write_benchmark_listing(os, benches, parse_format(list_format)); });
      return kExitOk;
    }

    if (*run) {
      if (!run_positional.empty() && !run_fn.empty() && run_positional != run_fn)
        throw ConfigError("conflicting function names '" + run_positional + "' and '" + run_fn + "'");
      if (run_fn.empty()) run_fn = run_positional;
      if (run_fn.empty()) throw ConfigError("run needs a function name");
      const auto bench = find_benchmark<double>(run_fn);
      const StaVariant run_variant = parse_variant(run_variant_name);
      const Format run_format = parse_format(run_format_name);
      ParamOverrides overrides;
      run_params.apply(overrides);
      auto cfg = RunConfig<double>::defaults(run_variant, run_seed ? *run_seed : default_seed());
      cfg.params = overrides.apply(run_variant);
      cfg.epochs = run_epochs;
      const auto result = sta::run(cfg, bench);

      RunSummaryRecord summary{bench.name,     run_variant,    result.seed,
                               cfg.epochs,     *result.best.f, result.best.x,
                               result.evaluations};
      if (!run_out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(run_out, ec);
        const auto stem = (std::filesystem::path(run_out) /
                           (bench.name + "_" + std::string(to_string(run_variant))))
                              .string();
        write_output(stem + "_trace.csv", out,
                     [&](std::ostream& os) { write_trace_csv(os, result.trace); });
        write_output(stem + "_summary." + extension(run_format), out,
                     [&](std::ostream& os) { write_run_summary(os, summary, run_format); });
      }
      write_run_summary(out, summary, run_format);
      return kExitOk;
    }

    if (*experiment) {
      ExperimentConfig config;
      if (!exp_config.empty()) {
        std::ifstream file(exp_config);
        if (!file) throw ConfigError("cannot read config '" + exp_config + "'");
        config = parse_experiment_config(file);
      }
      auto& spec = config.spec;
      if (exp_seed) {
        spec.master_seed = *exp_seed;
      } else if (!config.seed_given) {
        spec.master_seed = default_seed();
      }
      if (!exp_functions.empty()) spec.benchmarks = exp_functions;
      if (!exp_variants.empty()) {
        spec.variants.clear();
        for (const auto& v : exp_variants) spec.variants.push_back(parse_variant(v));
      }
      if (exp_runs) spec.runs = *exp_runs;
      if (exp_epochs) spec.epochs = *exp_epochs;
      if (exp_threads) spec.threads = *exp_threads;
      exp_params.apply(spec.overrides);
      const Format format = exp_format ? parse_format(*exp_format) : config.format.value_or(Format::Markdown);
      const std::string path = exp_out ? *exp_out : config.out.value_or("");

      const auto report = run_experiment(spec);
      write_output(path, out, [&](std::ostream& os) { write_report(os, report, format); });
      return kExitOk;
    }

    if (*demo) {
      const auto coords = parse_point(demo_x);
      const State<double> origin(
          Eigen::Map<const Vector<double>>(coords.data(), static_cast<Index>(coords.size())));
      auto params = TransformParams<double>::defaults(StaVariant::New);
      params.delta = demo_delta;
      params.se = demo_samples;
      RandomSource rng(demo_seed ? *demo_seed : default_seed());
      const auto cloud = op_axesion(origin, params, rng);
      write_output(demo_out, out, [&](std::ostream& os) { write_points_csv(os, cloud.points); });
      return kExitOk;
    }

    if (*spot) {
      bool all_pass = true;
      out << "| Function | Method | Value | Theoretical best | Deviation | Pass |\n"
          << "|---|---|---|---|---|---|\n";
      for (const auto& b : registry<double>()) {
        if (!spot_functions.empty() &&
            std::find(spot_functions.begin(), spot_functions.end(), b.name) == spot_functions.end())
          continue;
        const auto r = spot_check(b);
        all_pass = all_pass && r.pass;
        out << "| " << r.name << " | "
            << (r.method == SpotCheckMethod::Optimizer ? "optimizer" : "probe") << " | "
            << format_exact(r.value) << " | " << format_table(r.reference) << " | "
            << format_table(r.deviation) << " | " << (r.pass ? "pass" : "FAIL") << " |\n";
      }
      return all_pass ? kExitOk : kExitFailedCheck;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sta::cli
