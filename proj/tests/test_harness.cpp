#include <doctest.h>

#include <cmath>
#include <set>

#include "sta/harness.hpp"
#include "sta/reference.hpp"

using namespace sta;

namespace {

ExperimentSpec small(std::vector<std::string> names, std::vector<StaVariant> variants, int runs,
                     long epochs) {
  ExperimentSpec s;
  s.benchmarks = std::move(names);
  s.variants = std::move(variants);
  s.runs = runs;
  s.epochs = epochs;
  s.master_seed = 42;
  return s;
}

}  // namespace

TEST_CASE("g5 with the new variant reproduces -1.0316") {
  const auto report = run_experiment(small({"g5"}, {StaVariant::New}, 10, 1000));
  const auto& c = report.cell("g5", StaVariant::New);
  CHECK(std::abs(c.best - (-1.0316)) <= 1e-3);
  CHECK(std::abs(c.average - (-1.0316)) <= 1e-3);
  CHECK(c.runs.size() == 10);
}

TEST_CASE("f1 with the original variant in ten epochs") {
  // Best over ten runs: an individual run may end in the x = 0 basin.
  const auto report = run_experiment(small({"f1"}, {StaVariant::Original}, 10, 10));
  CHECK(std::abs(report.cells.front().best + 3) <= 1e-6);
}

TEST_CASE("a single run has average equal to best") {
  const auto report = run_experiment(small({"g4"}, {StaVariant::Original}, 1, 30));
  CHECK(report.cells.front().average == report.cells.front().best);
}

TEST_CASE("aggregates are recomputable from the per-run entries") {
  const auto report =
      run_experiment(small({"g1", "g13"}, {StaVariant::Original, StaVariant::New}, 4, 40));
  REQUIRE(report.cells.size() == 4);
  for (const auto& c : report.cells) {
    std::vector<double> finals;
    std::set<std::uint64_t> seeds;
    for (const auto& r : c.runs) {
      finals.push_back(r.best_f);
      seeds.insert(r.seed);
      CHECK(r.seed == derive_seed(42, static_cast<std::uint64_t>(r.run)));
      CHECK(r.trace.size() == 40);
      CHECK(r.trace.back().best_f == r.best_f);
    }
    const auto a = aggregate(finals);
    CHECK(a.best == c.best);
    CHECK(a.average == c.average);
    CHECK(c.average >= c.best);
    CHECK(seeds.size() == c.runs.size());
  }
}

TEST_CASE("experiments are pure functions of the spec, with any thread count") {
  auto spec = small({"g2", "g15"}, {StaVariant::Original, StaVariant::New}, 3, 30);
  spec.threads = 1;
  const auto a = run_experiment(spec);
  spec.threads = 4;
  const auto b = run_experiment(spec);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].best == b.cells[i].best);
    CHECK(a.cells[i].average == b.cells[i].average);
    for (std::size_t r = 0; r < a.cells[i].runs.size(); ++r) {
      CHECK(a.cells[i].runs[r].best_x == b.cells[i].runs[r].best_x);
      CHECK(a.cells[i].runs[r].evaluations == b.cells[i].runs[r].evaluations);
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(run_experiment(small({"nosuch"}, {StaVariant::New}, 1, 1)), ConfigError);
  CHECK_THROWS_AS(run_experiment(small({"g1"}, {StaVariant::New}, 0, 1)), ConfigError);
  CHECK_THROWS_AS(run_experiment(small({"g1"}, {StaVariant::New}, 1, 0)), ConfigError);
  auto spec = small({"g1"}, {StaVariant::New}, 1, 1);
  spec.overrides.fc = 0.5;
  CHECK_THROWS_AS(run_experiment(spec), ConfigError);
  CHECK(ExperimentSpec::defaults().benchmarks.size() == 20);
  CHECK(ExperimentSpec::defaults().runs == 10);
  CHECK(ExperimentSpec::defaults().epochs == 1000);
}

TEST_CASE("overrides replace only the given parameters") {
  ParamOverrides o;
  o.delta = 0.5;
  o.se = 8;
  const auto p = o.apply(StaVariant::Original);
  CHECK(p.delta == 0.5);
  CHECK(p.se == 8);
  CHECK(p.fc == 4);
  CHECK(o.apply(StaVariant::New).fc == 2);
  CHECK(p.alpha == p.alpha_max);
}

TEST_CASE("comparison against the published rows") {
  ExperimentReport report;
  auto add = [&](const char* name, StaVariant v, double best) {
    CellReport c;
    c.benchmark = name;
    c.variant = v;
    c.best = c.average = best;
    report.cells.push_back(c);
  };
  add("g7", StaVariant::New, -186.7309);
  add("g4", StaVariant::Original, 0.3979);
  add("f4", StaVariant::New, 1e-3);
  add("g3", StaVariant::Original, 0.9980);
  const auto rows = compare_to_reference(report);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].pass);
  CHECK(*rows[0].reference_best == -186.7309);
  CHECK(rows[1].pass);
  CHECK_FALSE(rows[2].pass);
  CHECK(*rows[2].reference_best == 3.7678e-12);
  CHECK_FALSE(rows[2].reference_average.has_value());
  CHECK(*rows[3].reference_average == 3.9354);
}

TEST_CASE("reference table and criteria cover the registry") {
  for (const auto& b : registry<double>()) {
    CHECK(find_reference(b.name, "STA(original)").has_value());
    CHECK(find_reference(b.name, "STA(new)").has_value());
    CHECK_NOTHROW(acceptance_criterion(b.name));
  }
  CHECK(find_reference("g11", "DARSET")->average == 26.227);
  CHECK(find_reference("f1", "HRO")->best_x.front() == 3.000324);
  CHECK_THROWS_AS(acceptance_criterion("f6"), NotFound);
  const auto c = acceptance_criterion("g10");
  CHECK(c.check(1e-13));
  CHECK_FALSE(c.check(1e-11));
  CHECK_FALSE(c.check(std::nan("")));
}
