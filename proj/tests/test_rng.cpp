#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sta/errors.hpp"
#include "sta/rng.hpp"

using sta::RandomSource;

TEST_CASE("uniform stays in range and centers on the midpoint") {
  RandomSource rng(1);
  CHECK(rng.uniform(0, 0) == 0.0);
  constexpr int n = 100000;
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    const double v = rng.uniform(-1, 1);
    REQUIRE(v >= -1.0);
    REQUIRE(v <= 1.0);
    sum += v;
  }
  CHECK(std::abs(sum / n) < 0.01);
}

TEST_CASE("uniform rejects an inverted interval") {
  RandomSource rng(1);
  CHECK_THROWS_AS(rng.uniform(1, 0), sta::InvalidRange);
}

TEST_CASE("gaussian moments") {
  RandomSource rng(2);
  constexpr int n = 100000;
  std::vector<double> v(n);
  for (auto& x : v) x = rng.gaussian();
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double var = 0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= n - 1;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("pick_index is uniform and bounded") {
  RandomSource rng(3);
  CHECK(rng.pick_index(1) == 0);
  CHECK_THROWS_AS(rng.pick_index(0), sta::InvalidRange);
  constexpr int n = 30000;
  std::array<int, 3> counts{};
  for (int i = 0; i < n; ++i) {
    const auto k = rng.pick_index(3);
    REQUIRE(k < 3);
    ++counts[k];
  }
  for (int c : counts) CHECK(std::abs(double(c) / n - 1.0 / 3.0) < 0.02);
}

TEST_CASE("same seed gives the same sequences") {
  RandomSource a(77), b(77);
  for (int i = 0; i < 100; ++i) REQUIRE(a.uniform(0, 1) == b.uniform(0, 1));
  for (int i = 0; i < 100; ++i) REQUIRE(a.gaussian() == b.gaussian());
  for (int i = 0; i < 100; ++i) REQUIRE(a.pick_index(7) == b.pick_index(7));
  RandomSource c(78);
  CHECK(a() != c());
}

TEST_CASE("xoshiro256** output is pinned") {
  // Reference xoshiro256** output when the state is filled by SplitMix64
  // from 0.
  RandomSource rng(0);
  const std::uint64_t first = rng();
  RandomSource again(0);
  CHECK(first == again());
  CHECK(first == UINT64_C(0x99ec5f36cb75f2b4));
}

TEST_CASE("Kolmogorov-Smirnov at 0.01 on 1e4 samples") {
  constexpr std::size_t n = 10000;
  RandomSource rng(11);
  std::vector<double> u(n), g(n);
  for (auto& x : u) x = rng.uniform(0, 1);
  for (auto& x : g) x = rng.gaussian();
  CHECK(sta::oracle::ks_statistic(u, [](double x) { return std::clamp(x, 0.0, 1.0); }) <
        sta::oracle::ks_critical_001(n));
  CHECK(sta::oracle::ks_statistic(g, sta::oracle::normal_cdf) < sta::oracle::ks_critical_001(n));
}

TEST_CASE("derived seeds are distinct and depend on the master seed") {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t r = 0; r < 200000; ++r) seeds.push_back(sta::derive_seed(42, r));
  std::sort(seeds.begin(), seeds.end());
  CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
  CHECK(sta::derive_seed(42, 0) != sta::derive_seed(43, 0));
  CHECK(sta::derive_seed(42, 5) == sta::derive_seed(42, 5));
}
