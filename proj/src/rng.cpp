#include "sta/rng.hpp"

#include <cmath>
#include <string>

#include "sta/errors.hpp"

namespace sta {
namespace {

__extension__ using uint128 = unsigned __int128;

constexpr std::uint64_t rotl(std::uint64_t x, unsigned k) noexcept {
  return (x << k) | (x >> (64U - k));
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) noexcept : seed_(seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) {
    s += UINT64_C(0x9e3779b97f4a7c15);
    word = mix64(s);
  }
}

RandomSource::result_type RandomSource::operator()() noexcept {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17U;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomSource::unit() noexcept {
  return static_cast<double>((*this)() >> 11U) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
  if (!(lo <= hi)) {
    throw InvalidRange("uniform: lo (" + std::to_string(lo) +
                       ") exceeds hi (" + std::to_string(hi) + ")");
  }
  const double v = lo + (hi - lo) * unit();
  // rounding in lo + width * u can land a hair above hi
  return v > hi ? hi : v;
}

double RandomSource::gaussian() noexcept {
  if (spare_gaussian_) {
    const double v = *spare_gaussian_;
    spare_gaussian_.reset();
    return v;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * unit() - 1.0;
    v = 2.0 * unit() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_gaussian_ = v * scale;
  return u * scale;
}

std::size_t RandomSource::pick_index(std::size_t n) {
  if (n == 0) {
    throw InvalidRange("pick_index: empty range");
  }
  const std::uint64_t bound = n;
  uint128 m = static_cast<uint128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<uint128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::size_t>(m >> 64U);
}

}  // namespace sta
