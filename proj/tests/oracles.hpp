#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace sta::oracle {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Two-sided Kolmogorov-Smirnov statistic of `samples` against `cdf`.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Critical value of the KS statistic at significance 0.01 (asymptotic).
inline double ks_critical_001(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

struct GridMinimum {
  double x{}, y{}, value{};
};

/**
 * Minimum over a regular grid on [x0,x1]x[y0,y1], then repeated zooms of a
 * 41x41 grid around the incumbent, each shrinking the window by 10.
 * Non-finite samples are skipped.
 */
inline GridMinimum grid_minimum(const std::function<double(double, double)>& f, double x0,
                                double x1, double y0, double y1, double step, int zooms = 8) {
  GridMinimum best{0, 0, INFINITY};
  auto scan = [&](double ax, double bx, double ay, double by, double h) {
    const long nx = std::lround((bx - ax) / h);
    const long ny = std::lround((by - ay) / h);
    for (long i = 0; i <= nx; ++i) {
      const double x = std::clamp(ax + double(i) * h, x0, x1);
      for (long j = 0; j <= ny; ++j) {
        const double y = std::clamp(ay + double(j) * h, y0, y1);
        const double v = f(x, y);
        if (std::isfinite(v) && v < best.value) best = {x, y, v};
      }
    }
  };
  scan(x0, x1, y0, y1, step);
  double h = step;
  for (int z = 0; z < zooms; ++z) {
    const double w = 2 * h;
    h /= 10;
    scan(best.x - w, best.x + w, best.y - w, best.y + w, h);
  }
  return best;
}

}  // namespace sta::oracle
