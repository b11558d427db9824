#include "qbounds/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "qbounds/error.hpp"

namespace qbounds {

namespace {

constexpr int kScanPoints = 64;
constexpr int kGuardPoints = 64;
constexpr double kLogTolerance = 1e-8;

struct Tracker {
  const std::function<double(double)>& f;
  Interval bracket;
  double t_lo, t_hi;
  ScalarMinimum best{0.0, INFINITY, 0};

  // endpoints are hit exactly; exp(log(lo)) need not round back to lo
  double operator()(double t) {
    const double x = t <= t_lo ? bracket.lo : t >= t_hi ? bracket.hi : std::clamp(std::exp(t), bracket.lo, bracket.hi);
    const double v = f(x);
    ++best.evaluations;
    // NaN never wins; ties keep the earlier point for determinism
    if (v < best.value) {
      best.x = x;
      best.value = v;
    }
    return std::isnan(v) ? INFINITY : v;
  }
};

}  // namespace

ScalarMinimum minimize_log_bounded(const std::function<double(double)>& f, Interval bracket) {
  if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo) || !std::isfinite(bracket.hi)) {
    throw Error(ErrorCode::InvalidInterval, "bracket must satisfy 0 < lo < hi < inf");
  }
  const double t_lo = std::log(bracket.lo);
  const double t_hi = std::log(bracket.hi);
  Tracker eval{f, bracket, t_lo, t_hi};

  // coarse scan
  const double step = (t_hi - t_lo) / (kScanPoints - 1);
  int best_idx = 0;
  double best_val = INFINITY;
  for (int i = 0; i < kScanPoints; ++i) {
    const double t = i == kScanPoints - 1 ? t_hi : t_lo + step * i;
    const double v = eval(t);
    if (v < best_val) {
      best_val = v;
      best_idx = i;
    }
  }

  // golden section on the cells adjacent to the best scan point
  double a = t_lo + step * std::max(best_idx - 1, 0);
  double b = std::min(t_hi, t_lo + step * std::min(best_idx + 1, kScanPoints - 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > kLogTolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }

  // local grid safeguard, one scan cell either side of the refined point
  const double centre = std::log(eval.best.x);
  const double g_lo = std::max(t_lo, centre - step);
  const double g_hi = std::min(t_hi, centre + step);
  for (int i = 0; i < kGuardPoints; ++i) {
    eval(g_lo + (g_hi - g_lo) * i / (kGuardPoints - 1));
  }
  return eval.best;
}

}  // namespace qbounds
