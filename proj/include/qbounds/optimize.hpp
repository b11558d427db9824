#pragma once

#include <functional>

namespace qbounds {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/**
 * Bounded minimization of a continuous objective over [lo, hi] with
 * 0 < lo < hi, searched in log(x).
 *
 * A 64-point log-spaced scan brackets the best cell, golden-section search
 * refines it to an absolute log-tolerance of 1e-8, and a 64-point local grid
 * around the refined point guards against a non-unimodal objective.  The
 * returned x is always a point where `f` was evaluated, and `value` is f(x).
 * Deterministic.  Throws Error{InvalidInterval}.
 */
ScalarMinimum minimize_log_bounded(const std::function<double(double)>& f, Interval bracket);

}  // namespace qbounds
