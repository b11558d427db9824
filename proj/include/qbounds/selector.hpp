#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbounds/bounds.hpp"

namespace qbounds {

enum class ProfileTag { FlatSmall, HeavyTail, MiddleBulge, TopHeavy };

const char* to_string(ProfileTag tag);   // "flat_small", ...
const char* display_name(ProfileTag tag);  // "Flat & Small", ...

struct Profile {
  ProfileTag tag = ProfileTag::FlatSmall;
  std::size_t max_index = 0;  // first index attaining the maximum
  double max_value = 0.0;
  double threshold = 1.5;
};

// mags = |q_0| .. |q_{n-1}|, n >= 2.  Throws Error{DegreeTooSmall}.
Profile classify(std::span<const double> mags, double tau = 1.5);

struct SelectOptions {
  double tau = 1.5;
  bool compute_all = false;
  ReportOptions report;
};

struct SelectionResult {
  Profile profile;
  BoundValue upper;
  BoundValue lower;
  std::vector<BoundValue> all_computed;
  std::vector<std::string> warnings;
  bool normalized = false;
};

/**
 * Routes a monic polynomial to the bound predicted to be sharpest:
 *   flat_small    min(cauchy_upper, opfer_sum)
 *   heavy_tail    displaced disk
 *   middle_bulge  block-norm bound optimized over r (n >= 4, else as top_heavy)
 *   top_heavy     every rigorous upper bound
 * The lower bound is always max(cauchy_lower, optimized weighted bound).
 * U is the minimum over every upper bound computed on the way, so it is
 * never worse than a value already in hand.
 */
SelectionResult select(const QPolynomial& f, const SelectOptions& opts = {});
SelectionResult select(std::span<const double> mags, const SelectOptions& opts = {},
                       const std::optional<std::vector<double>>& v_mags = std::nullopt);

}  // namespace qbounds
