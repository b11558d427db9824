#include "qbounds/selector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qbounds/error.hpp"

namespace qbounds {

const char* to_string(ProfileTag tag) {
  switch (tag) {
    case ProfileTag::FlatSmall: return "flat_small";
    case ProfileTag::HeavyTail: return "heavy_tail";
    case ProfileTag::MiddleBulge: return "middle_bulge";
    case ProfileTag::TopHeavy: return "top_heavy";
  }
  return "unknown";
}

const char* display_name(ProfileTag tag) {
  switch (tag) {
    case ProfileTag::FlatSmall: return "Flat & Small";
    case ProfileTag::HeavyTail: return "Heavy Tail";
    case ProfileTag::MiddleBulge: return "Middle Bulge";
    case ProfileTag::TopHeavy: return "Top Heavy";
  }
  return "Unknown";
}

Profile classify(std::span<const double> mags, double tau) {
  if (mags.size() < 2) throw Error(ErrorCode::DegreeTooSmall, "profile needs at least two coefficients");
  for (double m : mags) {
    if (!std::isfinite(m) || m < 0.0) throw Error(ErrorCode::NegativeInput, "magnitudes must be finite and >= 0");
  }
  const auto it = std::max_element(mags.begin(), mags.end());  // first occurrence
  Profile p;
  p.threshold = tau;
  p.max_value = *it;
  p.max_index = static_cast<std::size_t>(it - mags.begin());
  const std::size_t n = mags.size();
  if (p.max_value <= tau) {
    p.tag = ProfileTag::FlatSmall;
  } else if (p.max_index == 0) {
    p.tag = ProfileTag::HeavyTail;
  } else if (p.max_index < n - 1) {
    p.tag = ProfileTag::MiddleBulge;
  } else {
    p.tag = ProfileTag::TopHeavy;
  }
  return p;
}

namespace {

namespace bn = bound_name;

// Bound sources for one input; the two public overloads differ only here.
struct Sources {
  std::vector<double> mags;
  std::function<BoundValue()> displaced_disk;
  std::vector<double> v_mags;
  std::string v_source;
};

SelectionResult run(const Sources& src, const SelectOptions& opts) {
  SelectionResult out;
  out.profile = classify(src.mags, opts.tau);
  const auto& mags = src.mags;
  std::vector<std::string> done;

  auto add = [&](const char* name, const std::function<BoundValue()>& fn) {
    if (std::find(done.begin(), done.end(), name) != done.end()) return;
    done.emplace_back(name);
    try {
      out.all_computed.push_back(fn());
    } catch (const Error& e) {
      out.warnings.push_back(std::string(name) + " skipped: " + e.what());
    }
  };
  auto block = [&] {
    BoundValue b = theorem3_opt(src.v_mags, opts.report.block_variant, opts.report.r_bracket, opts.report.block_weights);
    b.params.source = src.v_source;
    return b;
  };
  const bool block_ok = src.v_mags.size() >= 4;

  auto everything = [&] {
    add(bn::kCauchyUpper, [&] { return cauchy_upper(mags); });
    add(bn::kOpferSum, [&] { return opfer(mags, OpferVariant::Sum); });
    add(bn::kFujiwara, [&] { return fujiwara(mags); });
    add(bn::kDisplacedDisk, src.displaced_disk);
    if (block_ok) add(bn::kBlockNorm, block);
  };

  switch (out.profile.tag) {
    case ProfileTag::FlatSmall:
      add(bn::kCauchyUpper, [&] { return cauchy_upper(mags); });
      add(bn::kOpferSum, [&] { return opfer(mags, OpferVariant::Sum); });
      break;
    case ProfileTag::HeavyTail:
      add(bn::kDisplacedDisk, src.displaced_disk);
      break;
    case ProfileTag::MiddleBulge:
      if (block_ok) {
        add(bn::kBlockNorm, block);
      } else {
        out.warnings.push_back("middle_bulge with n < 4: block-norm bound unavailable, computing all upper bounds");
        everything();
      }
      break;
    case ProfileTag::TopHeavy:
      everything();
      break;
  }
  if (opts.compute_all) everything();

  // a route whose only bound failed still needs a finite U
  const bool have_upper = std::any_of(out.all_computed.begin(), out.all_computed.end(),
                                      [](const BoundValue& b) { return b.kind == BoundKind::Upper; });
  if (!have_upper) add(bn::kCauchyUpper, [&] { return cauchy_upper(mags); });

  add(bn::kCauchyLower, [&] { return cauchy_lower(mags); });
  add(bn::kWeightedLower, [&] { return theorem2_opt(mags, opts.report.w_bracket); });

  BoundReport view;
  view.bounds = out.all_computed;
  out.upper = *view.sharpest_upper();
  out.lower = *view.sharpest_lower();
  if (out.upper.value < out.lower.value) {
    out.warnings.push_back("InconsistentBounds: upper bound below lower bound");
  }
  return out;
}

}  // namespace

SelectionResult select(const QPolynomial& input, const SelectOptions& opts) {
  if (input.degree() < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial has no zeros to bound");
  const QPolynomial f = input.normalized();
  Sources src;
  src.mags = f.lower_magnitudes();
  src.displaced_disk = [f] { return theorem1(f); };
  src.v_mags = aux_magnitudes(f);
  src.v_source = f.side() == Side::Right ? "aux" : "aux_conjugate";
  SelectionResult out = run(src, opts);
  out.normalized = !input.is_monic();
  return out;
}

SelectionResult select(std::span<const double> mags, const SelectOptions& opts,
                       const std::optional<std::vector<double>>& v_mags) {
  Sources src;
  src.mags.assign(mags.begin(), mags.end());
  src.displaced_disk = [m = src.mags] { return theorem1(m); };
  if (v_mags) {
    src.v_mags = *v_mags;
    src.v_source = "v_list";
  } else {
    src.v_mags = aux_magnitude_majorant(mags);
    src.v_source = "aux_majorant";
  }
  return run(src, opts);
}

}  // namespace qbounds
