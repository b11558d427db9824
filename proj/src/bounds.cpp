#include "qbounds/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qbounds/error.hpp"

namespace qbounds {

namespace bn = bound_name;

namespace {

void check_mags(std::span<const double> mags) {
  if (mags.empty()) throw Error(ErrorCode::EmptyInput, "no coefficient magnitudes");
  for (double m : mags) {
    if (!std::isfinite(m)) throw Error(ErrorCode::NonFinite, "coefficient magnitude is not finite");
    if (m < 0.0) throw Error(ErrorCode::NegativeInput, "coefficient magnitude is negative");
  }
}

double max_of(std::span<const double> xs) { return xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end()); }

BoundValue make(const char* name, BoundKind kind, double value) {
  BoundValue b;
  b.name = name;
  b.kind = kind;
  b.value = value;
  return b;
}

}  // namespace

const char* to_string(BlockVariant v) { return v == BlockVariant::ProofForm ? "proof_form" : "as_printed"; }

BoundValue cauchy_upper(std::span<const double> mags) {
  check_mags(mags);
  return make(bn::kCauchyUpper, BoundKind::Upper, 1.0 + max_of(mags));
}

BoundValue cauchy_lower(std::span<const double> mags) {
  check_mags(mags);
  const double q0 = mags[0];
  if (q0 == 0.0) return make(bn::kCauchyLower, BoundKind::Lower, 0.0);
  // |q_n| = 1 joins the max over i >= 1
  const double m = std::max(1.0, max_of(mags.subspan(1)));
  return make(bn::kCauchyLower, BoundKind::Lower, q0 / (q0 + m));
}

BoundValue opfer(std::span<const double> mags, OpferVariant variant) {
  check_mags(mags);
  if (variant == OpferVariant::Sum) {
    double s = 0.0;
    for (double m : mags) s += m;
    return make(bn::kOpferSum, BoundKind::Upper, std::max(1.0, s));
  }
  BoundValue b = make(bn::kOpferMax, BoundKind::Upper, std::max(1.0, max_of(mags)));
  b.rigorous = false;
  return b;
}

BoundValue fujiwara(std::span<const double> mags) {
  check_mags(mags);
  const std::size_t n = mags.size();
  double best = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    best = std::max(best, std::pow(mags[n - i], 1.0 / static_cast<double>(i)));
  }
  best = std::max(best, std::pow(mags[0] / 2.0, 1.0 / static_cast<double>(n)));
  return make(bn::kFujiwara, BoundKind::Upper, 2.0 * best);
}

namespace {

double root_sum(std::span<const double> mags) {
  const std::size_t n = mags.size();
  double s = 0.0;
  for (std::size_t i = 2; i <= n; ++i) s += std::pow(mags[n - i], 1.0 / static_cast<double>(i));
  return s;
}

}  // namespace

BoundValue theorem1(const QPolynomial& f) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "displaced-disk bound needs a monic polynomial");
  if (f.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "displaced-disk bound needs degree >= 2");
  const std::size_t n = f.degree();
  const Quaternion centre = scale(f[n - 1], -0.5);
  const double radius = modulus(centre) + root_sum(f.lower_magnitudes());
  BoundValue b = make(bn::kDisplacedDisk, BoundKind::Upper, modulus(centre) + radius);
  b.region = Ball{centre, radius};
  return b;
}

BoundValue theorem1(std::span<const double> mags) {
  check_mags(mags);
  if (mags.size() < 2) throw Error(ErrorCode::DegreeTooSmall, "displaced-disk bound needs degree >= 2");
  return make(bn::kDisplacedDisk, BoundKind::Upper, mags.back() + root_sum(mags));
}

BoundValue theorem2(std::span<const double> mags, double w) {
  check_mags(mags);
  if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorCode::NonpositiveWeight, "weight must be positive");
  const std::size_t n = mags.size();
  const double q0 = mags[0];
  double m = std::pow(w, static_cast<double>(n));  // |q_n| w^n with |q_n| = 1
  double wi = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    wi *= w;
    m = std::max(m, mags[i] * wi);
  }
  BoundValue b = make(bn::kWeightedLower, BoundKind::Lower, q0 == 0.0 ? 0.0 : q0 * w / (q0 + m));
  b.params.w = w;
  return b;
}

BoundValue theorem2_opt(std::span<const double> mags, Interval search) {
  check_mags(mags);
  const auto best = minimize_log_bounded([&](double w) { return -theorem2(mags, w).value; }, search);
  BoundValue b = theorem2(mags, best.x);
  // w = 1 reproduces the Cauchy lower bound exactly
  const BoundValue cl = cauchy_lower(mags);
  if (cl.value > b.value) {
    b = theorem2(mags, 1.0);
    b.value = std::max(b.value, cl.value);
  }
  b.params.variant = "optimized";
  return b;
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorCode::NonpositiveWeight, "weights must be positive");
  }
}

WeightVector WeightVector::geometric(double r, std::size_t n) {
  std::vector<double> w(n + 1);
  for (std::size_t i = 0; i <= n; ++i) w[i] = std::pow(r, static_cast<double>(n - i));
  return WeightVector(std::move(w));
}

double WeightVector::gamma() const {
  double g = 0.0;
  // ratios w_i / w_{i+1} for i = 1..n-2, with n = size() - 1
  for (std::size_t i = 0; i + 3 < weights_.size(); ++i) g = std::max(g, weights_[i] / weights_[i + 1]);
  return g;
}

BlockTerms block_terms(std::span<const double> v_mags, const WeightVector& w) {
  check_mags(v_mags);
  const std::size_t n = v_mags.size();
  if (n < 4) throw Error(ErrorCode::DegreeTooSmall, "block-norm bound needs n >= 4");
  if (w.size() != n + 1) throw Error(ErrorCode::WeightLengthMismatch, "block-norm bound needs n + 1 weights");
  const auto& ws = w.weights();
  BlockTerms t;
  t.gamma = w.gamma();
  double s = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double term = v_mags[j] * (ws[n] / ws[j]);
    s += term * term;
  }
  t.coupling = std::sqrt(s);
  t.link = ws[n - 2] / ws[n - 1];
  t.tail = std::max(ws[n - 1] / ws[n], (ws[n] / ws[n - 1]) * v_mags[n - 1]);
  return t;
}

BoundValue theorem3(std::span<const double> v_mags, const WeightVector& w, BlockVariant variant) {
  const BlockTerms t = block_terms(v_mags, w);
  double value = 0.0;
  if (variant == BlockVariant::ProofForm) {
    value = block_bound(t.gamma, t.coupling, t.link, t.tail);
  } else {
    const double gap = t.tail - t.gamma;
    value = 0.5 * (t.tail + t.gamma) + std::sqrt(gap * gap + 4.0 * t.link * t.coupling);
  }
  BoundValue b = make(bn::kBlockNorm, BoundKind::Upper, value);
  b.params.weights = w.weights();
  b.params.variant = to_string(variant);
  return b;
}

BoundValue theorem3(const AuxPolynomial& aux, const WeightVector& w, BlockVariant variant) {
  return theorem3(aux.magnitudes(), w, variant);
}

BoundValue theorem3_opt(std::span<const double> v_mags, BlockVariant variant, Interval search,
                        const std::optional<WeightVector>& weights) {
  if (weights) return theorem3(v_mags, *weights, variant);
  check_mags(v_mags);
  const std::size_t n = v_mags.size();
  if (n < 4) throw Error(ErrorCode::DegreeTooSmall, "block-norm bound needs n >= 4");
  const auto best = minimize_log_bounded(
      [&](double r) { return theorem3(v_mags, WeightVector::geometric(r, n), variant).value; }, search);
  BoundValue b = theorem3(v_mags, WeightVector::geometric(best.x, n), variant);
  b.params.r = best.x;
  return b;
}

std::vector<double> aux_magnitudes(const QPolynomial& f) {
  const QPolynomial g = f.side() == Side::Right ? f : QPolynomial(Side::Right, f.conjugated().coeffs());
  return aux_poly(shifted_coefficients(g)).magnitudes();
}

std::vector<double> aux_magnitude_majorant(std::span<const double> mags) {
  check_mags(mags);
  const std::size_t n = mags.size();
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = mags[j] * mags[n - 1] + (j > 0 ? mags[j - 1] : 0.0);
  return v;
}

const BoundValue* BoundReport::find(std::string_view name) const {
  for (const auto& b : bounds)
    if (b.name == name) return &b;
  return nullptr;
}

const BoundValue* BoundReport::sharpest_upper() const {
  const BoundValue* best = nullptr;
  for (const auto& b : bounds) {
    if (b.kind != BoundKind::Upper || !b.rigorous) continue;
    if (!best || b.value < best->value - 1e-12 ||
        (std::abs(b.value - best->value) <= 1e-12 && b.name < best->name)) {
      best = &b;
    }
  }
  return best;
}

const BoundValue* BoundReport::sharpest_lower() const {
  const BoundValue* best = nullptr;
  for (const auto& b : bounds) {
    if (b.kind != BoundKind::Lower || !b.rigorous) continue;
    if (!best || b.value > best->value + 1e-12 ||
        (std::abs(b.value - best->value) <= 1e-12 && b.name < best->name)) {
      best = &b;
    }
  }
  return best;
}

void finalize(BoundReport& report) {
  report.annulus = {};
  if (const auto* u = report.sharpest_upper()) report.annulus.upper = u->value;
  if (const auto* l = report.sharpest_lower()) report.annulus.lower = l->value;
}

namespace {

template <class Fn>
void attempt(BoundReport& report, const char* name, Fn&& fn) {
  try {
    report.bounds.push_back(fn());
  } catch (const Error& e) {
    report.notes.push_back(std::string(name) + " skipped: " + e.what());
  }
}

void add_block_bound(BoundReport& report, std::span<const double> v_mags, const ReportOptions& opts,
                     const char* source) {
  if (v_mags.size() < 4 && !opts.block_weights) {
    report.notes.push_back(std::string(bn::kBlockNorm) + " skipped: needs n >= 4");
    return;
  }
  attempt(report, bn::kBlockNorm, [&] {
    BoundValue b = theorem3_opt(v_mags, opts.block_variant, opts.r_bracket, opts.block_weights);
    b.params.source = source;
    return b;
  });
}

void add_magnitude_bounds(BoundReport& report, std::span<const double> mags, const ReportOptions& opts) {
  attempt(report, bn::kCauchyUpper, [&] { return cauchy_upper(mags); });
  if (opts.opfer_sum) attempt(report, bn::kOpferSum, [&] { return opfer(mags, OpferVariant::Sum); });
  if (opts.opfer_max) attempt(report, bn::kOpferMax, [&] { return opfer(mags, OpferVariant::Max); });
  attempt(report, bn::kFujiwara, [&] { return fujiwara(mags); });
}

void add_lower_bounds(BoundReport& report, std::span<const double> mags, const ReportOptions& opts) {
  attempt(report, bn::kCauchyLower, [&] { return cauchy_lower(mags); });
  attempt(report, bn::kWeightedLower, [&] { return theorem2_opt(mags, opts.w_bracket); });
}

}  // namespace

BoundReport all_bounds(const QPolynomial& input, const ReportOptions& opts) {
  BoundReport report;
  if (input.degree() < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial has no zeros to bound");
  const QPolynomial f = input.normalized();
  report.normalized = !input.is_monic();
  const auto mags = f.lower_magnitudes();

  add_magnitude_bounds(report, mags, opts);
  attempt(report, bn::kDisplacedDisk, [&] { return theorem1(f); });
  add_block_bound(report, aux_magnitudes(f), opts, f.side() == Side::Right ? "aux" : "aux_conjugate");
  add_lower_bounds(report, mags, opts);
  finalize(report);
  return report;
}

BoundReport all_bounds(std::span<const double> mags, const ReportOptions& opts,
                       const std::optional<std::vector<double>>& v_mags) {
  check_mags(mags);
  BoundReport report;
  add_magnitude_bounds(report, mags, opts);
  attempt(report, bn::kDisplacedDisk, [&] { return theorem1(mags); });
  if (v_mags) {
    add_block_bound(report, *v_mags, opts, "v_list");
  } else {
    add_block_bound(report, aux_magnitude_majorant(mags), opts, "aux_majorant");
  }
  add_lower_bounds(report, mags, opts);
  finalize(report);
  return report;
}

BoundReport block_bound_report(std::span<const double> v_mags, const ReportOptions& opts) {
  check_mags(v_mags);
  BoundReport report;
  add_block_bound(report, v_mags, opts, "v_list");
  finalize(report);
  return report;
}

}  // namespace qbounds
