#include "qbounds/qpolynomial.hpp"

#include <random>

#include "qbounds/error.hpp"

namespace qbounds {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

QPolynomial::QPolynomial(Side side, std::vector<Quaternion> coeffs) : side_(side), coeffs_(std::move(coeffs)) {
  for (const auto& q : coeffs_) require_finite(q, "polynomial coefficient");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw Error(ErrorCode::EmptyInput, "the zero polynomial has no degree");
}

QPolynomial QPolynomial::monic(Side side, std::span<const Quaternion> lower) {
  std::vector<Quaternion> c(lower.begin(), lower.end());
  c.emplace_back(1.0);
  return QPolynomial(side, std::move(c));
}

std::vector<double> QPolynomial::lower_magnitudes() const {
  std::vector<double> out;
  out.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.push_back(modulus(coeffs_[i]));
  return out;
}

QPolynomial QPolynomial::normalized() const {
  if (is_monic()) return *this;
  const Quaternion inv = inverse(leading());
  std::vector<Quaternion> c;
  c.reserve(coeffs_.size());
  for (const auto& q : coeffs_) c.push_back(side_ == Side::Left ? inv * q : q * inv);
  c.back() = Quaternion(1.0);
  return QPolynomial(side_, std::move(c));
}

QPolynomial QPolynomial::conjugated() const {
  std::vector<Quaternion> c;
  c.reserve(coeffs_.size());
  for (const auto& q : coeffs_) c.push_back(conj(q));
  return QPolynomial(side_, std::move(c));
}

Quaternion eval(const QPolynomial& f, const Quaternion& z) {
  require_finite(z, "evaluation point");
  const auto& c = f.coeffs();
  Quaternion acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = (f.side() == Side::Left ? acc * z : z * acc) + c[i];
  }
  return acc;
}

QPolynomial conv(const QPolynomial& f, const QPolynomial& g) {
  if (f.side() != g.side()) throw Error(ErrorCode::SideMismatch, "convolution of a left and a right polynomial");
  std::vector<Quaternion> c(f.degree() + g.degree() + 1);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    for (std::size_t j = 0; j <= g.degree(); ++j) c[i + j] += f[i] * g[j];
  }
  return QPolynomial(f.side(), std::move(c));
}

QPolynomial reversal(const QPolynomial& f) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "reversal requires a monic polynomial");
  if (f[0].is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "reversal requires q_0 != 0");
  const std::size_t n = f.degree();
  const Quaternion inv0 = inverse(f[0]);
  // coefficient of z^{n-i} is q0^{-1} q_i (left) or q_i q0^{-1} (right)
  std::vector<Quaternion> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[n - i] = f.side() == Side::Left ? inv0 * f[i] : f[i] * inv0;
  }
  c[n] = Quaternion(1.0);
  c[0] = inv0;
  return QPolynomial(f.side(), std::move(c));
}

std::vector<double> AuxPolynomial::magnitudes() const {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(modulus(q));
  return out;
}

QPolynomial AuxPolynomial::as_polynomial() const {
  std::vector<Quaternion> c(n() + 2);
  for (std::size_t k = 0; k < n(); ++k) c[k] = -v[k];
  c[n() + 1] = Quaternion(1.0);
  return QPolynomial(Side::Right, std::move(c));
}

AuxPolynomial aux_poly(std::span<const Quaternion> shifted) {
  if (shifted.empty()) throw Error(ErrorCode::EmptyInput, "auxiliary polynomial needs q_1..q_n");
  const std::size_t n = shifted.size();
  const Quaternion& qn = shifted[n - 1];
  AuxPolynomial aux;
  aux.origin.assign(shifted.begin(), shifted.end());
  aux.v.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Quaternion prev = j == 0 ? Quaternion() : shifted[j - 1];
    aux.v.push_back(shifted[j] * qn - prev);
  }
  return aux;
}

std::vector<Quaternion> shifted_coefficients(const QPolynomial& f) {
  if (f.side() != Side::Right) throw Error(ErrorCode::SideMismatch, "auxiliary construction needs a right polynomial");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "auxiliary construction needs a monic polynomial");
  return {f.coeffs().begin(), f.coeffs().end() - 1};
}

QPolynomial random_poly(int degree, double max_modulus, std::uint64_t seed, Side side) {
  if (degree < 1) throw Error(ErrorCode::InvalidDegree, "random polynomial degree must be >= 1");
  if (!(max_modulus > 0.0) || !std::isfinite(max_modulus)) {
    throw Error(ErrorCode::NegativeInput, "max_modulus must be positive");
  }
  // Uniform doubles are built from the raw 64-bit stream so the output does
  // not depend on the standard library's distribution implementation.
  std::mt19937_64 gen(seed);
  auto uniform = [&] {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return (u - 0.5) * max_modulus;
  };
  std::vector<Quaternion> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) {
    const double a = uniform(), b = uniform(), cc = uniform(), d = uniform();
    c.emplace_back(a, b, cc, d);
  }
  c.emplace_back(1.0);
  return QPolynomial(side, std::move(c));
}

}  // namespace qbounds
