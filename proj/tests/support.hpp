#pragma once

// Test-only helpers: random generators and oracles that share no code path
// with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qbounds/qmatrix.hpp"
#include "qbounds/qpolynomial.hpp"
#include "qbounds/quaternion.hpp"

namespace qtest {

using qbounds::QMatrix;
using qbounds::QPolynomial;
using qbounds::Quaternion;
using qbounds::Side;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // components uniform in [-s, s]
  Quaternion quat(double s = 1.0) { return {uniform(-s, s), uniform(-s, s), uniform(-s, s), uniform(-s, s)}; }

  QPolynomial monic(Side side, int degree, double s = 1.0) {
    std::vector<Quaternion> c;
    for (int i = 0; i < degree; ++i) c.push_back(quat(s));
    c.emplace_back(1.0);
    return QPolynomial(side, std::move(c));
  }

  QMatrix matrix(std::size_t rows, std::size_t cols, double s = 1.0) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = quat(s);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

inline double qdist(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c), std::abs(p.d - q.d)});
}

inline double qabs(const Quaternion& q) { return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d); }

// Spectral norm by power iteration on B^H B carried out directly in
// quaternion arithmetic (no complex embedding, no SVD).  Stops when
// successive Rayleigh quotients agree to 1e-12 relative.
inline double power_iteration_norm(const QMatrix& b, std::uint64_t seed = 7) {
  Gen g(seed);
  const std::size_t n = b.cols();
  std::vector<Quaternion> x(n);
  for (auto& q : x) q = g.quat();
  auto apply = [&](const std::vector<Quaternion>& v) {
    std::vector<Quaternion> y(b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) y[r] += b(r, c) * v[c];
    std::vector<Quaternion> z(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < b.rows(); ++r) z[c] += qbounds::conj(b(r, c)) * y[r];
    return z;
  };
  auto vnorm = [](const std::vector<Quaternion>& v) {
    double s = 0.0;
    for (const auto& q : v) s += qbounds::norm2(q);
    return std::sqrt(s);
  };
  double prev = 0.0;
  for (int it = 0; it < 200000; ++it) {
    const double nx = vnorm(x);
    if (nx == 0.0) return 0.0;
    for (auto& q : x) q = qbounds::scale(q, 1.0 / nx);
    auto z = apply(x);
    double rq = 0.0;  // x^H z, real for Hermitian B^H B
    for (std::size_t i = 0; i < n; ++i) rq += (qbounds::conj(x[i]) * z[i]).a;
    x = std::move(z);
    if (it > 5 && std::abs(rq - prev) <= 1e-12 * std::abs(rq)) return std::sqrt(rq);
    prev = rq;
  }
  return std::sqrt(prev);
}

// Durand-Kerner (Weierstrass) iteration for the complex roots of a real
// polynomial, ascending coefficients.
inline std::vector<std::complex<double>> durand_kerner(std::vector<double> p) {
  while (p.back() == 0.0) p.pop_back();
  const std::size_t n = p.size() - 1;
  const double lead = p.back();
  for (auto& c : p) c /= lead;
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(p[i]));
  radius += 1.0;
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i)) * (radius / 2.0);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = p[n];
    for (std::size_t i = n; i-- > 0;) v = v * x + p[i];
    return v;
  };
  for (int it = 0; it < 5000; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0.0) den = 1e-300;
      const auto step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * radius) break;
  }
  return z;
}

inline std::vector<double> sorted_moduli(const std::vector<std::complex<double>>& roots) {
  std::vector<double> m;
  for (const auto& r : roots) m.push_back(std::abs(r));
  std::sort(m.begin(), m.end());
  return m;
}

// Linear factor z - a on the given side.
inline QPolynomial linear(Side side, const Quaternion& a) { return QPolynomial(side, {-a, Quaternion(1.0)}); }

}  // namespace qtest
