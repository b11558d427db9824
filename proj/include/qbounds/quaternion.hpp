#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qbounds {

/**
 * Real quaternion q = a + bi + cj + dk in binary64.
 *
 * Multiplication is the Hamilton product:
 *   i^2 = j^2 = k^2 = ijk = -1,  ij = -ji = k,  jk = -kj = i,  ki = -ik = j
 *
 * Values are plain aggregates; every operation is pure.
 */
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : a(re) {}  // NOLINT: real scalars embed implicitly
  constexpr Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  constexpr bool is_real() const { return b == 0 && c == 0 && d == 0; }
  bool is_finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
  }

  constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
  }

  std::array<double, 4> components() const { return {a, b, c, d}; }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }

// Hamilton product; not commutative.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion scale(const Quaternion& q, double s) { return {q.a * s, q.b * s, q.c * s, q.d * s}; }

constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

constexpr double norm2(const Quaternion& q) { return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d; }

// Overflow-safe |q|.
double modulus(const Quaternion& q);

// conj(q) / |q|^2; throws Error{DivisionByZero} for q == 0.
Quaternion inverse(const Quaternion& q);

// Throws Error{NonFinite} when any component is NaN or infinite.
void require_finite(const Quaternion& q, std::string_view what);

// `a+bi+cj+dk` with explicit signs, e.g. "1-2i+0j+0.5k".
std::string to_string(const Quaternion& q);

// Accepts the form produced by to_string, and also the shorthand
// forms "j", "-k", "3", "2i", "1+i".  Throws Error{ParseError}.
Quaternion parse_quaternion(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qbounds
