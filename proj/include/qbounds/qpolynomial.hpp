#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qbounds/quaternion.hpp"

namespace qbounds {

enum class Side { Left, Right };

const char* to_string(Side side);

/**
 * One-sided quaternionic polynomial.
 *
 * Coefficients are stored ascending: coeffs()[i] pairs with z^i.  A left
 * polynomial evaluates as sum q_i z^i, a right one as sum z^i q_i.
 * Construction trims zero leading coefficients and rejects the zero
 * polynomial, so degree() is always well defined.
 */
class QPolynomial {
 public:
  QPolynomial(Side side, std::vector<Quaternion> coeffs);

  // Monic polynomial from q_0..q_{n-1}; the leading 1 is appended.
  static QPolynomial monic(Side side, std::span<const Quaternion> lower);

  Side side() const { return side_; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  const Quaternion& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const Quaternion& leading() const { return coeffs_.back(); }
  bool is_monic() const { return leading() == Quaternion(1.0); }

  // |q_0| .. |q_{n-1}|, i.e. the magnitudes below the leading term.
  std::vector<double> lower_magnitudes() const;

  // Divides by the leading coefficient on this polynomial's side, so the
  // zero set is unchanged.
  QPolynomial normalized() const;

  // Same side, every coefficient conjugated.
  QPolynomial conjugated() const;

  bool operator==(const QPolynomial&) const = default;

 private:
  Side side_;
  std::vector<Quaternion> coeffs_;
};

Quaternion eval(const QPolynomial& f, const Quaternion& z);

// Cauchy product: coefficient of z^{i+j} accumulates q_i t_j, with the
// variable treated as central.  Throws Error{SideMismatch}.
QPolynomial conv(const QPolynomial& f, const QPolynomial& g);

// Monic reversal polynomial, whose zeros are the reciprocals of f's.
// left:  z^n + q0^{-1} q1 z^{n-1} + ... + q0^{-1} q_{n-1} z + q0^{-1}
// right: z^n + z^{n-1} q1 q0^{-1} + ... + z q_{n-1} q0^{-1} + q0^{-1}
QPolynomial reversal(const QPolynomial& f);

/**
 * Auxiliary polynomial built from the shifted coefficient list q_1..q_n of
 * the right polynomial f(z) = z^n + z^{n-1} q_n + ... + z q_2 + q_1:
 *
 *   P(z) = z^{n+1} - z^{n-1} v_n - ... - z v_2 - v_1,
 *   v_j  = q_j q_n - q_{j-1},  q_0 = 0.
 *
 * P equals -(f * (q_n - z)); its zeros are q_n together with the zeros of f.
 */
struct AuxPolynomial {
  std::vector<Quaternion> v;       // v_1..v_n
  std::vector<Quaternion> origin;  // q_1..q_n

  std::size_t n() const { return v.size(); }
  std::vector<double> magnitudes() const;
  // P as a monic right polynomial of degree n + 1.
  QPolynomial as_polynomial() const;
};

// Throws Error{EmptyInput} for an empty list.
AuxPolynomial aux_poly(std::span<const Quaternion> shifted);

// Shifted list q_j = qhat_{j-1} of a monic right polynomial of degree n.
// Throws Error{NotMonic} / Error{SideMismatch}.
std::vector<Quaternion> shifted_coefficients(const QPolynomial& f);

// Monic polynomial with independent components uniform in
// [-max_modulus/2, max_modulus/2]; every coefficient modulus is <= max_modulus.
// Deterministic per (degree, max_modulus, seed, side).
QPolynomial random_poly(int degree, double max_modulus, std::uint64_t seed, Side side);

}  // namespace qbounds
