#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qbounds/qpolynomial.hpp"
#include "qbounds/quaternion.hpp"

namespace qbounds {

/// Dense row-major matrix over the quaternions.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Quaternion>& entries() const { return entries_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QMatrix transpose() const;
  QMatrix conjugate_transpose() const;
  // Copy of rows [r0, r0+nr) x cols [c0, c0+nc).
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> entries_;
};

QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs);

enum class CompanionKind { Left, Right, LeftReversal };

/**
 * Companion layouts:
 *   Left          ones on the super-diagonal, last row  (-q_0 ... -q_{n-1})
 *   Right         ones on the sub-diagonal,   last column (-q_0 ... -q_{n-1})^T
 *   LeftReversal  the Left layout of reversal(f)
 * Throws Error{NotMonic}, Error{ZeroConstantTerm} (reversal only).
 */
QMatrix companion(const QPolynomial& f, CompanionKind kind);

// (n+1)x(n+1): ones on the sub-diagonal, last column (v_1, ..., v_n, 0)^T.
QMatrix companion(const AuxPolynomial& aux);

// W^{-1} B W for W = diag(w): entry (i,j) scales by w_j / w_i.
// Throws Error{NonpositiveWeight}, Error{DimensionMismatch}.
QMatrix scale_similarity(const QMatrix& b, std::span<const double> w);

// Deleted sums R_i = sum_{j!=i} |b_ij| and C_i = sum_{j!=i} |b_ji|; the
// absolute variants add |b_ii|.  Throw Error{NotSquare}.
std::vector<double> row_sums(const QMatrix& b, bool absolute = false);
std::vector<double> col_sums(const QMatrix& b, bool absolute = false);

struct Ball {
  Quaternion center;
  double radius = 0.0;

  bool contains(const Quaternion& z, double tol = 0.0) const;
  double reach() const { return modulus(center) + radius; }
};

struct InclusionRegion {
  std::vector<Ball> balls;
  double max_modulus = 0.0;  // max over balls of |center| + radius

  bool contains(const Quaternion& z, double tol = 0.0) const;
  // min over balls of |z - center| - radius; <= 0 iff z is inside.
  double excess(const Quaternion& z) const;
};

enum class GershgorinVariant { Row, Column };

// Union of balls |z - b_ii| <= R_i (row) or C_i (column); contains every
// left eigenvalue of b.  Throws Error{NotSquare}.
InclusionRegion gershgorin(const QMatrix& b, GershgorinVariant variant);

using ComplexMatrix = Eigen::MatrixXcd;

// Each entry a+bi+cj+dk becomes the block [[a+bi, c+di], [-c+di, a-bi]].
// The map is an injective algebra homomorphism.
ComplexMatrix complex_adjoint(const QMatrix& b);

enum class NormKind { One, Inf, Two, Frobenius };

// One: max column sum; Inf: max row sum; Frobenius: sqrt(trace B^H B);
// Two: largest singular value of the complex adjoint.
double norm(const QMatrix& b, NormKind kind);

/// Spectral radius of the nonnegative matrix [[a, b], [c, d]]:
///   (a + d + sqrt((a - d)^2 + 4bc)) / 2
/// With a, b, c, d the 2-norms of the blocks of a partitioned matrix this
/// bounds the moduli of its eigenvalues.  Throws Error{NegativeInput}.
double block_bound(double a, double b, double c, double d);

}  // namespace qbounds
