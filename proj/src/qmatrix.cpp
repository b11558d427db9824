#include "qbounds/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qbounds/error.hpp"

namespace qbounds {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
  }
  for (const auto& q : entries_) require_finite(q, "matrix entry");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> diag) {
  QMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::conjugate_transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = conj((*this)(r, c));
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  QMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  QMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t k = 0; k < lhs.cols(); ++k)
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += lhs(r, k) * rhs(k, c);
  return out;
}

QMatrix companion(const QPolynomial& f, CompanionKind kind) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "companion matrix requires a monic polynomial");
  if (kind == CompanionKind::LeftReversal) {
    if (f.side() != Side::Left) throw Error(ErrorCode::SideMismatch, "left reversal companion of a right polynomial");
    return companion(reversal(f), CompanionKind::Left);
  }
  const std::size_t n = f.degree();
  QMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (kind == CompanionKind::Left) {
      m(i, i + 1) = Quaternion(1.0);
    } else {
      m(i + 1, i) = Quaternion(1.0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (kind == CompanionKind::Left) {
      m(n - 1, i) = -f[i];
    } else {
      m(i, n - 1) = -f[i];
    }
  }
  return m;
}

QMatrix companion(const AuxPolynomial& aux) {
  const std::size_t n = aux.n();
  QMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    m(i + 1, i) = Quaternion(1.0);
    m(i, n) = aux.v[i];
  }
  return m;
}

QMatrix scale_similarity(const QMatrix& b, std::span<const double> w) {
  if (!b.is_square()) throw Error(ErrorCode::NotSquare, "similarity scaling needs a square matrix");
  if (w.size() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "weight count differs from matrix order");
  for (double x : w) {
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::NonpositiveWeight, "similarity weights must be positive");
  }
  QMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = scale(b(i, j), w[j] / w[i]);
  return out;
}

std::vector<double> row_sums(const QMatrix& b, bool absolute) {
  if (!b.is_square()) throw Error(ErrorCode::NotSquare, "row sums need a square matrix");
  std::vector<double> out(b.rows(), 0.0);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (absolute || i != j) out[i] += modulus(b(i, j));
  return out;
}

std::vector<double> col_sums(const QMatrix& b, bool absolute) {
  if (!b.is_square()) throw Error(ErrorCode::NotSquare, "column sums need a square matrix");
  std::vector<double> out(b.cols(), 0.0);
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      if (absolute || i != j) out[i] += modulus(b(j, i));
  return out;
}

bool Ball::contains(const Quaternion& z, double tol) const { return modulus(z - center) <= radius + tol; }

bool InclusionRegion::contains(const Quaternion& z, double tol) const { return excess(z) <= tol; }

double InclusionRegion::excess(const Quaternion& z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ball : balls) best = std::min(best, modulus(z - ball.center) - ball.radius);
  return best;
}

InclusionRegion gershgorin(const QMatrix& b, GershgorinVariant variant) {
  const auto radii = variant == GershgorinVariant::Row ? row_sums(b) : col_sums(b);
  InclusionRegion region;
  region.balls.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    region.balls.push_back({b(i, i), radii[i]});
    region.max_modulus = std::max(region.max_modulus, region.balls.back().reach());
  }
  return region;
}

ComplexMatrix complex_adjoint(const QMatrix& b) {
  using C = std::complex<double>;
  ComplexMatrix out(2 * b.rows(), 2 * b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      const Quaternion& q = b(r, c);
      const auto rr = static_cast<Eigen::Index>(2 * r);
      const auto cc = static_cast<Eigen::Index>(2 * c);
      out(rr, cc) = C(q.a, q.b);
      out(rr, cc + 1) = C(q.c, q.d);
      out(rr + 1, cc) = C(-q.c, q.d);
      out(rr + 1, cc + 1) = C(q.a, -q.b);
    }
  }
  return out;
}

double norm(const QMatrix& b, NormKind kind) {
  switch (kind) {
    case NormKind::One: {
      double best = 0.0;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < b.rows(); ++r) s += modulus(b(r, c));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::Inf: {
      double best = 0.0;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < b.cols(); ++c) s += modulus(b(r, c));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::Frobenius: {
      double s = 0.0;
      for (const auto& q : b.entries()) s += norm2(q);
      return std::sqrt(s);
    }
    case NormKind::Two: {
      if (b.rows() == 0 || b.cols() == 0) return 0.0;
      // Singular values of the adjoint are those of b, each doubled.
      Eigen::JacobiSVD<ComplexMatrix> svd(complex_adjoint(b));
      return svd.singularValues()(0);
    }
  }
  return 0.0;
}

double block_bound(double a, double b, double c, double d) {
  for (double x : {a, b, c, d}) {
    if (!(x >= 0.0)) throw Error(ErrorCode::NegativeInput, "block norms must be nonnegative");
  }
  return 0.5 * (a + d + std::sqrt((a - d) * (a - d) + 4.0 * b * c));
}

}  // namespace qbounds
