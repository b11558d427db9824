#pragma once

#include <string>
#include <vector>

#include "qbounds/bounds.hpp"
#include "qbounds/qpolynomial.hpp"

namespace qbounds {

// Tolerance used by verify() in both directions.
inline constexpr double kVerifyTolerance = 1e-7;

/// Sorted moduli of the complex roots of the companion polynomial f * conj(f),
/// with multiplicity.  Every zero of f has one of these moduli.
struct ModulusSpectrum {
  std::vector<double> moduli;
  double min = 0.0;
  double max = 0.0;
  // Coefficient dynamic range above 1e8; accuracy claims do not apply.
  bool low_confidence = false;
};

/**
 * Real coefficients (ascending) of f * fbar, where fbar carries the
 * conjugated coefficients on the same side:
 *   c_k = sum_{i+j=k} q_i conj(q_j).
 * The imaginary parts are checked rather than assumed to vanish; a residue
 * above 1e-9 (relative to the coefficient scale when that exceeds 1) throws
 * Error{ImaginaryResidue}.
 */
std::vector<double> companion_polynomial(const QPolynomial& f);

// Throws Error{DegreeZero} for constant polynomials.
ModulusSpectrum root_moduli(const QPolynomial& f);

// Complex roots of a real polynomial given ascending coefficients, via the
// balanced companion matrix followed by Newton polishing.
std::vector<std::complex<double>> real_polynomial_roots(const std::vector<double>& ascending);

struct VerificationEntry {
  std::string name;
  BoundKind kind = BoundKind::Upper;
  double value = 0.0;
  double margin = 0.0;  // value - max (upper), min - value (lower)
  bool rigorous = true;
  bool pass = false;
};

struct VerificationResult {
  ModulusSpectrum spectrum;
  std::vector<VerificationEntry> entries;

  bool all_passed() const;
  std::size_t failures() const;
};

// Upper entries pass iff value >= max - tol; lower iff value <= min + tol.
VerificationResult verify(const QPolynomial& f, const BoundReport& report, double tol = kVerifyTolerance);
VerificationResult verify(const ModulusSpectrum& spectrum, const BoundReport& report,
                          double tol = kVerifyTolerance);

}  // namespace qbounds
