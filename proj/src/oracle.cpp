#include "qbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/Polynomials>

#include "qbounds/error.hpp"

namespace qbounds {

std::vector<double> companion_polynomial(const QPolynomial& f) {
  const std::size_t n = f.degree();
  std::vector<Quaternion> acc(2 * n + 1);
  double scale_of_terms = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Quaternion t = f[i] * conj(f[j]);
      acc[i + j] += t;
      scale_of_terms = std::max(scale_of_terms, modulus(t));
    }
  }
  const double limit = 1e-9 * std::max(1.0, scale_of_terms);
  std::vector<double> out;
  out.reserve(acc.size());
  for (const auto& c : acc) {
    const double residue = std::max({std::abs(c.b), std::abs(c.c), std::abs(c.d)});
    if (residue > limit) {
      throw Error(ErrorCode::ImaginaryResidue, "companion polynomial coefficient is not real");
    }
    out.push_back(c.a);
  }
  return out;
}

namespace {

std::complex<double> horner(const std::vector<double>& p, std::complex<double> z, std::complex<double>* deriv) {
  std::complex<double> v = p.back();
  std::complex<double> dv = 0.0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dv = dv * z + v;
    v = v * z + p[i];
  }
  if (deriv) *deriv = dv;
  return v;
}

}  // namespace

std::vector<std::complex<double>> real_polynomial_roots(const std::vector<double>& ascending) {
  std::vector<double> p = ascending;
  while (!p.empty() && p.back() == 0.0) p.pop_back();
  if (p.size() < 2) throw Error(ErrorCode::DegreeZero, "polynomial has no roots");

  // exact zero roots are deflated so the companion never has a zero row
  std::size_t zeros = 0;
  while (p[zeros] == 0.0) ++zeros;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));

  std::vector<std::complex<double>> roots(zeros, std::complex<double>(0.0));
  if (p.size() < 2) return roots;

  Eigen::VectorXd coeffs(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) coeffs(static_cast<Eigen::Index>(i)) = p[i];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(coeffs);

  for (const auto& r : solver.roots()) {
    std::complex<double> z = r;
    std::complex<double> d;
    double res = std::abs(horner(p, z, &d));
    for (int it = 0; it < 5 && res > 0.0 && std::abs(d) > 0.0; ++it) {
      const std::complex<double> cand = z - horner(p, z, &d) / d;
      const double cand_res = std::abs(horner(p, cand, nullptr));
      if (!(cand_res < res)) break;
      z = cand;
      res = cand_res;
      horner(p, z, &d);
    }
    roots.push_back(z);
  }
  return roots;
}

ModulusSpectrum root_moduli(const QPolynomial& input) {
  if (input.degree() < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial has no zeros");
  const QPolynomial f = input.normalized();
  const auto c = companion_polynomial(f);

  ModulusSpectrum spec;
  double lo = INFINITY, hi = 0.0;
  for (double x : c) {
    if (x != 0.0) {
      lo = std::min(lo, std::abs(x));
      hi = std::max(hi, std::abs(x));
    }
  }
  spec.low_confidence = hi / lo > 1e8;

  for (const auto& r : real_polynomial_roots(c)) spec.moduli.push_back(std::abs(r));
  std::sort(spec.moduli.begin(), spec.moduli.end());
  spec.min = spec.moduli.front();
  spec.max = spec.moduli.back();
  return spec;
}

bool VerificationResult::all_passed() const { return failures() == 0; }

std::size_t VerificationResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const VerificationEntry& e) { return !e.pass; }));
}

VerificationResult verify(const ModulusSpectrum& spectrum, const BoundReport& report, double tol) {
  VerificationResult out;
  out.spectrum = spectrum;
  for (const auto& b : report.bounds) {
    VerificationEntry e;
    e.name = b.name;
    e.kind = b.kind;
    e.value = b.value;
    e.rigorous = b.rigorous;
    e.margin = b.kind == BoundKind::Upper ? b.value - spectrum.max : spectrum.min - b.value;
    e.pass = e.margin >= -tol;
    out.entries.push_back(std::move(e));
  }
  return out;
}

VerificationResult verify(const QPolynomial& f, const BoundReport& report, double tol) {
  return verify(root_moduli(f), report, tol);
}

}  // namespace qbounds
