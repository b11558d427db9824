#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbounds/optimize.hpp"
#include "qbounds/qmatrix.hpp"
#include "qbounds/qpolynomial.hpp"

namespace qbounds {

// Bound names as they appear in reports, tables and CSV headers.
namespace bound_name {
inline constexpr const char* kCauchyUpper = "cauchy_upper";
inline constexpr const char* kCauchyLower = "cauchy_lower";
inline constexpr const char* kOpferSum = "opfer_sum";
inline constexpr const char* kOpferMax = "opfer_max";
inline constexpr const char* kFujiwara = "fujiwara";
inline constexpr const char* kDisplacedDisk = "theorem_4_1";
inline constexpr const char* kWeightedLower = "theorem_4_2";
inline constexpr const char* kBlockNorm = "theorem_4_3";
}  // namespace bound_name

enum class BoundKind { Upper, Lower };

struct BoundParams {
  std::optional<double> w;      // weight of the lower bound
  std::optional<double> r;      // geometric ratio of the block-norm bound
  std::vector<double> weights;  // full weight vector w_1..w_{n+1}, when used
  std::string variant;          // formula variant tag, when one applies
  std::string source;           // where the coefficients came from

  bool empty() const { return !w && !r && weights.empty() && variant.empty() && source.empty(); }
};

struct BoundValue {
  std::string name;
  BoundKind kind = BoundKind::Upper;
  double value = 0.0;
  // False for formulas reported for comparison that do not bound every
  // zero (opfer_max).  Such entries never decide the annulus.
  bool rigorous = true;
  std::optional<Ball> region;
  BoundParams params;
};

struct AnnulusBound {
  double lower = 0.0;
  double upper = INFINITY;
};

/// Positive weights w_1..w_{n+1} for the block-norm bound.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  // w_i = r^{n+1-i}, i = 1..n+1
  static WeightVector geometric(double r, std::size_t n);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  // max(w_1/w_2, ..., w_{n-2}/w_{n-1}) for n = size() - 1
  double gamma() const;

 private:
  std::vector<double> weights_;
};

enum class OpferVariant { Sum, Max };
enum class BlockVariant { ProofForm, AsPrinted };

const char* to_string(BlockVariant v);

// The magnitude-only bounds take |q_0| .. |q_{n-1}| of a monic polynomial
// (the leading |q_n| = 1 is implied) and throw Error{EmptyInput}.
BoundValue cauchy_upper(std::span<const double> mags);
BoundValue cauchy_lower(std::span<const double> mags);
BoundValue opfer(std::span<const double> mags, OpferVariant variant);
BoundValue fujiwara(std::span<const double> mags);

// Displaced disk |z + q_{n-1}/2| <= |q_{n-1}/2| + sum_{i=2}^n |q_{n-i}|^{1/i}.
// Holds for left polynomials, and for right ones through coefficient
// conjugation (which maps zeros to their conjugates and fixes the ball).
// Throws Error{NotMonic}, Error{DegreeTooSmall}.
BoundValue theorem1(const QPolynomial& f);
// Value only: |q_{n-1}| + sum_{i=2}^n |q_{n-i}|^{1/i}.
BoundValue theorem1(std::span<const double> mags);

// Lower bound |q_0| w / (|q_0| + M), M = max_{1<=i<=n} |q_i| w^i.
// Throws Error{NonpositiveWeight}.
BoundValue theorem2(std::span<const double> mags, double w);
// Maximized over w in the bracket and never below cauchy_lower.
// Throws Error{InvalidInterval}.
BoundValue theorem2_opt(std::span<const double> mags, Interval search = {1e-3, 1e3});

// Magnitudes |v_1| .. |v_n| of the auxiliary polynomial.
struct BlockTerms {
  double gamma = 0.0;   // ||C11||_2
  double coupling = 0.0;  // ||C12||_2 = sqrt(sum |v_j|^2 (w_{n+1}/w_j)^2)
  double link = 0.0;    // ||C21||_2 = w_{n-1}/w_n
  double tail = 0.0;    // ||C22||_2 = max(w_n/w_{n+1}, (w_{n+1}/w_n)|v_n|)
};

// Throws Error{DegreeTooSmall} (n < 4), Error{WeightLengthMismatch}.
BlockTerms block_terms(std::span<const double> v_mags, const WeightVector& w);
BoundValue theorem3(std::span<const double> v_mags, const WeightVector& w, BlockVariant variant);
BoundValue theorem3(const AuxPolynomial& aux, const WeightVector& w, BlockVariant variant);
// Minimized over the geometric family w_i = r^{n+1-i}; an explicit weight
// vector, when given, is evaluated instead of searching.
BoundValue theorem3_opt(std::span<const double> v_mags, BlockVariant variant, Interval search = {1e-2, 1e2},
                        const std::optional<WeightVector>& weights = std::nullopt);

// Exact |v_j| for a monic polynomial of degree n.  Right polynomials use
// the auxiliary construction directly; left ones use it on the
// coefficient-conjugated right polynomial, whose zeros are the conjugates.
std::vector<double> aux_magnitudes(const QPolynomial& f);
// Majorant |v_j| <= |q_j||q_n| + |q_{j-1}| from magnitudes alone.  The
// block-norm bound is nondecreasing in every |v_j|, so it stays valid.
std::vector<double> aux_magnitude_majorant(std::span<const double> mags);

struct ReportOptions {
  bool opfer_sum = true;
  bool opfer_max = true;
  BlockVariant block_variant = BlockVariant::ProofForm;
  Interval w_bracket{1e-3, 1e3};
  Interval r_bracket{1e-2, 1e2};
  std::optional<WeightVector> block_weights;
};

struct BoundReport {
  std::vector<BoundValue> bounds;
  AnnulusBound annulus;
  bool normalized = false;          // input was divided by its leading coefficient
  std::vector<std::string> notes;   // bounds skipped and why

  const BoundValue* find(std::string_view name) const;
  // Rigorous entry with the smallest upper / largest lower value; ties go to
  // the lexicographically smallest name.  nullptr when none exists.
  const BoundValue* sharpest_upper() const;
  const BoundValue* sharpest_lower() const;
};

/// Every applicable bound for a full quaternionic polynomial.  A non-monic
/// input is normalized first.  Per-bound failures become notes.
BoundReport all_bounds(const QPolynomial& f, const ReportOptions& opts = {});

/// Magnitude-only report.  `v_mags`, when supplied, feeds the block-norm
/// bound directly; otherwise the magnitude majorant is used for n >= 4.
BoundReport all_bounds(std::span<const double> mags, const ReportOptions& opts = {},
                       const std::optional<std::vector<double>>& v_mags = std::nullopt);

// Report holding only the block-norm bound of an explicit v-list.
BoundReport block_bound_report(std::span<const double> v_mags, const ReportOptions& opts = {});

void finalize(BoundReport& report);

}  // namespace qbounds
