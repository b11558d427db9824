#include "qbounds/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "qbounds/error.hpp"

namespace qbounds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::WeightLengthMismatch: return "WeightLengthMismatch";
    case ErrorCode::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double modulus(const Quaternion& q) {
  const double m = std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c), std::abs(q.d)});
  if (m == 0.0) return 0.0;
  const Quaternion s = scale(q, 1.0 / m);
  return m * std::sqrt(norm2(s));
}

Quaternion inverse(const Quaternion& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero quaternion");
  const double m = modulus(q);
  // conj(q)/|q|^2, scaled in two steps so |q|^2 cannot overflow
  return scale(scale(conj(q), 1.0 / m), 1.0 / m);
}

void require_finite(const Quaternion& q, std::string_view what) {
  if (!q.is_finite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + " has a non-finite component");
  }
}

namespace {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void append_signed(std::string& out, double x, char unit) {
  std::string s = format_real(x);
  if (s.front() != '-') out += '+';
  out += s;
  out += unit;
}

}  // namespace

std::string to_string(const Quaternion& q) {
  std::string out = format_real(q.a);
  append_signed(out, q.b, 'i');
  append_signed(out, q.c, 'j');
  append_signed(out, q.d, 'k');
  return out;
}

Quaternion parse_quaternion(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty quaternion literal");

  Quaternion q;
  std::size_t pos = 0;
  bool seen[4] = {false, false, false, false};
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorCode::ParseError, "expected sign in '" + s + "'");
    }

    // A mantissa may itself contain an exponent sign ("1e-3"), so scan it
    // with from_chars rather than splitting on '+'/'-'.
    double value = 1.0;
    bool has_number = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
      if (ec != std::errc()) throw Error(ErrorCode::ParseError, "bad number in '" + s + "'");
      pos = static_cast<std::size_t>(ptr - s.data());
      has_number = true;
    }

    int slot = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      slot = s[pos] == 'i' ? 1 : s[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!has_number) {
      throw Error(ErrorCode::ParseError, "dangling sign in '" + s + "'");
    }
    if (seen[slot]) throw Error(ErrorCode::ParseError, "repeated component in '" + s + "'");
    seen[slot] = true;

    const double v = sign * value;
    switch (slot) {
      case 0: q.a = v; break;
      case 1: q.b = v; break;
      case 2: q.c = v; break;
      default: q.d = v; break;
    }
  }
  require_finite(q, "quaternion literal");
  return q;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace qbounds
