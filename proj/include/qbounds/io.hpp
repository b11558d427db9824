#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qbounds/bounds.hpp"
#include "qbounds/oracle.hpp"
#include "qbounds/qmatrix.hpp"
#include "qbounds/qpolynomial.hpp"
#include "qbounds/selector.hpp"

// JSON encodings.  Parsing failures throw Error{ParseError}.
//
//   Quaternion      [a, b, c, d]
//   QPolynomial     {"side": "left"|"right", "coeffs": [[a,b,c,d], ...]}   ascending
//   QMatrix         {"rows": n, "cols": m, "entries": [[a,b,c,d], ...]}    row-major
//   BoundReport     {"bounds": [{"name", "value", "params", ...}], "annulus": {"lower", "upper"}}
//   Spectrum        {"moduli": [...], "min": x, "max": y}
namespace qbounds::io {

using json = nlohmann::ordered_json;

json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json to_json(const QPolynomial& f);
QPolynomial polynomial_from_json(const json& j);

json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

json to_json(const BoundValue& b);
json to_json(const BoundReport& r);
BoundReport report_from_json(const json& j);

json to_json(const ModulusSpectrum& s);
json to_json(const VerificationResult& v);
json to_json(const SelectionResult& s);

json parse_json(std::string_view text);
json read_json_file(const std::string& path);

// Whitespace-separated reals, e.g. "8 1 0".  Rejects empty input, stray
// tokens, and non-finite or negative values.
std::vector<double> parse_magnitudes(std::string_view text);

}  // namespace qbounds::io
