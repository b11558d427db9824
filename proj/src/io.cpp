#include "qbounds/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qbounds/error.hpp"

namespace qbounds::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

// Infinity has no JSON spelling; an unavailable upper bound is written as null.
json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.a, q.b, q.c, q.d}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) fail("quaternion must be an array of 4 numbers");
  Quaternion q(number(j[0], "quaternion component"), number(j[1], "quaternion component"),
               number(j[2], "quaternion component"), number(j[3], "quaternion component"));
  require_finite(q, "quaternion");
  return q;
}

json to_json(const QPolynomial& f) {
  json coeffs = json::array();
  for (const auto& q : f.coeffs()) coeffs.push_back(to_json(q));
  return {{"side", to_string(f.side())}, {"coeffs", coeffs}};
}

QPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) fail("polynomial must be a JSON object");
  if (!j.contains("side") || !j["side"].is_string()) fail("polynomial needs a \"side\" string");
  const auto side_text = j["side"].get<std::string>();
  Side side;
  if (side_text == "left") {
    side = Side::Left;
  } else if (side_text == "right") {
    side = Side::Right;
  } else {
    fail("side must be \"left\" or \"right\"");
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) fail("polynomial needs \"coeffs\"");
  std::vector<Quaternion> c;
  for (const auto& e : j["coeffs"]) c.push_back(quaternion_from_json(e));
  return QPolynomial(side, std::move(c));
}

json to_json(const QMatrix& m) {
  json entries = json::array();
  for (const auto& q : m.entries()) entries.push_back(to_json(q));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

QMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    fail("matrix needs rows, cols and entries");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) fail("rows/cols must be positive integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) fail("rows/cols must be positive integers");
  if (!j["entries"].is_array()) fail("entries must be an array");
  std::vector<Quaternion> e;
  for (const auto& q : j["entries"]) e.push_back(quaternion_from_json(q));
  return QMatrix(rows, cols, std::move(e));
}

json to_json(const BoundValue& b) {
  json out;
  out["name"] = b.name;
  out["value"] = b.value;
  out["kind"] = b.kind == BoundKind::Upper ? "upper" : "lower";
  out["rigorous"] = b.rigorous;
  json params = json::object();
  if (b.params.w) params["w"] = *b.params.w;
  if (b.params.r) params["r"] = *b.params.r;
  if (!b.params.weights.empty()) params["weights"] = b.params.weights;
  if (!b.params.variant.empty()) params["variant"] = b.params.variant;
  if (!b.params.source.empty()) params["source"] = b.params.source;
  out["params"] = params;
  if (b.region) out["region"] = {{"center", to_json(b.region->center)}, {"radius", b.region->radius}};
  return out;
}

json to_json(const BoundReport& r) {
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  json out;
  out["bounds"] = bounds;
  out["annulus"] = {{"lower", r.annulus.lower}, {"upper", real_or_null(r.annulus.upper)}};
  const auto* u = r.sharpest_upper();
  const auto* l = r.sharpest_lower();
  out["sharpest"] = {{"upper", u ? json(u->name) : json(nullptr)}, {"lower", l ? json(l->name) : json(nullptr)}};
  out["normalized"] = r.normalized;
  out["notes"] = r.notes;
  return out;
}

BoundReport report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bounds") || !j["bounds"].is_array()) fail("report needs a \"bounds\" array");
  BoundReport r;
  for (const auto& e : j["bounds"]) {
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string()) fail("bound entry needs a name");
    BoundValue b;
    b.name = e["name"].get<std::string>();
    b.value = number(e.value("value", json()), "bound value");
    // entries without a kind are upper bounds unless the name is a known lower bound
    const bool known_lower = b.name == bound_name::kWeightedLower || b.name == bound_name::kCauchyLower;
    const std::string kind = e.value("kind", std::string(known_lower ? "lower" : "upper"));
    if (kind != "upper" && kind != "lower") fail("bound kind must be upper or lower");
    b.kind = kind == "upper" ? BoundKind::Upper : BoundKind::Lower;
    b.rigorous = e.value("rigorous", true);
    if (e.contains("params") && e["params"].is_object()) {
      const auto& p = e["params"];
      if (p.contains("w")) b.params.w = number(p["w"], "w");
      if (p.contains("r")) b.params.r = number(p["r"], "r");
      if (p.contains("weights")) b.params.weights = p["weights"].get<std::vector<double>>();
      if (p.contains("variant")) b.params.variant = p["variant"].get<std::string>();
      if (p.contains("source")) b.params.source = p["source"].get<std::string>();
    }
    if (e.contains("region")) {
      const auto& g = e["region"];
      b.region = Ball{quaternion_from_json(g.at("center")), number(g.at("radius"), "radius")};
    }
    r.bounds.push_back(std::move(b));
  }
  finalize(r);
  return r;
}

json to_json(const ModulusSpectrum& s) {
  json out = {{"moduli", s.moduli}, {"min", s.min}, {"max", s.max}};
  if (s.low_confidence) out["low_confidence"] = true;
  return out;
}

json to_json(const VerificationResult& v) {
  json entries = json::array();
  for (const auto& e : v.entries) {
    entries.push_back({{"name", e.name},
                       {"kind", e.kind == BoundKind::Upper ? "upper" : "lower"},
                       {"value", e.value},
                       {"margin", e.margin},
                       {"rigorous", e.rigorous},
                       {"pass", e.pass}});
  }
  return {{"spectrum", to_json(v.spectrum)}, {"entries", entries}, {"passed", v.all_passed()}};
}

json to_json(const SelectionResult& s) {
  json all = json::array();
  for (const auto& b : s.all_computed) all.push_back(to_json(b));
  json out;
  out["profile"] = {{"tag", to_string(s.profile.tag)},
                    {"label", display_name(s.profile.tag)},
                    {"max_index", s.profile.max_index},
                    {"max_value", s.profile.max_value},
                    {"tau", s.profile.threshold}};
  out["upper"] = to_json(s.upper);
  out["lower"] = to_json(s.lower);
  out["all_computed"] = all;
  out["warnings"] = s.warnings;
  out["normalized"] = s.normalized;
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::vector<double> parse_magnitudes(std::string_view text) {
  std::vector<double> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    double x = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last) fail("'" + tok + "' is not a number");
    if (!std::isfinite(x)) fail("magnitudes must be finite");
    if (x < 0.0) fail("magnitudes must be nonnegative");
    out.push_back(x);
  }
  if (out.empty()) fail("no magnitudes given");
  return out;
}

}  // namespace qbounds::io
