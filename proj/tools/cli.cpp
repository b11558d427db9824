#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "qbounds/bounds.hpp"
#include "qbounds/error.hpp"
#include "qbounds/io.hpp"
#include "qbounds/oracle.hpp"
#include "qbounds/selector.hpp"

namespace qbounds::cli {

namespace {

namespace bn = bound_name;

constexpr const char* kBenchColumns[] = {bn::kCauchyUpper, bn::kOpferSum,      bn::kOpferMax,    bn::kFujiwara,
                                         bn::kDisplacedDisk, bn::kBlockNorm, bn::kCauchyLower, bn::kWeightedLower};

constexpr const char* kBenchHelp =
    "CSV columns (fixed order):\n"
    "  index,seed,side,degree,cauchy_upper,opfer_sum,opfer_max,fujiwara,theorem_4_1,\n"
    "  theorem_4_3,cauchy_lower,theorem_4_2,oracle_min,oracle_max,winner,failures\n"
    "Values carry 10 significant digits; an empty cell means the bound does not apply.\n"
    "Row i uses seed + i and degree lo + (i mod (hi - lo + 1)).";

struct Config {
  std::string mags;
  std::string poly;
  std::string vlist;
  std::string weights;
  std::string report;
  double tau = 1.5;
  bool as_printed = false;
  std::string opfer = "both";
  std::string format = "table";
  std::string w_bracket = "1e-3,1e3";
  std::string r_bracket = "1e-2,1e2";
  std::vector<double> extra_upper;
  std::uint64_t seed = 1;
  int count = 100;
  std::string degrees = "2..6";
  std::string side = "left";
  double max_modulus = 10.0;
  bool all = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string fixed4(double x) { return std::isfinite(x) ? fmt("%.4f", x) : std::string("inf"); }
std::string sig10(double x) { return fmt("%.10g", x); }

Interval parse_interval(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(flag) + " expects lo,hi");
  try {
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, comma), &used);
    const double hi = std::stod(text.substr(comma + 1));
    if (!(lo > 0.0) || !(hi > lo)) throw UsageError(std::string(flag) + " needs 0 < lo < hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects lo,hi");
  }
}

std::pair<int, int> parse_degrees(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("--degrees expects a..b");
  }
}

ReportOptions report_options(const Config& c) {
  ReportOptions o;
  if (c.opfer == "sum") {
    o.opfer_max = false;
  } else if (c.opfer == "max") {
    o.opfer_sum = false;
  } else if (c.opfer != "both") {
    throw UsageError("--opfer must be sum, max or both");
  }
  o.block_variant = c.as_printed ? BlockVariant::AsPrinted : BlockVariant::ProofForm;
  o.w_bracket = parse_interval(c.w_bracket, "--w-bracket");
  o.r_bracket = parse_interval(c.r_bracket, "--r-bracket");
  if (!c.weights.empty()) o.block_weights = WeightVector(io::parse_magnitudes(c.weights));
  return o;
}

// Exactly one of --mags / --poly, with --vlist allowed on its own.
struct Input {
  std::optional<QPolynomial> poly;
  std::optional<std::vector<double>> mags;
  std::optional<std::vector<double>> vlist;
};

Input load_input(const Config& c) {
  const int sources = !c.mags.empty() + !c.poly.empty();
  if (sources > 1) throw UsageError("give either --mags or --poly, not both");
  Input in;
  if (!c.poly.empty()) in.poly = io::polynomial_from_json(io::read_json_file(c.poly));
  if (!c.mags.empty()) in.mags = io::parse_magnitudes(c.mags);
  if (!c.vlist.empty()) in.vlist = io::parse_magnitudes(c.vlist);
  if (!in.poly && !in.mags && !in.vlist) {
    throw UsageError("Invalid input. Please enter numbers separated by spaces (--mags) or give --poly");
  }
  return in;
}

void print_bound_line(std::ostream& out, const BoundValue& b) {
  out << std::left << std::setw(16) << (b.name + ":") << ' ' << fixed4(b.value);
  if (!b.rigorous) out << "  (not a rigorous bound)";
  if (b.params.w) out << "  w=" << fmt("%.6g", *b.params.w);
  if (b.params.r) out << "  r=" << fmt("%.6g", *b.params.r);
  if (b.region) out << "  center=" << to_string(b.region->center) << " radius=" << fixed4(b.region->radius);
  out << '\n';
}

void print_report_table(std::ostream& out, const BoundReport& r) {
  out << "--- Actual Computations ---\n";
  for (const auto& b : r.bounds)
    if (b.kind == BoundKind::Upper) print_bound_line(out, b);
  out << "\n--- Lower Bounds ---\n";
  for (const auto& b : r.bounds)
    if (b.kind == BoundKind::Lower) print_bound_line(out, b);
  out << "\n--------------------------------------------------\n";
  if (const auto* u = r.sharpest_upper()) out << " SHARPEST BOUND: " << u->name << " (" << fixed4(u->value) << ")\n";
  if (const auto* l = r.sharpest_lower()) {
    out << " SHARPEST LOWER BOUND: " << l->name << " (" << fixed4(l->value) << ")\n";
  }
  out << " ANNULUS: " << fixed4(r.annulus.lower) << " <= |z| <= " << fixed4(r.annulus.upper) << '\n';
  out << "--------------------------------------------------\n";
  if (r.normalized) out << "note: input was normalized by its leading coefficient\n";
  for (const auto& n : r.notes) out << "note: " << n << '\n';
}

void print_report_csv(std::ostream& out, const BoundReport& r) {
  out << "name,kind,value,rigorous\n";
  for (const auto& b : r.bounds) {
    out << b.name << ',' << (b.kind == BoundKind::Upper ? "upper" : "lower") << ',' << sig10(b.value) << ','
        << (b.rigorous ? 1 : 0) << '\n';
  }
}

BoundReport build_report(const Input& in, const ReportOptions& opts) {
  if (in.poly) return all_bounds(*in.poly, opts);
  if (in.mags) return all_bounds(*in.mags, opts, in.vlist);
  return block_bound_report(*in.vlist, opts);
}

int run_bound(const Config& c, std::ostream& out) {
  const Input in = load_input(c);
  const BoundReport r = build_report(in, report_options(c));
  if (c.format == "json") {
    out << io::to_json(r).dump(2) << '\n';
  } else if (c.format == "csv") {
    print_report_csv(out, r);
  } else {
    print_report_table(out, r);
  }
  return kOk;
}

int run_select(const Config& c, std::ostream& out) {
  const Input in = load_input(c);
  SelectOptions opts;
  opts.tau = c.tau;
  opts.compute_all = c.all;
  opts.report = report_options(c);
  SelectionResult s;
  std::size_t degree = 0;
  if (in.poly) {
    s = select(*in.poly, opts);
    degree = in.poly->degree();
  } else if (in.mags) {
    s = select(*in.mags, opts, in.vlist);
    degree = in.mags->size();
  } else {
    throw UsageError("select needs --mags or --poly");
  }

  if (c.format == "json") {
    out << io::to_json(s).dump(2) << '\n';
    return kOk;
  }
  if (c.format == "csv") {
    out << "name,kind,value\n";
    for (const auto& b : s.all_computed) {
      out << b.name << ',' << (b.kind == BoundKind::Upper ? "upper" : "lower") << ',' << sig10(b.value) << '\n';
    }
    return kOk;
  }
  out << "--- Heuristic Analysis ---\n";
  out << "Degree of polynomial: " << degree << '\n';
  out << "Maximum coefficient magnitude: " << fmt("%g", s.profile.max_value) << " (found at q_" << s.profile.max_index
      << ")\n";
  out << "Profile: '" << display_name(s.profile.tag) << "'\n\n";
  for (const auto& b : s.all_computed) print_bound_line(out, b);
  out << "\n--------------------------------------------------\n";
  out << " U = " << fixed4(s.upper.value) << " (" << s.upper.name << ")\n";
  out << " L = " << fixed4(s.lower.value) << " (" << s.lower.name << ")\n";
  out << "--------------------------------------------------\n";
  for (const auto& w : s.warnings) out << "warning: " << w << '\n';
  return kOk;
}

int run_verify(const Config& c, std::ostream& out) {
  const Input in = load_input(c);
  if (!in.poly) throw UsageError("verify needs a full polynomial (--poly)");
  BoundReport r = c.report.empty() ? all_bounds(*in.poly, report_options(c))
                                   : io::report_from_json(io::read_json_file(c.report));
  for (double v : c.extra_upper) {
    BoundValue b;
    b.name = "user_upper";
    b.value = v;
    r.bounds.push_back(b);
  }
  const VerificationResult v = verify(*in.poly, r);

  if (c.format == "json") {
    out << io::to_json(v).dump(2) << '\n';
  } else {
    out << "oracle: min |z| = " << sig10(v.spectrum.min) << ", max |z| = " << sig10(v.spectrum.max);
    if (v.spectrum.low_confidence) out << " (low confidence)";
    out << '\n';
    for (const auto& e : v.entries) {
      out << (e.pass ? "PASS " : "FAIL ") << std::left << std::setw(16) << e.name << ' '
          << (e.kind == BoundKind::Upper ? "upper " : "lower ") << sig10(e.value) << "  margin " << sig10(e.margin)
          << '\n';
    }
    out << (v.all_passed() ? "all bounds verified\n" : "verification FAILED\n");
  }
  return v.all_passed() ? kOk : kVerificationFailed;
}

int run_bench(const Config& c, std::ostream& out) {
  const auto [lo, hi] = parse_degrees(c.degrees);
  if (lo < 1 || hi < lo) throw UsageError("--degrees needs 1 <= a <= b");
  if (c.count < 0) throw UsageError("--count must be >= 0");
  Side side;
  if (c.side == "left") {
    side = Side::Left;
  } else if (c.side == "right") {
    side = Side::Right;
  } else {
    throw UsageError("--side must be left or right");
  }
  const ReportOptions opts = report_options(c);

  out << "index,seed,side,degree";
  for (const char* col : kBenchColumns) out << ',' << col;
  out << ",oracle_min,oracle_max,winner,failures\n";
  for (int i = 0; i < c.count; ++i) {
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
    const int degree = lo + i % (hi - lo + 1);
    const QPolynomial f = random_poly(degree, c.max_modulus, seed, side);
    const BoundReport r = all_bounds(f, opts);
    const VerificationResult v = verify(f, r);
    out << i << ',' << seed << ',' << to_string(side) << ',' << degree;
    for (const char* col : kBenchColumns) {
      out << ',';
      if (const auto* b = r.find(col)) out << sig10(b->value);
    }
    const auto* win = r.sharpest_upper();
    out << ',' << sig10(v.spectrum.min) << ',' << sig10(v.spectrum.max) << ',' << (win ? win->name : "") << ','
        << v.failures() << '\n';
  }
  return kOk;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--mags", c.mags, "Magnitudes |q_0| .. |q_{n-1}| separated by spaces (monic leading 1 implied)");
  sub->add_option("--poly", c.poly, "Polynomial JSON file {\"side\":..., \"coeffs\": [[a,b,c,d], ...]}");
  sub->add_option("--vlist", c.vlist, "Auxiliary magnitudes |v_1| .. |v_n| for the block-norm bound");
  sub->add_option("--weights", c.weights, "Explicit weights w_1 .. w_{n+1} for the block-norm bound");
  sub->add_option("--tau", c.tau, "Profile threshold")->capture_default_str();
  sub->add_flag("--as-printed", c.as_printed, "Block-norm bound with the 1/2 applied as in the displayed formula");
  sub->add_option("--opfer", c.opfer, "sum|max|both")->capture_default_str();
  sub->add_option("--format", c.format, "table|json|csv")->capture_default_str();
  sub->add_option("--w-bracket", c.w_bracket, "Search bracket lo,hi for the lower-bound weight")->capture_default_str();
  sub->add_option("--r-bracket", c.r_bracket, "Search bracket lo,hi for the geometric ratio")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-modulus bounds for one-sided quaternionic polynomials", "qbounds"};
  app.require_subcommand(1);
  Config c;

  auto* bound = app.add_subcommand("bound", "Compute every applicable bound");
  add_common(bound, c);
  auto* sel = app.add_subcommand("select", "Classify the coefficient profile and pick the sharpest bounds");
  add_common(sel, c);
  sel->add_flag("--all", c.all, "Compute every upper bound regardless of the profile");
  auto* ver = app.add_subcommand("verify", "Check bounds against the root-modulus oracle");
  add_common(ver, c);
  ver->add_option("--report", c.report, "BoundReport JSON to verify instead of recomputing");
  ver->add_option("--extra-upper", c.extra_upper, "Additional upper-bound values to check");
  auto* bench = app.add_subcommand("bench", "Seeded random benchmark, CSV on stdout");
  bench->footer(kBenchHelp);
  bench->add_option("--seed", c.seed, "Base seed")->capture_default_str();
  bench->add_option("--count", c.count, "Number of polynomials")->capture_default_str();
  bench->add_option("--degrees", c.degrees, "Degree range a..b")->capture_default_str();
  bench->add_option("--side", c.side, "left|right")->capture_default_str();
  bench->add_option("--max-modulus", c.max_modulus, "Coefficient modulus cap")->capture_default_str();
  bench->add_flag("--as-printed", c.as_printed, "Block-norm bound with the 1/2 applied as in the displayed formula");
  bench->add_option("--opfer", c.opfer, "sum|max|both")->capture_default_str();
  bench->add_option("--w-bracket", c.w_bracket, "Search bracket lo,hi")->capture_default_str();
  bench->add_option("--r-bracket", c.r_bracket, "Search bracket lo,hi")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  if (c.format != "table" && c.format != "json" && c.format != "csv") {
    err << "error: --format must be table, json or csv\n";
    return kUsageError;
  }
  try {
    if (bound->parsed()) return run_bound(c, out);
    if (sel->parsed()) return run_select(c, out);
    if (ver->parsed()) return run_verify(c, out);
    return run_bench(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::ParseError) err << "Invalid input. Please enter numbers separated by spaces.\n";
  }
  return kUsageError;
}

}  // namespace qbounds::cli
