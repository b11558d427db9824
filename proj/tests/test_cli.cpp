#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qbounds/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qbounds::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("qbounds_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("bound: table output for the first worked example") {
  const auto r = cli({"bound", "--mags", "8 1 0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "--- Actual Computations ---"));
  CHECK(contains(r.out, "cauchy_upper:    9.0000"));
  CHECK(contains(r.out, "fujiwara:        3.1748"));
  CHECK(contains(r.out, "opfer_max:       8.0000  (not a rigorous bound)"));
  CHECK(contains(r.out, " SHARPEST BOUND: theorem_4_1 (3.0000)"));
  CHECK(contains(r.out, " ANNULUS: "));
}

TEST_CASE("bound: JSON and CSV formats") {
  const auto j = cli({"bound", "--mags", "1 0 100", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = qbounds::io::parse_json(j.out);
  CHECK(doc["sharpest"]["lower"] == "theorem_4_2");
  bool saw = false;
  for (const auto& b : doc["bounds"]) {
    if (b["name"] == "cauchy_lower") {
      CHECK(b["value"].get<double>() == doctest::Approx(1.0 / 101).epsilon(1e-12));
      saw = true;
    }
  }
  CHECK(saw);

  const auto c = cli({"bound", "--mags", "8 1 0", "--format", "csv", "--opfer", "sum"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("name,kind,value,rigorous\n", 0) == 0);
  CHECK(contains(c.out, "opfer_sum,upper,9,1"));
  CHECK_FALSE(contains(c.out, "opfer_max"));
}

TEST_CASE("bound: v-list, weights and the as-printed variant") {
  const auto printed = cli({"bound", "--vlist", "0 0 64 0", "--weights", "256 64 16 4 1", "--as-printed", "--format",
                            "csv"});
  CHECK(printed.code == 0);
  CHECK(contains(printed.out, "theorem_4_3,upper,12,1"));
  const auto proof = cli({"bound", "--vlist", "0 0 64 0", "--weights", "256 64 16 4 1", "--format", "csv"});
  CHECK(contains(proof.out, "theorem_4_3,upper,8,1"));
}

TEST_CASE("bound: polynomial file input") {
  const auto path = temp_file("cubic.json", R"({"side":"left","coeffs":[[0,0,0,8],[0,0,1,0],[0,0,0,0],[1,0,0,0]]})");
  const auto r = cli({"bound", "--poly", path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, " SHARPEST BOUND: theorem_4_1 (3.0000)"));
  CHECK(contains(r.out, "center="));
}

TEST_CASE("select: heuristic table and JSON") {
  const auto r = cli({"select", "--mags", "8 1 0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Profile: 'Heavy Tail'"));
  CHECK(contains(r.out, " U = 3.0000 (theorem_4_1)"));

  const auto j = cli({"select", "--mags", "0 0 64 0", "--format", "json"});
  const auto doc = qbounds::io::parse_json(j.out);
  CHECK(doc["profile"]["tag"] == "middle_bulge");

  const auto tau = cli({"select", "--mags", "1 0.5", "--tau", "0.9", "--format", "json"});
  CHECK(qbounds::io::parse_json(tau.out)["profile"]["tag"] == "heavy_tail");

  const auto all = cli({"select", "--mags", "8 1 0", "--all", "--format", "csv"});
  CHECK(contains(all.out, "cauchy_upper,upper,9"));
}

TEST_CASE("verify: exit status follows the oracle") {
  const auto path = temp_file("circle.json", R"({"side":"left","coeffs":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]})");
  const auto ok = cli({"verify", "--poly", path, "--opfer", "sum"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "all bounds verified"));

  const auto bad = cli({"verify", "--poly", path, "--opfer", "sum", "--extra-upper", "0.1"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "FAIL user_upper"));
  CHECK(contains(bad.out, "margin -0.9"));

  const auto report = temp_file("report.json", R"({"bounds":[{"name":"mine","value":0.5}]})");
  const auto r = cli({"verify", "--poly", path, "--report", report, "--format", "json"});
  CHECK(r.code == 1);
  CHECK(qbounds::io::parse_json(r.out)["passed"] == false);

  CHECK(cli({"verify", "--mags", "1 0"}).code == 2);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  const auto empty = cli({"bound", "--mags", ""});
  CHECK(empty.code == 2);
  CHECK(contains(empty.err, "Invalid input"));
  CHECK(cli({"bound", "--mags", "1 x"}).code == 2);
  CHECK(cli({"bound", "--mags", "1 -1"}).code == 2);
  CHECK(cli({"bound", "--mags", "1 2", "--format", "xml"}).code == 2);
  CHECK(cli({"bound", "--mags", "1 2", "--opfer", "median"}).code == 2);
  CHECK(cli({"bound", "--mags", "1 2", "--w-bracket", "5,1"}).code == 2);
  CHECK(cli({"bound", "--mags", "1 2", "--poly", "x.json"}).code == 2);
  CHECK(cli({"bound", "--poly", "/nonexistent.json"}).code == 2);
  CHECK(cli({"select", "--mags", "5"}).code == 2);
  CHECK(cli({"bench", "--degrees", "4..2"}).code == 2);
  CHECK(cli({"bench", "--side", "up"}).code == 2);
  const auto bad_json = temp_file("bad.json", "{\"side\": ");
  CHECK(cli({"bound", "--poly", bad_json}).code == 2);
  CHECK(cli({"bound", "--help"}).code == 0);
}

TEST_CASE("bench: fixed column layout and determinism") {
  const std::vector<std::string> args = {"bench", "--seed", "7", "--count", "12", "--degrees", "2..4", "--side", "right"};
  const auto a = cli(args);
  const auto b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "index,seed,side,degree,cauchy_upper,opfer_sum,opfer_max,fujiwara,theorem_4_1,theorem_4_3,cauchy_lower,"
        "theorem_4_2,oracle_min,oracle_max,winner,failures");
  int rows = 0;
  std::string row;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(std::count(row.begin(), row.end(), ',') == 15);
  }
  CHECK(rows == 12);
  CHECK(contains(a.out, "\n0,7,right,2,"));
  CHECK(contains(a.out, "\n1,8,right,3,"));
  CHECK(contains(a.out, "\n3,10,right,2,"));
  CHECK(cli({"bench", "--seed", "8", "--count", "12", "--degrees", "2..4", "--side", "right"}).out != a.out);
}
