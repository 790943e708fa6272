#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chebdyn/chebyshev.hpp"
#include "chebdyn/heights.hpp"
#include "cli.hpp"

using namespace chebdyn;
using namespace chebdyn::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("poly example") {
  auto r = invoke({"poly", "--family", "P", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("z^3 - 3*z") != std::string::npos);
  CHECK(invoke({"poly", "--kind", "real", "--N", "7"}).out.find("z^3 + z^2 - 2*z - 1") != std::string::npos);
  CHECK(invoke({"poly", "--kind", "conjugate", "--family", "Q", "--N", "4"}).out.find("w^2 + 4") !=
        std::string::npos);
}

TEST_CASE("height example") {
  auto r = invoke({"height", "--alpha", "5/2", "--method", "closed"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.69314718056") != std::string::npos);
  CHECK(r.out.find("closed") != std::string::npos);
  auto g = invoke({"height", "--alpha", "5/2", "--method", "global"});
  CHECK(g.out.find("1.38629436112") != std::string::npos);
  auto p = invoke({"height", "--alpha", "3/4", "--place", "2"});
  CHECK(p.out.find("nonarch") != std::string::npos);
}

TEST_CASE("scan example") {
  auto r = invoke({"scan", "--alpha", "3", "--s", "inf,11", "--nmax", "100", "--format", "csv"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 101);
  CHECK(ls[0] == "N,a,degree,resultant,verdict,offending_primes,cofactor,complete");
  CHECK(ls[5] == "5,1,2,11,true,,1,true");
}

TEST_CASE("serialize examples") {
  ConvergenceRow row;
  row.N = 5;
  row.degree = 2;
  row.average = 0.5 * std::log(11.0);
  row.target = 0.962423650119206895;
  row.error = row.average - row.target;
  const auto csv = convergence_table({row}).to_string(Format::csv);
  CHECK(csv == "N,degree,average,target,error\n5,2,1.1989476364,0.962423650119,0.23652398628\n");

  CHECK(convergence_table({}).to_string(Format::csv) == "N,degree,average,target,error\n");
  CHECK(convergence_table({}).to_string(Format::json) == "[]\n");

  IntegralityCertificate cert;
  cert.point = PreperiodicPoint::make(Family::P, 5, 1);
  cert.alpha = Rational(3);
  cert.resultant_integer = 11;
  cert.verdict = true;
  const auto json = certificate_table({cert}).to_string(Format::json);
  CHECK(json.find("\"verdict\": true") != std::string::npos);
  CHECK(json.find("\"offending_primes\": []") != std::string::npos);
}

TEST_CASE("heterogeneous records are an internal error") {
  Table t({"x", "y"});
  t.add({Cell(std::int64_t{1}), Cell(2.0)});
  CHECK_THROWS_AS(t.add({Cell(std::string("a")), Cell(2.0)}), std::logic_error);
  CHECK_THROWS_AS(t.add({Cell(std::int64_t{1})}), std::logic_error);
  t.add({Cell(Null{}), Cell(3.0)});
  CHECK(t.rows().size() == 2);
}

TEST_CASE("property: JSON round trip reproduces the records") {
  ChebyshevMap p2(Family::P, 2);
  const auto ns = conductor_range(1, 40);
  const Table conv = convergence_table(height_convergence_experiment(Rational(1, 2), Place::archimedean(), ns, p2));
  CHECK(Table::from_json(conv.to_string(Format::json), conv) == conv);

  const auto scan = finiteness_scan(Rational(-5, 3), PlaceSet::parse("inf,7"), 60, p2);
  const Table st = scan_table(scan.records);
  CHECK(Table::from_json(st.to_string(Format::json), st) == st);

  const Table summary = scan_summary_table(Rational(-5, 3), PlaceSet::parse("inf,7"), 60, scan.summary);
  CHECK(Table::from_json(summary.to_string(Format::json), summary) == summary);

  const Table gaps = gap_table(baker_gap_probe(Rational(1, 3), 200).rows);
  CHECK(Table::from_json(gaps.to_string(Format::json), gaps) == gaps);

  const Table pf = product_formula_table(Rational(-360, 77), product_formula_check(Rational(-360, 77)));
  CHECK(Table::from_json(pf.to_string(Format::json), pf) == pf);

  Table odd({"x"});
  odd.add({Cell(2.0)});
  odd.add({Cell(-0.1)});
  odd.add({Cell(1e300)});
  CHECK(Table::from_json(odd.to_string(Format::json), odd) == odd);
}

TEST_CASE("JSON and CSV agree on fields") {
  auto csv = invoke({"converge", "--alpha", "3", "--nmin", "5", "--nmax", "12"});
  auto json = invoke({"converge", "--alpha", "3", "--nmin", "5", "--nmax", "12", "--format", "json"});
  CHECK(csv.code == 0);
  CHECK(json.code == 0);
  CHECK(lines(csv.out).size() == 9);
  CHECK(json.out.find("\"N\": 12") != std::string::npos);
}

TEST_CASE("exit-code contract on malformed invocations") {
  const std::vector<std::pair<std::vector<std::string>, int>> corpus = {
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"poly", "--m", "3", "--bogus"}, 2},
      {{"poly", "--family", "R", "--m", "3"}, 2},
      {{"poly", "--m", "x"}, 2},
      {{"poly"}, 2},
      {{"poly", "--m", "-1"}, 1},
      {{"height"}, 2},
      {{"height", "--alpha", "0.5"}, 2},
      {{"height", "--alpha", "1/0"}, 2},
      {{"height", "--alpha", "1/2", "--method", "magic"}, 2},
      {{"height", "--alpha", "2", "--method", "quadrature"}, 1},
      {{"height", "--alpha", "3", "--place", "4"}, 1},
      {{"average", "--N", "4", "--alpha", "0"}, 1},
      {{"average", "--N", "0", "--alpha", "3"}, 2},
      {{"average", "--N", "5", "--function", "wiggle:1"}, 2},
      {{"converge", "--alpha", "0", "--nmax", "10"}, 1},
      {{"converge", "--alpha", "3", "--nmin", "9", "--nmax", "3"}, 2},
      {{"scan", "--alpha", "0", "--nmax", "10"}, 1},
      {{"scan", "--alpha", "3", "--s", "11", "--nmax", "10"}, 2},
      {{"scan", "--alpha", "3", "--s", "inf,12", "--nmax", "10"}, 1},
      {{"scan", "--alpha", "3"}, 2},
      {{"count", "--N", "5", "--c", "1", "--d", "0"}, 1},
      {{"count", "--N", "5", "--c", "0"}, 2},
      {{"probe", "--alpha", "0", "--nmax", "10"}, 1},
      {{"probe", "--alpha", "5/2", "--nmax", "10"}, 1},
      {{"check", "--r", "0"}, 1},
      {{"check"}, 2},
      {{"--format", "xml", "poly", "--m", "2"}, 2},
  };
  for (const auto& [args, expected] : corpus) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    INFO("args: " << joined);
    const auto r = invoke(args);
    CHECK(r.code == expected);
    if (expected != 0) CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits 0") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"scan", "--help"}).code == 0);
}

TEST_CASE("output file honours the output directory variable") {
  const auto dir = std::filesystem::temp_directory_path() / "chebdyn_cli_test";
  std::filesystem::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  auto r = invoke({"poly", "--m", "2", "--output", "p2.csv"});
  ::unsetenv(kOutputDirEnv);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "p2.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "kind,family,index,degree,polynomial\ncheb,P,2,2,z^2 - 2\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic for a fixed seed") {
  const std::vector<std::string> args{"--seed", "17", "scan", "--alpha", "7/4", "--nmax", "80"};
  CHECK(invoke(args).out == invoke(args).out);
  CHECK(invoke({"check", "--r", "-360/77"}).out == invoke({"check", "--r", "-360/77"}).out);
}

TEST_CASE("test function parsing") {
  CHECK(std::holds_alternative<IndicatorFn>(parse_test_function("indicator:0,2")));
  CHECK(std::get<PolynomialFn>(parse_test_function("poly:1;0;2")).coefficients == std::vector<double>{1, 0, 2});
  CHECK(std::get<LogDistanceFn>(parse_test_function("log:0,1")).alpha == std::complex<double>(0, 1));
  CHECK_THROWS_AS(parse_test_function("indicator:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_test_function("poly:a"), std::invalid_argument);
}
