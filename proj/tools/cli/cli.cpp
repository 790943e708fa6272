#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chebdyn/chebyshev.hpp"
#include "chebdyn/cyclotomic.hpp"
#include "chebdyn/error.hpp"

namespace chebdyn::cli {
namespace {

Cell text(std::string s) { return Cell(std::move(s)); }
Cell integer(std::uint64_t n) { return Cell(static_cast<std::int64_t>(n)); }

std::string place_text(const Place& p) { return p.to_string(); }

std::string alpha_text(const std::variant<Rational, std::complex<double>>& a) {
  if (const auto* r = std::get_if<Rational>(&a)) return r->to_string();
  const auto z = std::get<std::complex<double>>(a);
  std::ostringstream os;
  os << format_double(z.real(), 17);
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << format_double(z.imag(), 17) << "i";
  return os.str();
}

std::string ledger_text(const LedgerEntry& e) {
  std::ostringstream os;
  if (e.block) {
    os << "places|" << e.block->get_str() << "=";
  } else {
    os << e.place.to_string() << "=";
  }
  if (e.log_coefficients.empty()) os << "0";
  for (std::size_t i = 0; i < e.log_coefficients.size(); ++i) {
    const auto& [p, c] = e.log_coefficients[i];
    os << (i ? " " : "") << (c < 0 ? "-" : "+") << std::labs(c) << "*log(" << p.get_str() << ")";
  }
  return os.str();
}

std::vector<double> parse_doubles(const std::string& body, char sep) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw std::invalid_argument("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Everything a subcommand needs after CLI11 has filled the fields.
struct Options {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = FactorBudget{}.seed;

  std::string family = "P";
  int degree = 2;
  int m = 0;
  std::uint64_t N = 0;
  std::int64_t a = 1;
  std::string kind = "cheb";
  std::string alpha;
  std::string place = "inf";
  std::string method = "iterative";
  std::size_t nodes = 1u << 16;
  double tol = 1e-12;
  std::uint64_t nmin = 1;
  std::uint64_t nmax = 0;
  std::string S = "inf";
  bool summary = false;
  double c = 0.0;
  double d = 0.0;
  bool fit = false;
  std::string r;
  bool group = false;
  std::string test_fn;
};

Rational rational_arg(const std::string& s, const char* name) {
  try {
    return Rational::parse(s);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("--") + name + ": " + e.what());
  }
}

Table cmd_poly(const Options& o) {
  const Family fam = parse_family(o.family);
  Table t({"kind", "family", "index", "degree", "polynomial"});
  IntPolynomial p;
  std::uint64_t index = 0;
  if (o.kind == "cheb") {
    if (o.m == 0) throw std::invalid_argument("poly --kind cheb needs --m");
    p = cheb_poly(fam, o.m);
    index = static_cast<std::uint64_t>(std::max(o.m, 0));
  } else {
    if (o.N == 0) throw std::invalid_argument("poly --kind " + o.kind + " needs --N");
    index = o.N;
    if (o.kind == "cyclotomic") p = cyclotomic_poly(o.N);
    else if (o.kind == "real") p = real_cyclotomic_poly(o.N);
    else if (o.kind == "conjugate") p = conjugate_poly(fam, o.N);
    else throw std::invalid_argument("unknown --kind '" + o.kind + "'");
  }
  const char var = o.kind == "cyclotomic" ? 'x' : (o.kind == "conjugate" && fam == Family::Q ? 'w' : 'z');
  t.add({text(o.kind), text(std::string(to_string(fam))), integer(index), Cell(std::int64_t{p.degree()}),
         text(p.to_string(var))});
  return t;
}

Table cmd_height(const Options& o) {
  const Rational alpha = rational_arg(o.alpha, "alpha");
  const Place v = Place::parse(o.place);
  const ChebyshevMap map(parse_family(o.family), o.degree);
  const std::complex<double> z(alpha.to_double(), 0.0);
  HeightReport rep;
  if (o.method == "nonarch" || (o.method != "global" && !v.is_archimedean())) {
    if (v.is_archimedean()) throw std::invalid_argument("--method nonarch needs a prime --place");
    rep.method = HeightMethod::nonarch;
    rep.value = local_height_nonarch(alpha, v.prime());
  } else if (o.method == "iterative") {
    rep = local_height_arch_iterative(z, map, o.tol);
  } else if (o.method == "quadrature") {
    rep = local_height_arch_quadrature(z, o.nodes);
  } else if (o.method == "closed") {
    if (map.family() == Family::Q && map.degree() % 2 == 0) {
      throw DomainError("the closed form covers Q_m for odd m only");
    }
    rep.method = HeightMethod::closed;
    rep.value = local_height_arch_closed(z, map.family());
  } else if (o.method == "global") {
    rep.method = HeightMethod::iterative;
    rep.value = global_height(alpha, map);
    Table t({"alpha", "place", "method", "value", "diagnostic"});
    t.add({text(alpha.to_string()), text("all"), text("global"), Cell(rep.value), text("sum over places")});
    return t;
  } else {
    throw std::invalid_argument("unknown --method '" + o.method + "'");
  }
  rep.alpha = alpha;
  rep.place = v;
  return height_table({rep});
}

Table cmd_average(const Options& o) {
  if (o.N == 0) throw std::invalid_argument("average needs --N >= 1");
  if (!o.test_fn.empty()) {
    if (!o.alpha.empty()) throw std::invalid_argument("average takes either --alpha or --function");
    const TestFunction f = parse_test_function(o.test_fn);
    const auto s = equidistribution_average(o.N, f, o.nodes);
    Table t({"N", "degree", "function", "average", "integral", "error"});
    t.add({integer(s.N), integer(s.degree), text(describe(f)), Cell(s.average), Cell(s.integral),
           Cell(s.average - s.integral)});
    return t;
  }
  if (o.alpha.empty()) throw std::invalid_argument("average needs --alpha or --function");
  const Rational alpha = rational_arg(o.alpha, "alpha");
  const Place v = Place::parse(o.place);
  const Family fam = parse_family(o.family);
  const auto point = PreperiodicPoint::make(fam, o.N, o.a);
  const double avg = galois_average_log_distance(point, alpha, v);
  Table t({"family", "N", "a", "degree", "alpha", "place", "average"});
  t.add({text(std::string(to_string(fam))), integer(point.N), integer(point.a),
         Cell(std::int64_t{norm_polynomial(fam, o.N).degree()}), text(alpha.to_string()), text(v.to_string()),
         Cell(avg)});
  return t;
}

Table cmd_converge(const Options& o, std::ostream& err) {
  const Rational alpha = rational_arg(o.alpha, "alpha");
  const Place v = Place::parse(o.place);
  const ChebyshevMap map(parse_family(o.family), o.degree);
  if (o.nmax < o.nmin) throw std::invalid_argument("--nmax must be >= --nmin");
  const auto ns = conductor_range(o.nmin, o.nmax);
  const auto rows = height_convergence_experiment(alpha, v, ns, map);
  for (const auto& r : rows) {
    if (r.failure) err << "N = " << r.N << " skipped: " << *r.failure << "\n";
  }
  return convergence_table(rows);
}

Table cmd_scan(const Options& o) {
  const Rational alpha = rational_arg(o.alpha, "alpha");
  const PlaceSet S = PlaceSet::parse(o.S);
  const ChebyshevMap map(parse_family(o.family), o.degree);
  if (o.nmax == 0) throw std::invalid_argument("scan needs --nmax >= 1");
  FactorBudget budget = default_scan_budget();
  budget.seed = o.seed;
  const auto res = finiteness_scan(alpha, S, o.nmax, map, budget);
  if (o.summary) return scan_summary_table(alpha, S, o.nmax, res.summary);
  return scan_table(res.records);
}

Table cmd_count(const Options& o) {
  const Interval I(o.c, o.d);
  std::uint64_t lo = o.N, hi = o.N;
  if (o.N == 0) {
    if (o.nmax == 0) throw std::invalid_argument("count needs --N or --nmax");
    lo = o.nmin;
    hi = o.nmax;
  }
  if (lo == 0 || hi < lo) throw std::invalid_argument("empty conductor range");
  Table t({"N", "degree", "count", "prediction", "discrepancy"});
  for (std::uint64_t N = lo; N <= hi; ++N) {
    const std::size_t deg = galois_orbit(Family::P, N).degree;
    const std::size_t count = count_in_interval(N, I);
    const double pred = arccos_prediction(I, static_cast<double>(deg));
    t.add({integer(N), integer(deg), integer(count), Cell(pred), Cell(static_cast<double>(count) - pred)});
  }
  return t;
}

Table cmd_probe(const Options& o) {
  const Rational alpha = rational_arg(o.alpha, "alpha");
  if (o.nmax < 2) throw std::invalid_argument("probe needs --nmax >= 2");
  const BakerProbe probe = baker_gap_probe(alpha, o.nmax);
  if (!o.fit) return gap_table(probe.rows);
  Table t({"alpha", "theta0", "n_max", "records", "exponent", "exponent_stderr", "all_positive"});
  t.add({text(alpha.to_string()), Cell(probe.theta0), integer(o.nmax), integer(probe.record_count),
         Cell(probe.exponent), Cell(probe.exponent_stderr), Cell(probe.all_positive)});
  return t;
}

Table cmd_check(const Options& o) {
  FactorBudget budget;
  budget.seed = o.seed;
  if (o.N != 0) {
    const Rational alpha = rational_arg(o.alpha, "alpha");
    const auto point = PreperiodicPoint::make(parse_family(o.family), o.N, o.a);
    return certificate_table({is_s_integral(point, alpha, PlaceSet::parse(o.S), budget)});
  }
  if (o.r.empty()) throw std::invalid_argument("check needs --r (product formula) or --N with --alpha");
  const Rational r = rational_arg(o.r, "r");
  const auto policy = o.group ? CofactorPolicy::group : CofactorPolicy::indeterminate;
  return product_formula_table(r, product_formula_check(r, budget, policy));
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

}  // namespace

Table convergence_table(const std::vector<ConvergenceRow>& rows) {
  Table t({"N", "degree", "average", "target", "error"});
  for (const auto& r : rows) {
    if (r.failure) continue;
    t.add({integer(r.N), integer(r.degree), Cell(r.average), Cell(r.target), Cell(r.error)});
  }
  return t;
}

Table scan_table(const std::vector<ScanRecord>& records) {
  Table t({"N", "a", "degree", "resultant", "verdict", "offending_primes", "cofactor", "complete"});
  for (const auto& r : records) {
    t.add({integer(r.N), integer(r.a), integer(r.degree), big(r.resultant), Cell(r.verdict),
           list(r.offending_primes), big(r.cofactor), Cell(r.complete)});
  }
  return t;
}

Table scan_summary_table(const Rational& alpha, const PlaceSet& S, std::uint64_t n_max, const ScanSummary& s) {
  std::vector<BigInt> members;
  for (auto n : s.members) members.emplace_back(static_cast<unsigned long>(n));
  std::string places = "inf";
  for (const auto& p : S.finite_primes()) places += "," + p.get_str();
  Table t({"alpha", "S", "n_max", "members", "member_count", "last_new", "added_primes"});
  t.add({text(alpha.to_string()), text(places), integer(n_max), list(members), integer(s.members.size()),
         s.last_new ? integer(*s.last_new) : Cell(Null{}), list(s.added_primes)});
  return t;
}

Table certificate_table(const std::vector<IntegralityCertificate>& certs) {
  Table t({"family", "N", "a", "alpha", "resultant", "verdict", "offending_primes", "unfactored_cofactor",
           "added_primes"});
  for (const auto& c : certs) {
    t.add({text(std::string(to_string(c.point.family))), integer(c.point.N), integer(c.point.a),
           text(c.alpha.to_string()), big(c.resultant_integer), Cell(c.verdict), list(c.offending_primes),
           big(c.unfactored_cofactor), list(c.added_primes)});
  }
  return t;
}

Table height_table(const std::vector<HeightReport>& reports) {
  Table t({"alpha", "place", "method", "value", "diagnostic"});
  for (const auto& r : reports) {
    t.add({text(alpha_text(r.alpha)), text(place_text(r.place)), text(std::string(to_string(r.method))),
           Cell(r.value), text(r.diagnostic())});
  }
  return t;
}

Table gap_table(const std::vector<GapRecord>& rows) {
  Table t({"N", "a", "gap", "record"});
  for (const auto& r : rows) t.add({integer(r.N), integer(r.a), Cell(r.gap), Cell(r.record)});
  return t;
}

Table product_formula_table(const Rational& r, const ProductFormulaReport& report) {
  std::vector<std::string> ledger;
  for (const auto& e : report.ledger) ledger.push_back(ledger_text(e));
  Table t({"r", "verdict", "ledger", "float_residual", "explanation"});
  t.add({text(r.to_string()), text(std::string(to_string(report.verdict))), Cell(ledger),
         Cell(report.float_residual), text(report.explanation)});
  return t;
}

TestFunction parse_test_function(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("test function needs 'kind:params', got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "indicator") {
    const auto v = parse_doubles(body, ',');
    if (v.size() != 2) throw std::invalid_argument("indicator needs 'c,d'");
    return IndicatorFn{Interval(v[0], v[1])};
  }
  if (kind == "poly") {
    auto v = parse_doubles(body, ';');
    if (v.empty() || v.size() > 9) throw std::invalid_argument("poly needs 1 to 9 coefficients");
    return PolynomialFn{std::move(v)};
  }
  if (kind == "log") {
    const auto v = parse_doubles(body, ',');
    if (v.empty() || v.size() > 2) throw std::invalid_argument("log needs 're' or 're,im'");
    return LogDistanceFn{{v[0], v.size() == 2 ? v[1] : 0.0}};
  }
  throw std::invalid_argument("unknown test function kind '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev dynamics: canonical heights, S-integrality scans, equidistribution", "chebdyn"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", o.output, "output file (relative paths resolve under $CHEBDYN_OUTPUT_DIR)");
  app.add_option("--seed", o.seed, "seed for randomized factoring");

  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  };
  auto map_opts = [&](CLI::App* sub) {
    family(sub);
    sub->add_option("--degree", o.degree, "degree m of the map");
  };

  auto* poly = app.add_subcommand("poly", "Chebyshev, cyclotomic, real cyclotomic or conjugate polynomials");
  family(poly);
  poly->add_option("--m", o.m, "Chebyshev index");
  poly->add_option("--N", o.N, "conductor");
  poly->add_option("--kind", o.kind, "cheb, cyclotomic, real or conjugate")
      ->check(CLI::IsMember({"cheb", "cyclotomic", "real", "conjugate"}));

  auto* height = app.add_subcommand("height", "local or global canonical height");
  map_opts(height);
  height->add_option("--alpha", o.alpha, "rational p/q")->required();
  height->add_option("--method", o.method, "iterative, quadrature, closed, nonarch or global");
  height->add_option("--place", o.place, "inf or a prime");
  height->add_option("--nodes", o.nodes, "quadrature nodes");
  height->add_option("--tol", o.tol, "iteration tolerance");

  auto* average = app.add_subcommand("average", "Galois average of log|x - alpha|_v or of a test function");
  family(average);
  average->add_option("--N", o.N, "conductor")->required();
  average->add_option("--a", o.a, "representative");
  average->add_option("--alpha", o.alpha, "rational p/q");
  average->add_option("--place", o.place, "inf or a prime");
  average->add_option("--function", o.test_fn, "indicator:c,d | poly:c0;c1;... | log:re[,im]");
  average->add_option("--nodes", o.nodes, "quadrature nodes for the reference integral");

  auto* converge = app.add_subcommand("converge", "Galois averages against the local height over a range of N");
  map_opts(converge);
  converge->add_option("--alpha", o.alpha, "rational p/q")->required();
  converge->add_option("--place", o.place, "inf or a prime");
  converge->add_option("--nmin", o.nmin, "first conductor");
  converge->add_option("--nmax", o.nmax, "last conductor")->required();

  auto* scan = app.add_subcommand("scan", "S-integrality of the orbits N = 1..nmax");
  map_opts(scan);
  scan->add_option("--alpha", o.alpha, "rational p/q")->required();
  scan->add_option("--s,--S", o.S, "places, e.g. inf,11");
  scan->add_option("--nmax", o.nmax, "last conductor")->required();
  scan->add_flag("--summary", o.summary, "print the stabilization summary instead of rows");

  auto* count = app.add_subcommand("count", "conjugates of 2cos(2 pi/N) in (c, d]");
  count->add_option("--N", o.N, "single conductor");
  count->add_option("--nmin", o.nmin, "first conductor");
  count->add_option("--nmax", o.nmax, "last conductor");
  count->add_option("--c", o.c, "left end (open)")->required();
  count->add_option("--d", o.d, "right end (closed)")->required();

  auto* probe = app.add_subcommand("probe", "gaps |a/N - arccos(alpha/2)/(2 pi)|");
  probe->add_option("--alpha", o.alpha, "rational p/q in (-2, 2)")->required();
  probe->add_option("--nmax", o.nmax, "last conductor")->required();
  probe->add_flag("--fit", o.fit, "print the fitted exponent instead of rows");

  auto* check = app.add_subcommand("check", "product formula ledger, or an integrality certificate");
  family(check);
  check->add_option("--r", o.r, "nonzero rational for the product formula");
  check->add_flag("--group-cofactors", o.group, "keep unfactored composites as grouped atoms");
  check->add_option("--N", o.N, "conductor for an integrality certificate");
  check->add_option("--a", o.a, "representative");
  check->add_option("--alpha", o.alpha, "rational p/q");
  check->add_option("--s,--S", o.S, "places, e.g. inf,11");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const Format format = parse_format(o.format);
    std::optional<Table> table;
    if (poly->parsed()) table = cmd_poly(o);
    else if (height->parsed()) table = cmd_height(o);
    else if (average->parsed()) table = cmd_average(o);
    else if (converge->parsed()) table = cmd_converge(o, err);
    else if (scan->parsed()) table = cmd_scan(o);
    else if (count->parsed()) table = cmd_count(o);
    else if (probe->parsed()) table = cmd_probe(o);
    else if (check->parsed()) table = cmd_check(o);

    if (o.output.empty()) {
      table->write(out, format);
    } else {
      const auto path = resolve_output(o.output);
      std::ofstream file(path);
      if (!file) {
        err << "error: cannot open " << path.string() << " for writing\n";
        return kDomainError;
      }
      table->write(file, format);
    }
    return kOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace chebdyn::cli
