// Acceptance run: one PASS/FAIL line per criterion, each with its own
// tolerance and wall-clock limit. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../support/root_check.hpp"
#include "chebdyn/arith.hpp"
#include "chebdyn/chebyshev.hpp"
#include "chebdyn/cyclotomic.hpp"
#include "chebdyn/equidistribution.hpp"
#include "chebdyn/heights.hpp"
#include "chebdyn/integrality.hpp"

using namespace chebdyn;
using cplx = std::complex<double>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<cplx> off_segment_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<cplx> out;
  while (out.size() < count) {
    const cplx z(coord(rng), out.size() % 3 == 0 ? 0.0 : coord(rng));
    if (std::abs(z) > 10.0) continue;
    const double dx = std::max(0.0, std::fabs(z.real()) - 2.0);
    if (std::hypot(dx, z.imag()) < 0.1) continue;
    out.push_back(z);
  }
  return out;
}

Outcome composition_law() {
  int pairs = 0;
  for (int l = 2; l <= 12; ++l) {
    for (int m = 2; m <= 12; ++m) {
      if (!(cheb_poly(Family::P, l).compose(cheb_poly(Family::P, m)) == cheb_poly(Family::P, l * m))) {
        return {false, "P_" + std::to_string(l) + " o P_" + std::to_string(m) + " differs"};
      }
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " pairs exact"};
}

Outcome real_cyclotomic() {
  for (std::uint64_t N = 1; N <= 200; ++N) {
    const auto psi = real_cyclotomic_poly(N);
    const auto orbit = galois_orbit(Family::P, N);
    if (!psi.is_monic()) return {false, "Psi_" + std::to_string(N) + " not monic"};
    if (N >= 3 && psi.degree() != static_cast<int>(euler_phi(N) / 2)) {
      return {false, "deg Psi_" + std::to_string(N) + " != phi(N)/2"};
    }
    // Certified sign change within 1e-10 of each float conjugate, and as
    // many distinct conjugates as the degree.
    std::set<long long> keys;
    for (const auto& v : orbit.values()) {
      if (!testing::brackets_root(psi, v.real())) {
        return {false, "no root of Psi_" + std::to_string(N) + " near " + fmt("%.15g", v.real())};
      }
      keys.insert(std::llround(v.real() * 1e9));
    }
    if (keys.size() != static_cast<std::size_t>(psi.degree())) {
      return {false, "root count mismatch at N = " + std::to_string(N)};
    }
  }
  for (std::uint64_t N = 3; N <= 300; ++N) {
    const auto psi = real_cyclotomic_poly(N);
    if (!(conjugate_poly(Family::P, N) == psi * psi)) {
      return {false, "conjugate_poly(P, " + std::to_string(N) + ") != Psi^2"};
    }
  }
  return {true, "N <= 200 roots certified within 1e-10; resultant = Psi^2 for 3 <= N <= 300"};
}

Outcome three_way_agreement() {
  ChebyshevMap p2(Family::P, 2);
  double worst = 0.0;
  for (const auto& z : off_segment_samples(100, 20240611)) {
    const double it = local_height_arch_iterative(z, p2, 1e-14).value;
    const double qd = local_height_arch_quadrature(z, 1u << 16).value;
    const double cf = local_height_arch_closed(z);
    worst = std::max({worst, std::fabs(it - qd), std::fabs(it - cf), std::fabs(qd - cf)});
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> inside(-2.0, 2.0);
  int nonzero = 0;
  for (int i = 0; i < 1000; ++i) {
    double x = inside(rng);
    if (x == -2.0) x = 0.0;
    if (local_height_arch_iterative({x, 0.0}, p2).value != 0.0) ++nonzero;
  }
  const bool ok = worst <= 1e-6 && nonzero == 0;
  return {ok, "max pairwise gap " + fmt("%.3g", worst) + " (tol 1e-6); " + std::to_string(nonzero) +
                  "/1000 nonzero inside the segment"};
}

Outcome functional_equation() {
  double worst = 0.0;
  for (int m : {2, 3}) {
    ChebyshevMap map(Family::P, m);
    for (const auto& z : off_segment_samples(100, 20240611)) {
      const double lhs = local_height_arch_iterative(map(z), map, 1e-14).value;
      const double rhs = m * local_height_arch_iterative(z, map, 1e-14).value;
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
  }
  return {worst <= 1e-8, "max |h(phi(a)) - m h(a)| = " + fmt("%.3g", worst) + " (tol 1e-8, m = 2, 3)"};
}

Outcome exterior_convergence() {
  ChebyshevMap p2(Family::P, 2);
  const auto ns = conductor_range(50, 1000);
  const auto rows = height_convergence_experiment(Rational(3), Place::archimedean(), ns, p2);
  const auto early = band_median_abs_error(rows, 50, 100);
  const auto late = band_median_abs_error(rows, 500, 1000);
  if (!early || !late) return {false, "empty band"};
  const bool ok = *late < *early && *late < 0.02;
  return {ok, "band medians " + fmt("%.6g", *early) + " -> " + fmt("%.6g", *late) + " (final < 0.02)"};
}

Outcome segment_convergence() {
  ChebyshevMap p2(Family::P, 2);
  std::vector<std::uint64_t> ns = conductor_range(50, 100);
  for (auto n : conductor_range(300, 600)) ns.push_back(n);
  for (auto n : conductor_range(1000, 2000)) ns.push_back(n);
  const auto rows = height_convergence_experiment(Rational(1, 2), Place::archimedean(), ns, p2);
  const auto a = band_median_abs_error(rows, 50, 100);
  const auto b = band_median_abs_error(rows, 300, 600);
  const auto c = band_median_abs_error(rows, 1000, 2000);
  if (!a || !b || !c) return {false, "empty band"};
  const bool ok = *a > *b && *b > *c;
  return {ok, "band medians " + fmt("%.6g", *a) + " > " + fmt("%.6g", *b) + " > " + fmt("%.6g", *c)};
}

Outcome product_formula() {
  std::size_t checked = 0, grouped = 0, collisions = 0;
  for (const Rational& alpha : {Rational(3), Rational(1, 2), Rational(-5, 3)}) {
    for (std::uint64_t N = 1; N <= 300; ++N) {
      const Rational value = real_cyclotomic_poly(N)(alpha);
      if (value.is_zero()) {
        ++collisions;
        continue;
      }
      const auto rep = product_formula_check(value, {}, CofactorPolicy::group);
      if (rep.verdict != ProductFormulaVerdict::holds) {
        return {false, "alpha = " + alpha.to_string() + ", N = " + std::to_string(N) + ": " + rep.explanation};
      }
      if (!rep.grouped.empty()) ++grouped;
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " ledgers cancel exactly (" + std::to_string(grouped) +
                    " with unfactored composites kept as grouped atoms; " + std::to_string(collisions) +
                    " collisions)"};
}

Outcome counting_envelope() {
  const Interval corpus[] = {
      Interval(-2.0, 2.0),    Interval(0.0, 2.0),     Interval(-2.0, 0.0),   Interval(-1.0, 1.0),
      Interval(1.0, 2.0),     Interval(-2.0, -1.0),   Interval(0.3, 0.7),    Interval(-0.9, 1.3),
      Interval(1.9, 2.0),     Interval(-2.0, -1.95),  Interval(-0.05, 0.05), Interval(0.5, 1.5),
      Interval(-1.5, -0.5),   Interval(1.234, 1.987), Interval(-1.75, 0.125), Interval(0.999, 1.001),
      Interval(-0.333, 0.25), Interval(1.5, 1.75),    Interval(-2.0, 1.0),   Interval(0.1, 1.9)};
  double worst_ratio = 0.0;
  for (std::uint64_t N = 1; N <= 5000; ++N) {
    const double deg = static_cast<double>(galois_orbit(Family::P, N).degree);
    for (const auto& I : corpus) {
      const double diff = std::fabs(static_cast<double>(count_in_interval(N, I)) - arccos_prediction(I, deg));
      const double bound = std::pow(deg, 0.9);
      worst_ratio = std::max(worst_ratio, diff / bound);
      if (diff > bound) {
        return {false, "N = " + std::to_string(N) + " exceeds deg^0.9 on (" + fmt("%g", I.c()) + ", " +
                           fmt("%g", I.d()) + "]"};
      }
    }
  }
  const double cuts[] = {-2.0, -1.5, -0.9, -0.05, 0.0, 0.3, 1.0, 1.234, 1.9, 2.0};
  for (std::uint64_t N = 3; N <= 5000; ++N) {
    std::size_t total = 0;
    for (std::size_t i = 0; i + 1 < std::size(cuts); ++i) total += count_in_interval(N, Interval(cuts[i], cuts[i + 1]));
    if (total != galois_orbit(Family::P, N).degree) {
      return {false, "partition counts miss the degree at N = " + std::to_string(N)};
    }
  }
  return {true, "20 intervals, N <= 5000, max |err|/deg^0.9 = " + fmt("%.3f", worst_ratio) +
                    "; 9-piece partition sums to deg for 3 <= N <= 5000"};
}

Outcome finiteness_scans() {
  ChebyshevMap p2(Family::P, 2);
  struct Case {
    Rational alpha;
    const char* S;
  };
  const Case cases[] = {{Rational(3), "inf"}, {Rational(3), "inf,11"}, {Rational(1, 2), "inf"}};
  std::vector<std::vector<std::uint64_t>> members;
  std::ostringstream detail;
  bool ok = true;
  for (const auto& c : cases) {
    const auto res = finiteness_scan(c.alpha, PlaceSet::parse(c.S), 2000, p2);
    const std::uint64_t n0 = res.summary.last_new.value_or(0);
    const auto& cum = res.summary.cumulative;
    const bool flat = std::all_of(cum.begin() + static_cast<std::ptrdiff_t>(n0), cum.end(),
                                  [&](std::size_t v) { return v == cum.back(); });
    ok = ok && flat && n0 <= 1000;
    detail << "alpha=" << c.alpha.to_string() << " S={" << c.S << "}: " << res.summary.members.size()
           << " orbits, N0=" << n0 << "; ";
    members.push_back(res.summary.members);
  }
  // Nested pairs: S = {inf} inside {inf, 11} for alpha = 3, and {inf} inside {inf, 2} for alpha = 1/2.
  const auto half2 = finiteness_scan(Rational(1, 2), PlaceSet::parse("inf,2"), 2000, p2).summary.members;
  const bool mono = std::includes(members[1].begin(), members[1].end(), members[0].begin(), members[0].end()) &&
                    std::includes(half2.begin(), half2.end(), members[2].begin(), members[2].end());
  detail << (mono ? "S-monotone" : "S-monotonicity violated");
  return {ok && mono, detail.str()};
}

Outcome baker_probe() {
  const auto probe = baker_gap_probe(Rational(1, 2), 10000);
  const bool ok = probe.all_positive && std::isfinite(probe.exponent) && probe.exponent > 0.0;
  return {ok, std::string(probe.all_positive ? "all" : "NOT all") + " 9999 gaps certified positive; exponent " +
                  fmt("%.3f", probe.exponent) + " +- " + fmt("%.3f", probe.exponent_stderr) + " over " +
                  std::to_string(probe.record_count) + " records"};
}

Outcome q_family() {
  const bool q4 = cheb_poly(Family::Q, 4) == IntPolynomial{2, 0, 4, 0, 1};
  const bool conj = conjugate_poly(Family::Q, 4) == IntPolynomial{4, 0, 1};
  const double dist = std::abs(PreperiodicPoint::make(Family::Q, 4, 1).value() - cplx(0.0, 2.0));
  const bool ok = q4 && conj && dist <= 1e-12;
  return {ok, std::string("Q_4 ") + (q4 ? "exact" : "WRONG") + ", conjugate_poly(Q,4) " + (conj ? "= w^2+4" : "WRONG") +
                  ", |value - 2i| = " + fmt("%.1e", dist)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "composition law", 5, composition_law},
      {2, "real cyclotomic polynomials", 60, real_cyclotomic},
      {3, "archimedean three-way agreement", 120, three_way_agreement},
      {4, "functional equation", 120, functional_equation},
      {5, "convergence off the segment (alpha = 3)", 120, exterior_convergence},
      {6, "convergence on the segment (alpha = 1/2)", 300, segment_convergence},
      {7, "exact product formula", 60, product_formula},
      {8, "counting envelope and partition", 180, counting_envelope},
      {9, "finiteness scans", 600, finiteness_scans},
      {10, "gap probe sanity", 60, baker_probe},
      {11, "Q-family spot checks", 5, q_family},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.limit_s, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures;
}
