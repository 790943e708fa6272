#include "chebdyn/equidistribution.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "chebdyn/angle.hpp"
#include "chebdyn/cyclotomic.hpp"
#include "chebdyn/error.hpp"
#include "chebdyn/heights.hpp"

namespace chebdyn {
namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// #{0 <= a <= x : gcd(a, N) = 1} by inclusion-exclusion over squarefree d | N.
std::int64_t coprime_count_upto(std::int64_t x, const std::vector<std::uint64_t>& primes) {
  if (x < 0) return 0;
  std::int64_t total = 0;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::int64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= static_cast<std::int64_t>(primes[i]);
        ++bits;
      }
    }
    // a = 0 is divisible by every d.
    const std::int64_t multiples = x / d + 1;
    total += (bits % 2 == 0) ? multiples : -multiples;
  }
  return total;
}

BigInt certified_ceil(std::uint64_t N, const Rational& x) {
  auto k = ceil_scaled_turn(N, x);
  if (!k) {
    const double approx = static_cast<double>(N) * turn_value(x);
    std::ostringstream os;
    os << "endpoint collides with the conjugate at a = " << std::llround(approx) << " (N = " << N
       << "); perturb the endpoint";
    throw DomainError(os.str());
  }
  return *k;
}

}  // namespace

Interval::Interval(double c, double d) : c_(c), d_(d) {
  if (!(c >= -2.0 && c < d && d <= 2.0)) {
    std::ostringstream os;
    os << "invalid interval (" << c << ", " << d << "]: need -2 <= c < d <= 2";
    throw DomainError(os.str());
  }
}

std::size_t count_in_interval(std::uint64_t N, const Interval& interval) {
  if (N < 1) throw DomainError("conductor N must be >= 1");
  // 2cos(2 pi a/N) in (c, d]  <=>  a/N in [t(d/2), t(c/2)),  t(x) = arccos(x)/(2 pi),
  // over the representatives 0 <= a <= N/2 (a = 0 stands in for N = 1).
  const Rational half_c = Rational::from_double(interval.c()) / Rational(2);
  const Rational half_d = Rational::from_double(interval.d()) / Rational(2);
  const BigInt first = certified_ceil(N, half_d);
  const BigInt past_last = certified_ceil(N, half_c);

  std::int64_t lo = std::max<std::int64_t>(0, first.get_si());
  std::int64_t hi = std::min<std::int64_t>(static_cast<std::int64_t>(N / 2), past_last.get_si() - 1);
  if (hi < lo) return 0;
  const auto primes = prime_divisors(N);
  return static_cast<std::size_t>(coprime_count_upto(hi, primes) - coprime_count_upto(lo - 1, primes));
}

double arccos_prediction(const Interval& interval, double degree) {
  return degree / std::numbers::pi * (std::acos(interval.c() / 2.0) - std::acos(interval.d() / 2.0));
}

double evaluate(const TestFunction& f, double x) {
  return std::visit(
      [x](const auto& fn) -> double {
        using T = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<T, IndicatorFn>) {
          return fn.interval.contains(x) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, PolynomialFn>) {
          double acc = 0.0;
          for (auto it = fn.coefficients.rbegin(); it != fn.coefficients.rend(); ++it) acc = acc * x + *it;
          return acc;
        } else {
          return std::log(std::abs(std::complex<double>(x, 0.0) - fn.alpha));
        }
      },
      f);
}

std::string describe(const TestFunction& f) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& fn) {
        using T = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<T, IndicatorFn>) {
          os << "1(" << fn.interval.c() << "," << fn.interval.d() << "]";
        } else if constexpr (std::is_same_v<T, PolynomialFn>) {
          os << "poly[";
          for (std::size_t i = 0; i < fn.coefficients.size(); ++i) os << (i ? ";" : "") << fn.coefficients[i];
          os << "]";
        } else {
          os << "log|x-(" << fn.alpha.real() << (fn.alpha.imag() < 0 ? "" : "+") << fn.alpha.imag() << "i)|";
        }
      },
      f);
  return os.str();
}

double measure_integral(const TestFunction& f, std::size_t nodes) {
  if (const auto* poly = std::get_if<PolynomialFn>(&f); poly && poly->coefficients.size() > 9) {
    throw DomainError("test polynomials are limited to degree 8");
  }
  if (const auto* log_fn = std::get_if<LogDistanceFn>(&f)) {
    const auto a = log_fn->alpha;
    if (a.imag() == 0.0 && std::fabs(a.real()) <= 2.0) throw DomainError("log test function needs alpha off [-2, 2]");
    return local_height_arch_quadrature(a, nodes).value;
  }
  if (const auto* ind = std::get_if<IndicatorFn>(&f)) return arccos_prediction(ind->interval, 1.0);
  return invariant_measure_average([&f](double x) { return evaluate(f, x); }, nodes);
}

EquidistributionSample equidistribution_average(std::uint64_t N, const TestFunction& f, std::size_t nodes) {
  const GaloisOrbit orbit = galois_orbit(Family::P, N);
  EquidistributionSample out;
  out.N = N;
  out.degree = orbit.degree;
  long double sum = 0.0L;
  for (const auto& v : orbit.values()) sum += evaluate(f, v.real());
  out.average = static_cast<double>(sum / static_cast<long double>(orbit.degree));
  out.integral = measure_integral(f, nodes);
  return out;
}

BakerProbe baker_gap_probe(const Rational& alpha, std::uint64_t n_max) {
  if (!(alpha > Rational(-2) && alpha < Rational(2))) {
    throw DomainError("probe needs alpha strictly inside (-2, 2)");
  }
  if (is_cyclotomic_value(Family::P, alpha)) {
    throw DomainError("alpha = " + alpha.to_string() + " is preperiodic");
  }
  const Rational x = alpha / Rational(2);
  BakerProbe probe;
  probe.theta0 = turn_value(x);

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> log_n, log_gap;
  for (std::uint64_t N = 2; N <= n_max; ++N) {
    // theta0 is irrational, so N*theta0 sits strictly between floor and ceil.
    const std::int64_t above = certified_ceil(N, x).get_si();
    std::int64_t lo = above - 1;
    while (lo >= 0 && std::gcd(static_cast<std::uint64_t>(lo), N) != 1) --lo;
    std::int64_t hi = above;
    while (hi <= static_cast<std::int64_t>(N) && std::gcd(static_cast<std::uint64_t>(hi), N) != 1) ++hi;

    GapRecord row;
    row.N = N;
    double gap_lo = lo >= 0 ? turn_gap(lo, N, x) : std::numeric_limits<double>::infinity();
    double gap_hi = turn_gap(hi, N, x);
    if (gap_lo <= gap_hi) {
      row.a = static_cast<std::uint64_t>(lo);
      row.gap = gap_lo;
    } else {
      row.a = static_cast<std::uint64_t>(hi);
      row.gap = gap_hi;
    }
    const auto side = compare_to_scaled_turn(BigInt(static_cast<unsigned long>(row.a)), N, x);
    if (!side || *side == 0 || !(row.gap > 0.0)) probe.all_positive = false;
    if (row.gap < best) {
      best = row.gap;
      row.record = true;
      ++probe.record_count;
      log_n.push_back(std::log(static_cast<double>(N)));
      log_gap.push_back(std::log(row.gap));
    }
    probe.rows.push_back(row);
  }

  const std::size_t n = log_n.size();
  if (n >= 3) {
    const double mx = std::accumulate(log_n.begin(), log_n.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(log_gap.begin(), log_gap.end(), 0.0) / static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (log_n[i] - mx) * (log_n[i] - mx);
      sxy += (log_n[i] - mx) * (log_gap[i] - my);
    }
    const double slope = sxy / sxx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = log_gap[i] - (my + slope * (log_n[i] - mx));
      ssr += r * r;
    }
    probe.exponent = -slope;
    probe.exponent_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  } else {
    probe.exponent = std::numeric_limits<double>::quiet_NaN();
    probe.exponent_stderr = std::numeric_limits<double>::quiet_NaN();
  }
  return probe;
}

}  // namespace chebdyn
