#include "chebdyn/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chebdyn/error.hpp"

namespace chebdyn {
namespace {

constexpr double kPi = std::numbers::pi;

bool on_real_segment(std::complex<double> z) { return z.imag() == 0.0 && std::fabs(z.real()) <= 2.0; }

// log|2cos(theta) - alpha| = log|theta - theta0| + log|g(theta)| near the
// root theta0 of 2cos(theta) = alpha; g is smooth and nonzero there.
double log_abs_regular_part(double theta, double theta0) {
  const double u = 0.5 * (theta - theta0);
  const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
  return std::log(std::fabs(2.0 * std::sin(0.5 * (theta + theta0)) * sinc));
}

// Antiderivative of log|t|.
double t_log_t(double t) { return t == 0.0 ? 0.0 : t * std::log(std::fabs(t)) - t; }

}  // namespace

std::string_view to_string(HeightMethod m) {
  switch (m) {
    case HeightMethod::iterative: return "iterative";
    case HeightMethod::quadrature: return "quadrature";
    case HeightMethod::closed: return "closed";
    case HeightMethod::nonarch: return "nonarch";
  }
  return "?";
}

std::string HeightReport::diagnostic() const {
  std::ostringstream os;
  switch (method) {
    case HeightMethod::iterative:
      if (bounded) {
        os << "bounded after " << iterations << " steps";
      } else if (slow_escape) {
        os << "slow escape: still within radius after " << iterations << " steps";
      } else {
        os << "escaped at step " << escape_step.value_or(0) << ", " << iterations << " steps";
      }
      break;
    case HeightMethod::quadrature:
      os << nodes << " nodes";
      if (window_nodes > 0) os << ", " << window_nodes << " in singular window";
      break;
    case HeightMethod::closed: os << "closed form"; break;
    case HeightMethod::nonarch: os << "good reduction"; break;
  }
  return os.str();
}

double local_height_nonarch(const Rational& alpha, const BigInt& p) {
  if (!is_prime(p)) throw DomainError("nonarchimedean height needs a prime, got " + p.get_str());
  if (alpha.is_zero()) return 0.0;
  const long v = valuation(alpha, p);
  return v < 0 ? static_cast<double>(-v) * log_abs(p) : 0.0;
}

HeightReport local_height_arch_iterative(std::complex<double> alpha, const ChebyshevMap& map, double tol,
                                         unsigned k_max) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("iterative height needs a finite input");
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  HeightReport report;
  report.alpha = alpha;
  report.method = HeightMethod::iterative;

  const int m = map.degree();
  const double log_m = std::log(static_cast<double>(m));
  // The invariant segment is [-2, 2] for P_m, [-2i, 2i] for Q_m with m odd.
  // Rounding must not push an orbit off it, or it would creep out.
  const bool clamp_real = map.family() == Family::P && on_real_segment(alpha);
  const bool clamp_imag = map.family() == Family::Q && m % 2 == 1 && alpha.real() == 0.0 &&
                          std::fabs(alpha.imag()) <= 2.0;

  std::complex<double> z = alpha;
  unsigned k = 0;
  while (std::abs(z) <= kEscapeRadius) {
    if (k == k_max) {
      if (std::abs(z) > 2.0) {
        report.slow_escape = true;
        report.value = std::log(std::abs(z)) * std::exp(-static_cast<double>(k) * log_m);
      } else {
        report.bounded = true;
        report.value = 0.0;
      }
      report.iterations = k;
      return report;
    }
    z = map(z);
    if (clamp_real) z = {std::clamp(z.real(), -2.0, 2.0), 0.0};
    if (clamp_imag) z = {0.0, std::clamp(z.imag(), -2.0, 2.0)};
    ++k;
  }
  report.escape_step = k;

  // Past the escape radius, z^m (1 + delta) with delta a series in 1/z:
  // track L = log|z| and theta = arg z, with the factor
  // P_m(z)/z^m = sum_i c_i w^(m-i), w = 1/z.
  std::vector<double> coeffs;
  for (const auto& c : map.polynomial().coefficients()) coeffs.push_back(c.get_d());
  double L = std::log(std::abs(z));
  double theta = std::arg(z);
  double log_scale = static_cast<double>(k) * log_m;
  report.value = L * std::exp(-log_scale);
  while (k < k_max) {
    const std::complex<double> w = std::polar(std::exp(-L), -theta);
    std::complex<double> factor = coeffs[0];
    for (int i = 1; i <= m; ++i) factor = factor * w + coeffs[static_cast<std::size_t>(i)];
    const double log_factor = std::log(std::abs(factor));
    L = static_cast<double>(m) * L + log_factor;
    theta = std::remainder(static_cast<double>(m) * theta + std::arg(factor), 2.0 * kPi);
    log_scale += log_m;
    ++k;
    report.value = L * std::exp(-log_scale);
    if (std::fabs(log_factor) * std::exp(-log_scale) < tol) break;
  }
  report.iterations = k;
  return report;
}

HeightReport local_height_arch_quadrature(std::complex<double> alpha, std::size_t nodes) {
  if (nodes < 2) throw DomainError("quadrature needs at least 2 nodes");
  if (alpha.imag() == 0.0 && std::fabs(alpha.real()) == 2.0) {
    throw DomainError("quadrature is undefined at the segment endpoints +-2");
  }
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("quadrature needs a finite input");
  }
  HeightReport report;
  report.alpha = alpha;
  report.method = HeightMethod::quadrature;
  report.nodes = nodes;

  const double n = static_cast<double>(nodes);
  const double step = kPi / n;
  const bool singular = on_real_segment(alpha);
  const double a = alpha.real();
  const double window = 10.0 / n;
  const double theta0 = singular ? std::acos(a / 2.0) : 0.0;

  long double sum = 0.0L;
  long double regular = 0.0L;
  std::size_t first = 0, last = 0;
  for (std::size_t j = 1; j <= nodes; ++j) {
    const double theta = (2.0 * static_cast<double>(j) - 1.0) * kPi / (2.0 * n);
    const double x = 2.0 * std::cos(theta);
    if (singular && std::fabs(x - a) < window) {
      if (report.window_nodes == 0) first = j;
      last = j;
      ++report.window_nodes;
      regular += log_abs_regular_part(theta, theta0);
      continue;
    }
    sum += std::log(std::abs(std::complex<double>(x, 0.0) - alpha));
  }
  double value = static_cast<double>(sum / n);
  if (report.window_nodes > 0) {
    const double lo = (2.0 * static_cast<double>(first) - 1.0) * kPi / (2.0 * n) - 0.5 * step;
    const double hi = (2.0 * static_cast<double>(last) - 1.0) * kPi / (2.0 * n) + 0.5 * step;
    const double singular_part = t_log_t(hi - theta0) - t_log_t(lo - theta0);
    value += (singular_part + step * static_cast<double>(regular)) / kPi;
  }
  report.value = value;
  return report;
}

double local_height_arch_closed(std::complex<double> alpha, Family family) {
  if (family == Family::Q) alpha = std::complex<double>(0.0, 1.0) * alpha;
  if (on_real_segment(alpha)) return 0.0;
  const std::complex<double> s = std::sqrt(alpha * alpha - 4.0);
  const double g = std::max(std::abs(alpha + s), std::abs(alpha - s)) / 2.0;
  return std::max(0.0, std::log(g));
}

double global_height(const Rational& alpha, const ChebyshevMap& map) {
  double total = local_height_arch_iterative({alpha.to_double(), 0.0}, map, 1e-14).value;
  if (alpha.is_integer()) return total;
  const Factorization den = factorize(alpha.den());
  for (const auto& f : den.factors) {
    if (f.prime) {
      total += local_height_nonarch(alpha, f.value);
    } else {
      // Every prime q of an unsplit cofactor c has |alpha|_q = q^(e v_q(c)),
      // so together they contribute e log c.
      total += static_cast<double>(f.exponent) * log_abs(f.value);
    }
  }
  return total;
}

double invariant_measure_average(const std::function<double(double)>& f, std::size_t nodes) {
  if (nodes < 1) throw DomainError("need at least one node");
  const double n = static_cast<double>(nodes);
  long double sum = 0.0L;
  for (std::size_t j = 1; j <= nodes; ++j) {
    sum += f(2.0 * std::cos((2.0 * static_cast<double>(j) - 1.0) * kPi / (2.0 * n)));
  }
  return static_cast<double>(sum / n);
}

double galois_average_log_distance(const PreperiodicPoint& point, const Rational& alpha, const Place& v) {
  const Rational norm = conjugate_norm(point.family, point.N, alpha);
  if (norm.is_zero()) {
    throw DomainError("alpha = " + alpha.to_string() + " is a conjugate of the point (N = " +
                      std::to_string(point.N) + ")");
  }
  const int degree = norm_polynomial(point.family, point.N).degree();
  return log_abs(norm, v) / static_cast<double>(degree);
}

std::vector<std::uint64_t> conductor_range(std::uint64_t first, std::uint64_t last) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(first, 1); n <= last; ++n) out.push_back(n);
  return out;
}

std::vector<ConvergenceRow> height_convergence_experiment(const Rational& alpha, const Place& v,
                                                          std::span<const std::uint64_t> conductors,
                                                          const ChebyshevMap& map) {
  if (alpha == Rational(-2) || alpha == Rational(0) || alpha == Rational(2)) {
    throw DomainError("alpha must differ from -2, 0 and 2");
  }
  if (v.is_archimedean() && is_preperiodic_rational(map, alpha).preperiodic) {
    throw DomainError("alpha = " + alpha.to_string() + " is preperiodic");
  }
  const double target = v.is_archimedean()
                            ? local_height_arch_iterative({alpha.to_double(), 0.0}, map, 1e-14).value
                            : local_height_nonarch(alpha, v.prime());

  std::vector<std::uint64_t> sorted(conductors.begin(), conductors.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<ConvergenceRow> rows;
  rows.reserve(sorted.size());
  for (std::uint64_t N : sorted) {
    ConvergenceRow row;
    row.N = N;
    row.target = target;
    try {
      row.degree = static_cast<std::size_t>(norm_polynomial(map.family(), N).degree());
      row.average = galois_average_log_distance(PreperiodicPoint::make(map.family(), N, 1), alpha, v);
      row.error = row.average - target;
    } catch (const DomainError& e) {
      row.failure = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<double> band_median_abs_error(std::span<const ConvergenceRow> rows, std::uint64_t lo,
                                            std::uint64_t hi) {
  std::vector<double> errs;
  for (const auto& r : rows) {
    if (!r.failure && r.N >= lo && r.N <= hi) errs.push_back(std::fabs(r.error));
  }
  if (errs.empty()) return std::nullopt;
  const std::size_t mid = errs.size() / 2;
  std::nth_element(errs.begin(), errs.begin() + static_cast<std::ptrdiff_t>(mid), errs.end());
  if (errs.size() % 2 == 1) return errs[mid];
  const double upper = errs[mid];
  const double lower = *std::max_element(errs.begin(), errs.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace chebdyn
