#pragma once

/**
 * Local and global canonical heights for Chebyshev maps over Q.
 *
 * Archimedean height of the P family is the Green's function of [-2, 2],
 * computed three independent ways:
 *   iterative   escape rate lim log max(|phi^k(a)|, 1) / m^k, continued in
 *               log space once |z| > 4;
 *   quadrature  mean of log|x - a| against the invariant measure
 *               dx / (pi sqrt(4 - x^2)), pulled back to uniform angles;
 *   closed      log|g| for the root |g| >= 1 of g^2 - a g + 1.
 * At a prime p every Chebyshev map has good reduction, so the height is
 * log max(|a|_p, 1).
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chebdyn/arith.hpp"
#include "chebdyn/chebyshev.hpp"
#include "chebdyn/cyclotomic.hpp"

namespace chebdyn {

enum class HeightMethod { iterative, quadrature, closed, nonarch };
std::string_view to_string(HeightMethod m);

struct HeightReport {
  std::variant<Rational, std::complex<double>> alpha;
  Place place = Place::archimedean();
  HeightMethod method = HeightMethod::closed;
  double value = 0.0;

  // iterative: steps taken; escape_step is where |z| first exceeded 4.
  unsigned iterations = 0;
  std::optional<unsigned> escape_step;
  bool bounded = false;
  bool slow_escape = false;
  // quadrature: node count and how many nodes the singular window replaced.
  std::size_t nodes = 0;
  std::size_t window_nodes = 0;

  std::string diagnostic() const;
};

inline constexpr double kEscapeRadius = 4.0;
inline constexpr unsigned kMaxIterations = 200;

double local_height_nonarch(const Rational& alpha, const BigInt& p);

HeightReport local_height_arch_iterative(std::complex<double> alpha, const ChebyshevMap& map,
                                         double tol = 1e-12, unsigned k_max = kMaxIterations);

// Throws DomainError for alpha = +-2 and for nodes < 2.
HeightReport local_height_arch_quadrature(std::complex<double> alpha, std::size_t nodes);

// Green's function of the Julia segment: [-2, 2] for P, [-2i, 2i] for Q
// (the latter is the Q_m height for odd m, where Q_m is conjugate to +-P_m).
double local_height_arch_closed(std::complex<double> alpha, Family family = Family::P);

// Sum over the archimedean place and the primes dividing the denominator.
double global_height(const Rational& alpha, const ChebyshevMap& map);

// (1/n) sum f(2cos((2j-1) pi / 2n)): the invariant-measure integral of f on
// uniform angle nodes.
double invariant_measure_average(const std::function<double(double)>& f, std::size_t nodes);

// (1/deg) sum_sigma log|sigma(x) - alpha|_v over the conjugates of the point,
// through the exact norm. Throws DomainError if alpha is a conjugate.
double galois_average_log_distance(const PreperiodicPoint& point, const Rational& alpha, const Place& v);

struct ConvergenceRow {
  std::uint64_t N = 0;
  std::size_t degree = 0;
  double average = 0.0;
  double target = 0.0;
  double error = 0.0;  // average - target
  std::optional<std::string> failure;
};

std::vector<ConvergenceRow> height_convergence_experiment(const Rational& alpha, const Place& v,
                                                          std::span<const std::uint64_t> conductors,
                                                          const ChebyshevMap& map);

std::vector<std::uint64_t> conductor_range(std::uint64_t first, std::uint64_t last);

// Median |error| of the successful rows with N in [lo, hi]; nullopt if none.
std::optional<double> band_median_abs_error(std::span<const ConvergenceRow> rows, std::uint64_t lo,
                                            std::uint64_t hi);

}  // namespace chebdyn
