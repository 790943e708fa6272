#pragma once

/**
 * Equidistribution of the conjugates 2cos(2 pi a/N) against
 * dmu = dx / (pi sqrt(4 - x^2)): interval counts versus the arccos main
 * term, averages of test functions, and a probe of how closely a/N can
 * approach arccos(alpha/2) / (2 pi).
 */

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chebdyn/rational.hpp"

namespace chebdyn {

// Half-open (c, d] with -2 <= c < d <= 2.
class Interval {
 public:
  Interval(double c, double d);
  double c() const { return c_; }
  double d() const { return d_; }
  bool contains(double x) const { return c_ < x && x <= d_; }

 private:
  double c_;
  double d_;
};

// Number of conjugates of 2cos(2 pi/N) in (c, d], decided in the angle
// domain with certified arccos enclosures. Throws DomainError naming the
// colliding a if an endpoint cannot be separated from a conjugate.
std::size_t count_in_interval(std::uint64_t N, const Interval& interval);

// (degree / pi) (arccos(c/2) - arccos(d/2)).
double arccos_prediction(const Interval& interval, double degree);

struct IndicatorFn {
  Interval interval;
};
struct PolynomialFn {
  std::vector<double> coefficients;  // constant first, degree <= 8
};
struct LogDistanceFn {
  std::complex<double> alpha;  // off [-2, 2]
};
using TestFunction = std::variant<IndicatorFn, PolynomialFn, LogDistanceFn>;

double evaluate(const TestFunction& f, double x);
std::string describe(const TestFunction& f);

// Reference value of the integral against dmu: exact for indicators,
// uniform-angle quadrature with `nodes` points otherwise.
double measure_integral(const TestFunction& f, std::size_t nodes = 1u << 16);

struct EquidistributionSample {
  std::uint64_t N = 0;
  std::size_t degree = 0;
  double average = 0.0;
  double integral = 0.0;
};

EquidistributionSample equidistribution_average(std::uint64_t N, const TestFunction& f,
                                                std::size_t nodes = 1u << 16);

struct GapRecord {
  std::uint64_t N = 0;
  std::uint64_t a = 0;
  double gap = 0.0;     // |a/N - theta0|
  bool record = false;  // strictly below every earlier gap
};

struct BakerProbe {
  double theta0 = 0.0;
  std::vector<GapRecord> rows;  // best coprime a for each N in [2, n_max]
  bool all_positive = true;     // every gap certified nonzero
  double exponent = 0.0;        // C in gap ~ N^-C, least squares on record rows
  double exponent_stderr = 0.0;
  std::size_t record_count = 0;
};

// alpha rational in (-2, 2) and not preperiodic; theta0 = arccos(alpha/2)/(2 pi).
BakerProbe baker_gap_probe(const Rational& alpha, std::uint64_t n_max);

}  // namespace chebdyn
