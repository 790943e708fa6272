#pragma once

/**
 * Chebyshev families.
 *
 *   P_1 = z, P_2 = z^2 - 2, P_{m+1} = z P_m - P_{m-1}   (P_m(w + 1/w) = w^m + w^-m)
 *   Q_1 = z, Q_2 = z^2 + 2, Q_{m+1} = z Q_m + Q_{m-1}   (Q_m(z) = (-i)^m P_m(iz))
 *
 * Both recursions start consistently from a virtual degree-0 term equal to 2.
 */

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebdyn/polynomial.hpp"
#include "chebdyn/rational.hpp"

namespace chebdyn {

enum class Family { P, Q };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

IntPolynomial cheb_poly(Family family, int m);

Rational cheb_eval(Family family, int m, const Rational& z);
double cheb_eval(Family family, int m, double z);
std::complex<double> cheb_eval(Family family, int m, std::complex<double> z);

// A dynamical map: P_m or Q_m with m >= 2.
class ChebyshevMap {
 public:
  ChebyshevMap(Family family, int degree);

  Family family() const { return family_; }
  int degree() const { return degree_; }
  const IntPolynomial& polynomial() const { return poly_; }

  template <class T>
  T operator()(const T& z) const {
    return cheb_eval(family_, degree_, z);
  }

 private:
  Family family_;
  int degree_;
  IntPolynomial poly_;
};

enum class OrbitStop { completed, repeated, escaped };

template <class T>
struct Orbit {
  std::vector<T> iterates;  // z0, phi(z0), ...
  OrbitStop stop = OrbitStop::completed;
  // For a repeat: iterates.back() equals iterates[*first_occurrence].
  std::optional<std::size_t> first_occurrence;
};

// Float orbits stop once |z| exceeds this.
inline constexpr double kOrbitOverflowGuard = 1e150;

// Exact orbit of k steps; stops at the first repeated value.
Orbit<Rational> orbit(const ChebyshevMap& map, const Rational& z0, std::size_t k);
// Float orbit; never reports a repeat, only escape past kOrbitOverflowGuard.
Orbit<double> orbit(const ChebyshevMap& map, double z0, std::size_t k);

struct PreperiodicityVerdict {
  bool preperiodic = false;
  Orbit<Rational> witness;
  std::string reason;
};

/**
 * Exact decision for rational alpha.
 *
 * Preperiodic rationals of a monic integer polynomial are integers (a
 * denominator only grows under iteration), and an integer with
 * |z| >= 2 + sum_{i<m} |c_i| escapes monotonically. So the orbit is run
 * exactly until it either repeats or crosses that bound.
 *
 * For P_m this yields exactly {-2, -1, 0, 1, 2}, the rational values of
 * zeta + 1/zeta (phi(N) <= 2 forces N in {1, 2, 3, 4, 6}). For Q_m with m
 * odd it yields {0}; for Q_m with m even the set is empty (0 -> 2 -> ...
 * escapes under Q_2).
 */
PreperiodicityVerdict is_preperiodic_rational(const ChebyshevMap& map, const Rational& alpha);

}  // namespace chebdyn
