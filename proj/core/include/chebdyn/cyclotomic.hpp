#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "chebdyn/chebyshev.hpp"
#include "chebdyn/polynomial.hpp"

namespace chebdyn {

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/**
 * The Galois orbit of zeta_N^a + zeta_N^-a (family P) or zeta_N^a - zeta_N^-a
 * (family Q), identified by its canonical representative.
 *
 * P: a and N - a give the same value, so a is reduced to min(a, N - a);
 *    N = 1 is stored as a = 1 (value 2) and N = 2 as a = 1 (value -2).
 * Q: a is reduced into [1, N]; a and N - a give negated values.
 */
struct PreperiodicPoint {
  Family family = Family::P;
  std::uint64_t N = 1;
  std::uint64_t a = 1;

  // Throws DomainError if N < 1 or gcd(a, N) != 1.
  static PreperiodicPoint make(Family family, std::uint64_t N, std::int64_t a);

  // 2cos(2 pi a/N) or 2i sin(2 pi a/N).
  std::complex<double> value() const;

  friend bool operator==(const PreperiodicPoint&, const PreperiodicPoint&) = default;
};

struct GaloisOrbit {
  Family family = Family::P;
  std::uint64_t N = 1;
  // One canonical a per distinct conjugate value.
  std::vector<std::uint64_t> representatives;
  // [Q(value) : Q], the number of distinct conjugates.
  std::size_t degree = 0;

  std::vector<std::complex<double>> values() const;
};

// Phi_N by the quotient recursion (x^N - 1) / prod_{d | N, d < N} Phi_d.
IntPolynomial cyclotomic_poly(std::uint64_t N);

// Psi_N, the minimal polynomial of 2cos(2 pi/N), obtained by rewriting the
// palindromic Phi_N(x)/x^{phi(N)/2} in the basis x^k + x^-k = P_k(x + 1/x).
IntPolynomial real_cyclotomic_poly(std::uint64_t N);

// Res_x(Phi_N(x), x^2 - w x + 1) (family P) or Res_x(Phi_N(x), x^2 - w x - 1)
// (family Q), made monic: degree phi(N), roots are all conjugate values with
// multiplicity. Equals Psi_N^2 for P and N >= 3.
IntPolynomial conjugate_poly(Family family, std::uint64_t N);

GaloisOrbit galois_orbit(Family family, std::uint64_t N);

// Polynomial whose roots are the conjugates of the point, with its degree
// used for averages: Psi_N (P) or conjugate_poly(Q, N) (Q).
const IntPolynomial& norm_polynomial(Family family, std::uint64_t N);

// True iff alpha is itself a value zeta + 1/zeta (P) or zeta - 1/zeta (Q):
// {-2, -1, 0, 1, 2} and {0} respectively.
bool is_cyclotomic_value(Family family, const Rational& alpha);

// norm_polynomial evaluated exactly at alpha: the product of
// (alpha - sigma(x)) over the conjugates sigma(x).
Rational conjugate_norm(Family family, std::uint64_t N, const Rational& alpha);

}  // namespace chebdyn
