#pragma once

/**
 * S-integrality of preperiodic points relative to a rational alpha = u/w.
 *
 * The point beta = zeta + 1/zeta is an algebraic integer. Once S holds every
 * prime dividing w (so |alpha|_p <= 1 off S), "some conjugate of beta meets
 * alpha at a place above p" means v(sigma(beta) - alpha) > 0 for some place
 * above p, which happens iff p divides the integer norm
 *
 *     R = w^d * F(u/w),   F = Psi_N (or the Q-family conjugate polynomial).
 *
 * So beta is S-integral w.r.t. alpha iff R is an S-unit. The criterion is
 * Galois-stable, hence one certificate per orbit.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "chebdyn/arith.hpp"
#include "chebdyn/chebyshev.hpp"
#include "chebdyn/cyclotomic.hpp"

namespace chebdyn {

// A finite set of places that always includes the archimedean one.
class PlaceSet {
 public:
  PlaceSet() = default;
  // Throws DomainError if any entry is not prime.
  explicit PlaceSet(std::vector<BigInt> finite_primes);
  // "inf,11,13"; "inf" must be present.
  static PlaceSet parse(std::string_view text);

  bool includes_archimedean() const { return true; }
  const std::vector<BigInt>& finite_primes() const { return primes_; }
  bool contains(const BigInt& p) const;
  PlaceSet with(const std::vector<BigInt>& extra) const;
  bool is_subset_of(const PlaceSet& other) const;

 private:
  std::vector<BigInt> primes_;  // sorted, unique
};

// R = w^d F(u/w). Throws DomainError when alpha is a conjugate (R = 0).
BigInt meets_integer(const PreperiodicPoint& point, const Rational& alpha);

struct IntegralityCertificate {
  PreperiodicPoint point;
  Rational alpha;
  BigInt resultant_integer;
  // Factorization of R: S-primes are divided out exactly, the rest is
  // factored within the budget.
  Factorization factorization;
  std::vector<BigInt> offending_primes;  // known primes of R outside S
  // Part of R coprime to S that the budget could not split (1 if none). A
  // value > 1 still certifies non-integrality: it has a prime outside S.
  BigInt unfactored_cofactor = 1;
  std::vector<BigInt> added_primes;  // denominator primes S was extended by
  bool verdict = false;
};

IntegralityCertificate is_s_integral(const PreperiodicPoint& point, const Rational& alpha, const PlaceSet& S,
                                     const FactorBudget& budget = {});

struct ScanRecord {
  std::uint64_t N = 0;
  std::uint64_t a = 0;
  std::size_t degree = 0;
  BigInt resultant;
  bool verdict = false;
  std::vector<BigInt> offending_primes;
  BigInt cofactor = 1;
  bool complete = true;
};

struct ScanSummary {
  std::vector<std::uint64_t> members;     // N of every integral orbit
  std::optional<std::uint64_t> last_new;  // largest N adding a member
  std::vector<std::size_t> cumulative;    // cumulative[i] = members with N <= i + 1
  std::vector<BigInt> added_primes;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

// Scan budget: R grows like exp(phi(N)/2 * h(alpha)), so rho is kept short;
// verdicts never depend on it.
FactorBudget default_scan_budget();

// One orbit per conductor N <= n_max, in increasing N. Throws DomainError if
// alpha is preperiodic for the map.
ScanResult finiteness_scan(const Rational& alpha, const PlaceSet& S, std::uint64_t n_max, const ChebyshevMap& map,
                           const FactorBudget& budget = default_scan_budget());

}  // namespace chebdyn
