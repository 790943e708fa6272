#pragma once

#include <cstdint>
#include <vector>

#include "chebdyn/rational.hpp"

namespace chebdyn {

// Primality: deterministic Miller-Rabin below 3.3e24, Baillie-PSW (GMP) above.
bool is_prime(const BigInt& n);

// Primes up to and including `limit`, from a shared sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct FactorBudget {
  std::uint32_t trial_limit = 1'000'000;
  // Brent-rho steps allowed per attempt, and number of attempts (fresh
  // polynomial constant each time) before a cofactor is given up on.
  std::uint64_t rho_steps = 100'000;
  unsigned rho_attempts = 4;
  std::uint64_t seed = 0x5eed'c0de'2024ULL;
};

struct Factor {
  BigInt value;
  unsigned exponent = 1;
  bool prime = true;  // false marks a composite cofactor left over
};

class Factorization {
 public:
  int sign = 1;
  std::vector<Factor> factors;  // ascending by value

  bool complete() const;
  BigInt product() const;  // sign * prod value^exponent
  std::vector<BigInt> primes() const;
  unsigned exponent_of(const BigInt& p) const;
};

// Factors n != 0 within the budget. Composite parts that resist rho are
// kept as a single non-prime factor and complete() is then false.
Factorization factorize(const BigInt& n, const FactorBudget& budget = {});

}  // namespace chebdyn
