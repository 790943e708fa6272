#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chebdyn/factorize.hpp"
#include "chebdyn/rational.hpp"

namespace chebdyn {

// A place of Q: the archimedean absolute value or a p-adic one.
class Place {
 public:
  static Place archimedean() { return Place(); }
  // Throws DomainError unless p is prime.
  static Place finite(const BigInt& p);
  // "inf" or a prime in decimal.
  static Place parse(std::string_view text);

  bool is_archimedean() const { return !prime_.has_value(); }
  const BigInt& prime() const;
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b);
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  std::optional<BigInt> prime_;
};

// Exponent of p in r. Throws on r == 0 or composite p.
long valuation(const Rational& r, const BigInt& p);

// log |r|_v, normalized so that |p|_p = 1/p.
double log_abs(const Rational& r, const Place& v);

// One place's contribution to sum_v log|r|_v, written exactly as an integer
// combination of log p, together with its floating value. An entry with a
// `block` stands for all finite places dividing that unfactored composite;
// their joint contribution is an integer multiple of log(block).
struct LedgerEntry {
  Place place;
  std::vector<std::pair<BigInt, long>> log_coefficients;  // (p, c) means c*log p
  double value = 0.0;
  std::optional<BigInt> block;
};

enum class ProductFormulaVerdict { holds, violated, indeterminate };

// What to do with a composite cofactor that factoring gave up on.
enum class CofactorPolicy {
  indeterminate,  // stop with an indeterminate verdict
  group,          // keep it as one atom of a coprime base
};

struct ProductFormulaReport {
  ProductFormulaVerdict verdict = ProductFormulaVerdict::indeterminate;
  std::vector<LedgerEntry> ledger;
  double float_residual = 0.0;
  std::string explanation;
  std::vector<BigInt> grouped;  // composite atoms kept whole
};

// Builds the archimedean entry from the factorization of numerator and
// denominator and each finite entry from valuation(); the verdict is the
// exact cancellation of the integer coefficients per atom.
ProductFormulaReport product_formula_check(const Rational& r, const FactorBudget& budget = {},
                                           CofactorPolicy policy = CofactorPolicy::indeterminate);

std::string_view to_string(ProductFormulaVerdict v);

}  // namespace chebdyn
