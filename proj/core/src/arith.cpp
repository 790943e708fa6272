#include "chebdyn/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "chebdyn/error.hpp"

namespace chebdyn {

Place Place::finite(const BigInt& p) {
  if (!is_prime(p)) throw DomainError("place " + p.get_str() + " is not a prime");
  Place out;
  out.prime_ = p;
  return out;
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return archimedean();
  return finite(parse_bigint(text));
}

const BigInt& Place::prime() const {
  if (!prime_) throw std::logic_error("archimedean place has no prime");
  return *prime_;
}

std::string Place::to_string() const { return prime_ ? prime_->get_str() : std::string("inf"); }

bool operator==(const Place& a, const Place& b) {
  if (a.is_archimedean() || b.is_archimedean()) return a.is_archimedean() == b.is_archimedean();
  return *a.prime_ == *b.prime_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_archimedean()) return !b.is_archimedean();
  if (b.is_archimedean()) return false;
  return *a.prime_ < *b.prime_;
}

long valuation(const Rational& r, const BigInt& p) {
  if (r.is_zero()) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError("valuation at non-prime " + p.get_str());
  BigInt scratch;
  auto up = mpz_remove(scratch.get_mpz_t(), r.raw().get_num_mpz_t(), p.get_mpz_t());
  auto down = mpz_remove(scratch.get_mpz_t(), r.raw().get_den_mpz_t(), p.get_mpz_t());
  return static_cast<long>(up) - static_cast<long>(down);
}

double log_abs(const Rational& r, const Place& v) {
  if (r.is_zero()) throw DomainError("log |0|_v is undefined");
  if (v.is_archimedean()) return log_abs(r.num()) - log_abs(r.den());
  const long e = valuation(r, v.prime());
  return e == 0 ? 0.0 : -static_cast<double>(e) * log_abs(v.prime());
}

std::string_view to_string(ProductFormulaVerdict v) {
  switch (v) {
    case ProductFormulaVerdict::holds: return "holds";
    case ProductFormulaVerdict::violated: return "violated";
    case ProductFormulaVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// Refines (value, exponent) pairs into pairwise coprime atoms with the same
// product: a^e b^f = (a/g)^e (b/g)^f g^(e+f) for g = gcd(a, b).
std::map<BigInt, long> coprime_base(std::vector<std::pair<BigInt, long>> atoms) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < atoms.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < atoms.size() && !changed; ++j) {
        BigInt g = gcd(atoms[i].first, atoms[j].first);
        if (g == 1) continue;
        if (atoms[i].first == atoms[j].first) {
          atoms[i].second += atoms[j].second;
          atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          const long e = atoms[i].second, f = atoms[j].second;
          atoms[i].first /= g;
          atoms[j].first /= g;
          atoms.emplace_back(g, e + f);
        }
        atoms.erase(std::remove_if(atoms.begin(), atoms.end(), [](const auto& a) { return a.first == 1; }),
                    atoms.end());
        changed = true;
      }
    }
  }
  std::map<BigInt, long> out;
  for (const auto& [v, e] : atoms) {
    if (e != 0) out[v] += e;
  }
  return out;
}

}  // namespace

ProductFormulaReport product_formula_check(const Rational& r, const FactorBudget& budget, CofactorPolicy policy) {
  if (r.is_zero()) throw DomainError("product formula needs a nonzero rational");
  ProductFormulaReport report;

  Factorization num = factorize(r.num(), budget);
  Factorization den = factorize(r.den(), budget);
  for (const auto* f : {&num, &den}) {
    for (const auto& factor : f->factors) {
      if (!factor.prime && policy == CofactorPolicy::indeterminate) {
        report.explanation = "composite cofactor " + factor.value.get_str() + " left unfactored";
        return report;
      }
    }
  }
  if (num.product() != r.num() || den.product() != r.den()) {
    report.verdict = ProductFormulaVerdict::violated;
    report.explanation = "factorization does not reproduce the input";
    return report;
  }

  // The archimedean coefficient of each atom is its exponent in |r|.
  std::vector<std::pair<BigInt, long>> pieces;
  for (const auto& f : num.factors) pieces.emplace_back(f.value, static_cast<long>(f.exponent));
  for (const auto& f : den.factors) pieces.emplace_back(f.value, -static_cast<long>(f.exponent));
  const std::map<BigInt, long> arch = coprime_base(std::move(pieces));

  if (!arch.empty()) {
    LedgerEntry entry{Place::archimedean(), {}, log_abs(r, Place::archimedean()), std::nullopt};
    for (const auto& [p, c] : arch) entry.log_coefficients.emplace_back(p, c);
    report.ledger.push_back(std::move(entry));
  }

  // Finite side: a prime atom is one place, measured by its valuation; a
  // composite atom c stands for the places q | c, and sum_q v_q(r) log q
  // over them is (exponent of c) * log c because the atoms are coprime.
  std::map<BigInt, long> total = arch;
  for (const auto& [atom, exponent] : arch) {
    if (is_prime(atom)) {
      const Place v = Place::finite(atom);
      const long c = -valuation(r, atom);
      total[atom] += c;
      report.ledger.push_back(LedgerEntry{v, {{atom, c}}, log_abs(r, v), std::nullopt});
    } else {
      const long c = -exponent;
      total[atom] += c;
      report.grouped.push_back(atom);
      report.ledger.push_back(
          LedgerEntry{Place::archimedean(), {{atom, c}}, static_cast<double>(c) * log_abs(atom), atom});
    }
  }

  for (const auto& entry : report.ledger) report.float_residual += entry.value;
  bool cancels = true;
  for (const auto& [p, c] : total) {
    if (c != 0) {
      cancels = false;
      std::ostringstream os;
      os << "coefficient of log " << p.get_str() << " sums to " << c;
      report.explanation = os.str();
    }
  }
  report.verdict = cancels ? ProductFormulaVerdict::holds : ProductFormulaVerdict::violated;
  if (cancels) {
    report.explanation = "integer coefficients cancel at every prime";
    if (!report.grouped.empty()) {
      report.explanation += "; places above " + std::to_string(report.grouped.size()) +
                            " unfactored composite(s) grouped per composite";
    }
  }
  return report;
}

}  // namespace chebdyn
