#include "chebdyn/integrality.hpp"

#include <algorithm>
#include <sstream>

#include "chebdyn/error.hpp"

namespace chebdyn {

PlaceSet::PlaceSet(std::vector<BigInt> finite_primes) : primes_(std::move(finite_primes)) {
  for (const auto& p : primes_) {
    if (!is_prime(p)) throw DomainError("place set entry " + p.get_str() + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PlaceSet PlaceSet::parse(std::string_view text) {
  std::vector<BigInt> primes;
  bool saw_inf = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    if (token == "inf" || token == "infinity" || token == "oo") {
      saw_inf = true;
    } else if (!token.empty()) {
      primes.push_back(parse_bigint(token));
    }
    start = comma + 1;
  }
  if (!saw_inf) throw std::invalid_argument("place set must contain the archimedean place 'inf'");
  return PlaceSet(std::move(primes));
}

bool PlaceSet::contains(const BigInt& p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

PlaceSet PlaceSet::with(const std::vector<BigInt>& extra) const {
  std::vector<BigInt> all = primes_;
  all.insert(all.end(), extra.begin(), extra.end());
  return PlaceSet(std::move(all));
}

bool PlaceSet::is_subset_of(const PlaceSet& other) const {
  return std::all_of(primes_.begin(), primes_.end(), [&](const BigInt& p) { return other.contains(p); });
}

BigInt meets_integer(const PreperiodicPoint& point, const Rational& alpha) {
  const IntPolynomial& f = norm_polynomial(point.family, point.N);
  BigInt r = f.eval_homogeneous(alpha.num(), alpha.den());
  if (sgn(r) == 0) {
    throw DomainError("alpha = " + alpha.to_string() + " is a conjugate of the point (N = " +
                      std::to_string(point.N) + ")");
  }
  return r;
}

IntegralityCertificate is_s_integral(const PreperiodicPoint& point, const Rational& alpha, const PlaceSet& S,
                                     const FactorBudget& budget) {
  IntegralityCertificate cert;
  cert.point = point;
  cert.alpha = alpha;
  cert.resultant_integer = meets_integer(point, alpha);

  PlaceSet extended = S;
  if (!alpha.is_integer()) {
    const Factorization den = factorize(alpha.den(), budget);
    for (const auto& p : den.primes()) {
      if (!S.contains(p)) cert.added_primes.push_back(p);
    }
    extended = S.with(cert.added_primes);
  }

  Factorization& fact = cert.factorization;
  fact.sign = sgn(cert.resultant_integer) < 0 ? -1 : 1;
  BigInt rest = ::abs(cert.resultant_integer);
  for (const auto& p : extended.finite_primes()) {
    auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (e > 0) fact.factors.push_back(Factor{p, static_cast<unsigned>(e), true});
  }
  if (rest != 1) {
    const Factorization outside = factorize(rest, budget);
    for (const auto& f : outside.factors) {
      fact.factors.push_back(f);
      if (f.prime) {
        cert.offending_primes.push_back(f.value);
      } else {
        cert.unfactored_cofactor *= f.value;
      }
    }
  }
  std::sort(fact.factors.begin(), fact.factors.end(),
            [](const Factor& x, const Factor& y) { return x.value < y.value; });
  cert.verdict = rest == 1;
  return cert;
}

FactorBudget default_scan_budget() {
  FactorBudget b;
  b.trial_limit = 1'000'000;
  b.rho_steps = 4'000;
  b.rho_attempts = 2;
  return b;
}

ScanResult finiteness_scan(const Rational& alpha, const PlaceSet& S, std::uint64_t n_max, const ChebyshevMap& map,
                           const FactorBudget& budget) {
  if (is_cyclotomic_value(map.family(), alpha) || is_preperiodic_rational(map, alpha).preperiodic) {
    throw DomainError("alpha = " + alpha.to_string() + " is preperiodic for " + std::string(to_string(map.family())) +
                      "_" + std::to_string(map.degree()));
  }
  ScanResult out;
  std::size_t count = 0;
  for (std::uint64_t N = 1; N <= n_max; ++N) {
    const auto point = PreperiodicPoint::make(map.family(), N, 1);
    const auto cert = is_s_integral(point, alpha, S, budget);
    ScanRecord rec;
    rec.N = N;
    rec.a = point.a;
    rec.degree = static_cast<std::size_t>(norm_polynomial(map.family(), N).degree());
    rec.resultant = cert.resultant_integer;
    rec.verdict = cert.verdict;
    rec.offending_primes = cert.offending_primes;
    rec.cofactor = cert.unfactored_cofactor;
    rec.complete = cert.factorization.complete();
    if (out.summary.added_primes.empty()) out.summary.added_primes = cert.added_primes;
    if (rec.verdict) {
      ++count;
      out.summary.members.push_back(N);
      out.summary.last_new = N;
    }
    out.summary.cumulative.push_back(count);
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace chebdyn
