#include "chebdyn/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "chebdyn/error.hpp"
#include "chebdyn/resultant.hpp"

namespace chebdyn {
namespace {

void require_conductor(std::uint64_t N) {
  if (N < 1) throw DomainError("conductor N must be >= 1");
}

// Append-only memo: many concurrent readers, one writer at a time. Stored
// values never move, so returned references stay valid.
class PolyMemo {
 public:
  template <class Build>
  const IntPolynomial& get(std::uint64_t key, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    IntPolynomial value = build();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, IntPolynomial> table_;
};

PolyMemo& cyclotomic_memo() {
  static PolyMemo m;
  return m;
}
PolyMemo& real_cyclotomic_memo() {
  static PolyMemo m;
  return m;
}
PolyMemo& conjugate_memo(Family f) {
  static PolyMemo p, q;
  return f == Family::P ? p : q;
}

const IntPolynomial& cyclotomic_cached(std::uint64_t N) {
  return cyclotomic_memo().get(N, [N] {
    IntPolynomial quotient = IntPolynomial::monomial(1, N) - IntPolynomial{1};
    for (std::uint64_t d : divisors(N)) {
      if (d == N) continue;
      quotient = quotient.exact_quotient(cyclotomic_cached(d));
    }
    return quotient;
  });
}

IntPolynomial chebyshev_basis_sum(const IntPolynomial& phi) {
  // phi palindromic of degree 2h: phi(x)/x^h = c_0 + sum_k c_k (x^k + x^-k).
  const auto deg = static_cast<std::size_t>(phi.degree());
  if (deg % 2 != 0) throw std::logic_error("odd-degree cyclotomic polynomial");
  const std::size_t h = deg / 2;
  for (std::size_t k = 0; k <= deg; ++k) {
    if (phi.coeff(k) != phi.coeff(deg - k)) throw std::logic_error("cyclotomic polynomial is not palindromic");
  }
  std::vector<BigInt> acc(h + 1);
  acc[0] = phi.coeff(h);
  // Running P_{k-1}, P_k from P_0 = 2, P_1 = z.
  std::vector<BigInt> prev(h + 1), cur(h + 1), next(h + 1);
  prev[0] = 2;
  cur[1] = 1;
  for (std::size_t k = 1; k <= h; ++k) {
    const BigInt& c = phi.coeff(h + k);
    if (sgn(c) != 0) {
      for (std::size_t i = 0; i <= k; ++i) {
        if (sgn(cur[i]) != 0) mpz_addmul(acc[i].get_mpz_t(), c.get_mpz_t(), cur[i].get_mpz_t());
      }
    }
    if (k == h) break;
    // next = z * cur - prev
    next[0] = -prev[0];
    for (std::size_t i = 1; i <= k + 1; ++i) mpz_sub(next[i].get_mpz_t(), cur[i - 1].get_mpz_t(), prev[i].get_mpz_t());
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return IntPolynomial(std::move(acc));
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

PreperiodicPoint PreperiodicPoint::make(Family family, std::uint64_t N, std::int64_t a) {
  require_conductor(N);
  const auto n = static_cast<std::int64_t>(N);
  std::int64_t r = ((a % n) + n) % n;
  if (r == 0) r = n;
  if (std::gcd(r, n) != 1) {
    throw DomainError("gcd(" + std::to_string(a) + ", " + std::to_string(N) + ") != 1");
  }
  if (family == Family::P && N > 2) r = std::min(r, n - r);
  return PreperiodicPoint{family, N, static_cast<std::uint64_t>(r)};
}

std::complex<double> PreperiodicPoint::value() const {
  // Reduce the angle to [0, pi] in exact integer arithmetic first.
  const double turn = static_cast<double>(a % N) / static_cast<double>(N);
  const double angle = 2.0 * std::numbers::pi * turn;
  if (family == Family::P) return {2.0 * std::cos(angle), 0.0};
  return {0.0, 2.0 * std::sin(angle)};
}

std::vector<std::complex<double>> GaloisOrbit::values() const {
  std::vector<std::complex<double>> out;
  out.reserve(representatives.size());
  for (auto a : representatives) out.push_back(PreperiodicPoint{family, N, a}.value());
  return out;
}

IntPolynomial cyclotomic_poly(std::uint64_t N) {
  require_conductor(N);
  return cyclotomic_cached(N);
}

static const IntPolynomial& real_cyclotomic_cached(std::uint64_t N) {
  return real_cyclotomic_memo().get(N, [N] {
    if (N == 1) return IntPolynomial{-2, 1};
    if (N == 2) return IntPolynomial{2, 1};
    return chebyshev_basis_sum(cyclotomic_cached(N));
  });
}

IntPolynomial real_cyclotomic_poly(std::uint64_t N) {
  require_conductor(N);
  return real_cyclotomic_cached(N);
}

static const IntPolynomial& conjugate_cached(Family family, std::uint64_t N) {
  return conjugate_memo(family).get(N, [family, N] {
    const IntPolynomial& phi = cyclotomic_cached(N);
    std::vector<IntPolynomial> f;
    for (const auto& c : phi.coefficients()) f.push_back(IntPolynomial::constant(c));
    // x^2 - w x + c as a polynomial in x over Z[w].
    const long c = family == Family::P ? 1 : -1;
    std::vector<IntPolynomial> g{IntPolynomial{c}, IntPolynomial{0, -1}, IntPolynomial{1}};
    IntPolynomial res = resultant_x(f, g);
    if (res.leading() == -1) res = -res;
    if (!res.is_monic()) throw std::logic_error("conjugate polynomial is not monic up to sign");
    return res;
  });
}

IntPolynomial conjugate_poly(Family family, std::uint64_t N) {
  require_conductor(N);
  return conjugate_cached(family, N);
}

GaloisOrbit galois_orbit(Family family, std::uint64_t N) {
  require_conductor(N);
  GaloisOrbit out{family, N, {}, 0};
  if (family == Family::P) {
    if (N <= 2) {
      out.representatives = {1};
    } else {
      for (std::uint64_t a = 1; 2 * a <= N; ++a) {
        if (std::gcd(a, N) == 1) out.representatives.push_back(a);
      }
    }
  } else {
    // zeta^a - zeta^-a = zeta^b - zeta^-b iff b = a or b = N/2 - a (mod N).
    std::set<std::uint64_t> taken;
    for (std::uint64_t a = 1; a <= N; ++a) {
      if (std::gcd(a, N) != 1 || taken.count(a) != 0) continue;
      out.representatives.push_back(a);
      taken.insert(a);
      if (N % 2 == 0) {
        const std::uint64_t half = N / 2;
        std::uint64_t partner = ((half + N - (a % N)) % N);
        if (partner == 0) partner = N;
        taken.insert(partner);
      }
    }
    if (N <= 2) out.representatives = {1};
  }
  out.degree = out.representatives.size();
  return out;
}

const IntPolynomial& norm_polynomial(Family family, std::uint64_t N) {
  require_conductor(N);
  return family == Family::P ? real_cyclotomic_cached(N) : conjugate_cached(Family::Q, N);
}

Rational conjugate_norm(Family family, std::uint64_t N, const Rational& alpha) {
  return norm_polynomial(family, N)(alpha);
}

}  // namespace chebdyn

namespace chebdyn {

bool is_cyclotomic_value(Family family, const Rational& alpha) {
  if (!alpha.is_integer()) return false;
  if (family == Family::Q) return alpha.is_zero();
  return ::abs(alpha.num()) <= 2;
}

}  // namespace chebdyn
