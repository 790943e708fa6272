#include <doctest.h>

#include <algorithm>

#include "chebdyn/arith.hpp"
#include "chebdyn/chebyshev.hpp"
#include "chebdyn/cyclotomic.hpp"
#include "chebdyn/error.hpp"
#include "chebdyn/integrality.hpp"

using namespace chebdyn;

namespace {

const ChebyshevMap kP2(Family::P, 2);

bool includes(const std::vector<std::uint64_t>& big, const std::vector<std::uint64_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("place sets") {
  auto s = PlaceSet::parse("inf,11,2,11");
  CHECK(s.finite_primes() == std::vector<BigInt>{2, 11});
  CHECK(s.contains(BigInt(11)));
  CHECK(PlaceSet::parse("inf").finite_primes().empty());
  CHECK_THROWS(PlaceSet::parse("11"));
  CHECK_THROWS(PlaceSet::parse("inf,12"));
  CHECK_THROWS(PlaceSet::parse("inf,x"));
  CHECK(PlaceSet::parse("inf,2").is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(PlaceSet::parse("inf,2")));
}

TEST_CASE("meets_integer examples") {
  CHECK(meets_integer(PreperiodicPoint::make(Family::P, 5, 1), Rational(3)) == 11);
  CHECK(meets_integer(PreperiodicPoint::make(Family::P, 5, 1), Rational(1, 2)) == -1);
  CHECK(meets_integer(PreperiodicPoint::make(Family::P, 12, 1), Rational(3)) == 6);
  CHECK_THROWS_AS(meets_integer(PreperiodicPoint::make(Family::P, 6, 1), Rational(1)), DomainError);
}

TEST_CASE("is_s_integral examples") {
  const auto p5 = PreperiodicPoint::make(Family::P, 5, 1);
  auto a = is_s_integral(p5, Rational(3), PlaceSet{});
  CHECK_FALSE(a.verdict);
  CHECK(a.offending_primes == std::vector<BigInt>{11});

  auto b = is_s_integral(p5, Rational(3), PlaceSet::parse("inf,11"));
  CHECK(b.verdict);
  CHECK(b.offending_primes.empty());

  auto c = is_s_integral(p5, Rational(1, 2), PlaceSet{});
  CHECK(c.verdict);
  CHECK(c.resultant_integer == -1);
  CHECK(c.added_primes == std::vector<BigInt>{2});
}

TEST_CASE("an unfactored cofactor still decides the verdict") {
  // Psi_N(alpha) carrying a large prime outside S is non-integral even if
  // factoring gives up on it.
  FactorBudget tiny;
  tiny.trial_limit = 10;
  tiny.rho_steps = 1;
  tiny.rho_attempts = 1;
  auto cert = is_s_integral(PreperiodicPoint::make(Family::P, 97, 1), Rational(3), PlaceSet{}, tiny);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.factorization.product() == cert.resultant_integer);
}

TEST_CASE("finiteness scan examples") {
  auto plain = finiteness_scan(Rational(3), PlaceSet{}, 100, kP2);
  CHECK(plain.records.size() == 100);
  CHECK(plain.summary.members == std::vector<std::uint64_t>{1});
  for (const auto& r : plain.records) {
    if (r.verdict) CHECK(::abs(r.resultant) == 1);
  }
  auto with11 = finiteness_scan(Rational(3), PlaceSet::parse("inf,11"), 100, kP2);
  CHECK(with11.summary.members == std::vector<std::uint64_t>{1, 5});
  CHECK(with11.records[4].verdict);
  CHECK(with11.summary.last_new == std::uint64_t{5});
  CHECK(with11.summary.cumulative.back() == 2);

  auto half = finiteness_scan(Rational(1, 2), PlaceSet{}, 200, kP2);
  CHECK(half.summary.members == std::vector<std::uint64_t>{4, 5, 6, 14, 24});
  CHECK(half.summary.added_primes == std::vector<BigInt>{2});

  auto neg = finiteness_scan(Rational(-5, 3), PlaceSet{}, 200, kP2);
  CHECK(neg.summary.members == std::vector<std::uint64_t>{2, 5});

  CHECK_THROWS_AS(finiteness_scan(Rational(0), PlaceSet{}, 10, kP2), DomainError);
  CHECK_THROWS_AS(finiteness_scan(Rational(-2), PlaceSet{}, 10, kP2), DomainError);
}

TEST_CASE("Q family scan rejects 0 for odd degree") {
  CHECK_THROWS_AS(finiteness_scan(Rational(0), PlaceSet{}, 10, ChebyshevMap(Family::Q, 3)), DomainError);
  auto q = finiteness_scan(Rational(1), PlaceSet{}, 30, ChebyshevMap(Family::Q, 3));
  CHECK(q.records.size() == 30);
}

TEST_CASE("property: enlarging S never shrinks the integral set") {
  const char* chain[] = {"inf", "inf,2", "inf,2,3", "inf,2,3,5,7,11,13"};
  for (const Rational& alpha : {Rational(3), Rational(1, 2), Rational(-5, 3), Rational(7, 4)}) {
    std::vector<std::uint64_t> prev;
    for (const char* s : chain) {
      auto members = finiteness_scan(alpha, PlaceSet::parse(s), 150, kP2).summary.members;
      CHECK(includes(members, prev));
      prev = members;
    }
  }
}

TEST_CASE("property: degree-one verdicts match the definition") {
  // beta in {2, -2, -1, 0, 1}: beta - alpha = (beta w - u)/w and only
  // primes of beta w - u not dividing w can meet outside S.
  const Rational alphas[] = {Rational(3), Rational(1, 2), Rational(-5, 3), Rational(7, 4), Rational(10),
                             Rational(-9, 8)};
  const char* sets[] = {"inf", "inf,2", "inf,3", "inf,5,7"};
  for (std::uint64_t N : {1, 2, 3, 4, 6}) {
    const auto point = PreperiodicPoint::make(Family::P, N, 1);
    const long beta = std::lround(point.value().real());
    for (const auto& alpha : alphas) {
      for (const char* s : sets) {
        const auto S = PlaceSet::parse(s);
        const BigInt diff = BigInt(beta) * alpha.den() - alpha.num();
        bool integral = true;
        for (const auto& p : factorize(diff).primes()) {
          if (!S.contains(p) && alpha.den() % p != 0) integral = false;
        }
        CHECK(is_s_integral(point, alpha, S).verdict == integral);
      }
    }
  }
}

TEST_CASE("property: Galois-conjugate representatives give the same certificate") {
  for (std::uint64_t N : {5, 7, 12, 15, 30}) {
    const auto orbit = galois_orbit(Family::P, N);
    for (auto a : orbit.representatives) {
      const auto x = is_s_integral(PreperiodicPoint::make(Family::P, N, static_cast<std::int64_t>(a)), Rational(3),
                                   PlaceSet{});
      const auto y = is_s_integral(PreperiodicPoint::make(Family::P, N, static_cast<std::int64_t>(N - a)),
                                   Rational(3), PlaceSet{});
      CHECK(x.resultant_integer == y.resultant_integer);
      CHECK(x.verdict == y.verdict);
    }
  }
}

TEST_CASE("property: cumulative count stabilizes on the second half of the scan") {
  for (const Rational& alpha : {Rational(3), Rational(1, 2), Rational(-5, 3)}) {
    auto res = finiteness_scan(alpha, PlaceSet{}, 200, kP2);
    const auto& cum = res.summary.cumulative;
    CHECK(cum[99] == cum.back());
  }
}
