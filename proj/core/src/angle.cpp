#include "chebdyn/angle.hpp"

#include <mpfr.h>

#include "chebdyn/error.hpp"

namespace chebdyn {
namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void require_unit_range(const Rational& x) {
  if (x < Rational(-1) || x > Rational(1)) throw DomainError("arccos argument " + x.to_string() + " outside [-1, 1]");
}

// [lo, hi] containing N * arccos(x) / (2 pi).
void scaled_turn_enclosure(std::uint64_t N, const Rational& x, mpfr_prec_t prec, Mpfr& lo, Mpfr& hi) {
  Mpfr x_lo(prec), x_hi(prec), pi_lo(prec), pi_hi(prec);
  mpfr_set_q(x_lo.get(), x.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x_hi.get(), x.raw().get_mpq_t(), MPFR_RNDU);
  // arccos is decreasing.
  mpfr_acos(lo.get(), x_hi.get(), MPFR_RNDD);
  mpfr_acos(hi.get(), x_lo.get(), MPFR_RNDU);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(pi_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
  mpfr_mul_2ui(pi_hi.get(), pi_hi.get(), 1, MPFR_RNDU);
  mpfr_div(lo.get(), lo.get(), pi_hi.get(), MPFR_RNDD);
  mpfr_div(hi.get(), hi.get(), pi_lo.get(), MPFR_RNDU);
  mpfr_mul_ui(lo.get(), lo.get(), N, MPFR_RNDD);
  mpfr_mul_ui(hi.get(), hi.get(), N, MPFR_RNDU);
}

BigInt rational_ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return q;
}

}  // namespace

std::optional<Rational> exact_turn(const Rational& x) {
  if (x == Rational(-1)) return Rational(1, 2);
  if (x == Rational(-1, 2)) return Rational(1, 3);
  if (x == Rational(0)) return Rational(1, 4);
  if (x == Rational(1, 2)) return Rational(1, 6);
  if (x == Rational(1)) return Rational(0);
  return std::nullopt;
}

std::optional<int> compare_to_scaled_turn(const BigInt& a, std::uint64_t N, const Rational& x, unsigned max_bits) {
  require_unit_range(x);
  if (auto t = exact_turn(x)) {
    const Rational diff = Rational(a) - Rational(BigInt(N)) * *t;
    return diff.sign();
  }
  for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(max_bits); prec *= 2) {
    Mpfr lo(prec), hi(prec);
    scaled_turn_enclosure(N, x, prec, lo, hi);
    if (mpfr_cmp_z(lo.get(), a.get_mpz_t()) > 0) return -1;
    if (mpfr_cmp_z(hi.get(), a.get_mpz_t()) < 0) return 1;
  }
  return std::nullopt;
}

std::optional<BigInt> ceil_scaled_turn(std::uint64_t N, const Rational& x, unsigned max_bits) {
  require_unit_range(x);
  if (auto t = exact_turn(x)) return rational_ceil(Rational(BigInt(N)) * *t);
  for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(max_bits); prec *= 2) {
    Mpfr lo(prec), hi(prec);
    scaled_turn_enclosure(N, x, prec, lo, hi);
    BigInt k_lo, k_hi;
    mpfr_get_z(k_lo.get_mpz_t(), lo.get(), MPFR_RNDU);
    mpfr_get_z(k_hi.get_mpz_t(), hi.get(), MPFR_RNDU);
    if (k_lo == k_hi) return k_lo;
  }
  return std::nullopt;
}

double turn_gap(const BigInt& a, std::uint64_t N, const Rational& x) {
  require_unit_range(x);
  constexpr mpfr_prec_t prec = 256;
  Mpfr t(prec), pi(prec), xv(prec), diff(prec);
  mpfr_set_q(xv.get(), x.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_acos(t.get(), xv.get(), MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(pi.get(), pi.get(), 1, MPFR_RNDN);
  mpfr_div(t.get(), t.get(), pi.get(), MPFR_RNDN);
  mpfr_mul_ui(t.get(), t.get(), N, MPFR_RNDN);
  mpfr_sub_z(diff.get(), t.get(), a.get_mpz_t(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  mpfr_div_ui(diff.get(), diff.get(), N, MPFR_RNDN);
  return mpfr_get_d(diff.get(), MPFR_RNDN);
}

double turn_value(const Rational& x) { return turn_gap(0, 1, x); }

}  // namespace chebdyn
