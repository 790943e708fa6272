#include "chebdyn/polynomial.hpp"

#include <stdexcept>

#include "chebdyn/error.hpp"

namespace chebdyn {
namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long c : coefficients) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return c_.back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k);
  out.insert(out.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::exact_quotient(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw DomainError("inexact polynomial division");
  std::vector<BigInt> rem = c_;
  const auto dn = static_cast<std::size_t>(divisor.degree());
  const BigInt& lead = divisor.leading();
  std::vector<BigInt> quot(rem.size() - dn);
  BigInt q;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dn];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw DomainError("inexact polynomial division");
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dn; ++j) {
      if (sgn(divisor.c_[j]) != 0) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), divisor.c_[j].get_mpz_t());
    }
    quot[k] = q;
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (sgn(rem[j]) != 0) throw DomainError("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

Rational IntPolynomial::operator()(const Rational& z) const {
  BigInt den_pow;
  BigInt value = eval_homogeneous(z.num(), z.den());
  if (c_.empty()) return Rational();
  mpz_pow_ui(den_pow.get_mpz_t(), z.raw().get_den_mpz_t(), c_.size() - 1);
  return Rational(value, den_pow);
}

BigInt IntPolynomial::eval_homogeneous(const BigInt& u, const BigInt& w) const {
  if (c_.empty()) return 0;
  BigInt acc = c_.back();
  BigInt w_pow = 1;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    acc *= u;
    w_pow *= w;
    if (sgn(c_[k]) != 0) mpz_addmul(acc.get_mpz_t(), c_[k].get_mpz_t(), w_pow.get_mpz_t());
  }
  return acc;
}

double IntPolynomial::eval(double z) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::complex<double> IntPolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigInt& c = c_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = ::abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace chebdyn
