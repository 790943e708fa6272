#include "chebdyn/rational.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "chebdyn/error.hpp"

namespace chebdyn {

double log_abs(const BigInt& n) {
  if (sgn(n) == 0) throw DomainError("log of zero");
  long exp2 = 0;
  double mant = std::fabs(mpz_get_d_2exp(&exp2, n.get_mpz_t()));
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  BigInt out;
  out.set_str(s, 10);
  return out;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("sign belongs on the numerator: '" + std::string(text) + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value");
  Rational r;
  r.value_ = mpq_class(x);
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace chebdyn
