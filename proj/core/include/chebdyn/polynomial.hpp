#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "chebdyn/rational.hpp"

namespace chebdyn {

// Dense univariate polynomial over Z, constant term first. The zero
// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& coeff(std::size_t k) const;
  const BigInt& leading() const;
  std::span<const BigInt> coefficients() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& k);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& k) { return a *= k; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // this(inner(z))
  IntPolynomial compose(const IntPolynomial& inner) const;
  IntPolynomial derivative() const;
  // Multiplies by z^k.
  IntPolynomial shifted(std::size_t k) const;

  // Quotient of an exact division in Z[z]; throws DomainError if the
  // divisor does not divide this polynomial.
  IntPolynomial exact_quotient(const IntPolynomial& divisor) const;

  Rational operator()(const Rational& z) const;
  // w^deg * f(u/w), an integer; Horner in homogeneous form.
  BigInt eval_homogeneous(const BigInt& u, const BigInt& w) const;
  double eval(double z) const;
  std::complex<double> eval(std::complex<double> z) const;

  // "z^3 - 3*z"
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace chebdyn
