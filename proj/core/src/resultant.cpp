#include "chebdyn/resultant.hpp"

#include <stdexcept>
#include <utility>

#include "chebdyn/error.hpp"

namespace chebdyn {
namespace {

bool is_zero(const BigInt& a) { return sgn(a) == 0; }
bool is_zero(const IntPolynomial& a) { return a.is_zero(); }

BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) { return a.exact_quotient(b); }

template <class Ring>
Ring one();
template <>
BigInt one<BigInt>() { return 1; }
template <>
IntPolynomial one<IntPolynomial>() { return IntPolynomial{1}; }

template <class Ring>
Ring bareiss(std::vector<std::vector<Ring>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return one<Ring>();
  Ring prev = one<Ring>();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return Ring{};
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    const Ring& pivot = a[k][k];
    // With pivot == prev the update collapses to a[i][j] -= a[i][k]*a[k][j]/prev,
    // so zero entries in column k or in the pivot row leave cells untouched.
    const bool unit_step = pivot == prev;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (unit_step && is_zero(a[i][k])) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (unit_step) {
          if (is_zero(a[k][j])) continue;
          Ring t = a[i][k] * a[k][j];
          a[i][j] = a[i][j] - exact_div(t, prev);
        } else {
          Ring t = pivot * a[i][j] - a[i][k] * a[k][j];
          a[i][j] = exact_div(t, prev);
        }
      }
      a[i][k] = Ring{};
    }
    prev = a[k][k];
  }
  Ring det = a[n - 1][n - 1];
  if (negate) det = Ring{} - det;
  return det;
}

template <class Ring>
std::vector<std::vector<Ring>> sylvester(const std::vector<Ring>& f, const std::vector<Ring>& g,
                                         bool g_rows_first) {
  if (f.empty() || g.empty()) throw DomainError("resultant of a zero polynomial");
  const std::size_t df = f.size() - 1;
  const std::size_t dg = g.size() - 1;
  const std::size_t n = df + dg;
  std::vector<std::vector<Ring>> m;
  m.reserve(n);
  // Columns run from x^{n-1} down to x^0.
  auto add_rows = [&](const std::vector<Ring>& p, std::size_t count) {
    const std::size_t d = p.size() - 1;
    for (std::size_t r = 0; r < count; ++r) {
      std::vector<Ring> row(n);
      for (std::size_t i = 0; i <= d; ++i) row[r + i] = p[d - i];
      m.push_back(std::move(row));
    }
  };
  if (g_rows_first) {
    add_rows(g, df);
    add_rows(f, dg);
  } else {
    add_rows(f, dg);
    add_rows(g, df);
  }
  return m;
}

template <class Ring>
Ring resultant_impl(const std::vector<Ring>& f, const std::vector<Ring>& g) {
  const std::size_t df = f.size() - 1;
  const std::size_t dg = g.size() - 1;
  if (df + dg == 0) return one<Ring>();
  // Putting the rows of the lower-degree polynomial first keeps the early
  // pivots banded; swapping the two row blocks costs (-1)^(df*dg).
  const bool flip = dg < df;
  Ring det = bareiss(sylvester(f, g, flip));
  if (flip && (df * dg) % 2 == 1) det = Ring{} - det;
  return det;
}

}  // namespace

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) { return bareiss(std::move(m)); }
IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m) { return bareiss(std::move(m)); }

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<BigInt> fc(f.coefficients().begin(), f.coefficients().end());
  std::vector<BigInt> gc(g.coefficients().begin(), g.coefficients().end());
  return resultant_impl(fc, gc);
}

IntPolynomial resultant_x(const std::vector<IntPolynomial>& f, const std::vector<IntPolynomial>& g) {
  if (f.empty() || f.back().is_zero() || g.empty() || g.back().is_zero()) {
    throw DomainError("resultant needs nonzero leading coefficients in x");
  }
  return resultant_impl(f, g);
}

}  // namespace chebdyn
