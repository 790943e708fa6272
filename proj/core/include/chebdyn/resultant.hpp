#pragma once

/**
 * Resultants as Sylvester determinants, evaluated by fraction-free
 * (Bareiss) elimination. Works over Z and over Z[w]; the latter gives
 * Res_x(f(x), g(x, w)) as a polynomial in w.
 */

#include <vector>

#include "chebdyn/polynomial.hpp"

namespace chebdyn {

// Bareiss determinant of a square matrix over Z. The matrix is consumed.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);
// Same over Z[w].
IntPolynomial bareiss_determinant(std::vector<std::vector<IntPolynomial>> m);

// Res(f, g) over Z, standard sign convention: det Syl(f, g) with the
// deg(g) rows of f first. Both inputs must be nonzero.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

// f and g given as polynomials in x with coefficients in Z[w]
// (constant-in-x first). Returns Res_x(f, g) in Z[w].
IntPolynomial resultant_x(const std::vector<IntPolynomial>& f, const std::vector<IntPolynomial>& g);

}  // namespace chebdyn
