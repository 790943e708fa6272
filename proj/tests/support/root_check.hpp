#pragma once

// Exact sign-change certificate that a polynomial has a root within
// 2^-40 * spread of a float guess.

#include <cmath>

#include "chebdyn/polynomial.hpp"

namespace chebdyn::testing {

inline bool brackets_root(const IntPolynomial& f, double guess, long spread = 100) {
  const double scale = std::ldexp(1.0, 40);
  const BigInt w = BigInt(1) << 40;
  const BigInt centre(static_cast<double>(std::llround(guess * scale)));
  const int lo = sgn(f.eval_homogeneous(centre - spread, w));
  const int hi = sgn(f.eval_homogeneous(centre + spread, w));
  return lo != 0 && hi != 0 && lo != hi;
}

}  // namespace chebdyn::testing
