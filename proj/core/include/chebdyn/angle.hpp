#pragma once

/**
 * Certified enclosures of t = arccos(x) / (2 pi) for rational x in [-1, 1],
 * used to place a/N relative to arccos endpoints without rounding doubt.
 */

#include <cstdint>
#include <optional>

#include "chebdyn/rational.hpp"

namespace chebdyn {

// t exactly, when x is one of -1, -1/2, 0, 1/2, 1 (t = 1/2, 1/3, 1/4, 1/6, 0).
std::optional<Rational> exact_turn(const Rational& x);

// Sign of a - N*t, certified. Precision starts at 64 bits and doubles up to
// max_bits; returns nullopt if still undecided (a genuine tie, or t
// rational but not in the exact table).
std::optional<int> compare_to_scaled_turn(const BigInt& a, std::uint64_t N, const Rational& x,
                                          unsigned max_bits = 4096);

// Smallest integer k with k >= N*t; nullopt if undecidable at max_bits.
std::optional<BigInt> ceil_scaled_turn(std::uint64_t N, const Rational& x, unsigned max_bits = 4096);

// |a/N - t| as a double, evaluated at 256 bits.
double turn_gap(const BigInt& a, std::uint64_t N, const Rational& x);

// t rounded to double.
double turn_value(const Rational& x);

}  // namespace chebdyn
