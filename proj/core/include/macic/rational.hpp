#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace macic {

/// Exact rational scalar used by all polytope algebra.
using Rational = mpq_class;

/// Denominator exponent used when real-valued set functions enter polytope
/// algebra: values are rounded to the nearest multiple of 2^-40.
inline constexpr int kDyadicBits = 40;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

/// Accepts "p/q", integers, and finite decimals ("0.25", "-1.5e-3").
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Nearest multiple of 2^-bits. Throws std::invalid_argument for non-finite input.
Rational dyadic_round(double value, int bits = kDyadicBits);

Rational abs(const Rational& value);

/// num/den in canonical form. Throws std::invalid_argument for den == 0.
Rational make_rational(long num, long den);

/// Divides every entry (and the optional extra scalar) by the absolute value of
/// the largest-magnitude entry; leaves an all-zero vector untouched.
void normalize_max_abs(std::span<Rational> values, Rational* extra = nullptr);

std::vector<Rational> to_rationals(std::span<const double> values, int bits = kDyadicBits);

}  // namespace macic
