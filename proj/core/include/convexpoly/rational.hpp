#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar type and bit-length accounting.
 *
 * All arithmetic in this library is exact. Rationals are GMP-backed and kept
 * canonical (lowest terms, positive denominator) by the backend, so the bit
 * length of a value is well defined: bl(p/q) = bl(p) + bl(q) with
 * bl(k) = max{1, ceil(log2 |k|)} for integers.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace convexpoly {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using RatVector = std::vector<Rational>;

/// bl(k) = max{1, ceil(log2 |k|)}; bl(0) = 1.
std::size_t bit_length(const Integer& k);

/// bl(p/q) = bl(p) + bl(q) for a canonical fraction.
std::size_t bit_length(const Rational& r);

/// Exact base^exp by repeated squaring (exp >= 0).
Integer int_pow(const Integer& base, unsigned exp);
Rational rat_pow(const Rational& base, unsigned exp);

/// -1, 0, or +1.
int sign_of(const Rational& r);

/// Floor division for integers (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

Integer floor_rat(const Rational& r);
Integer ceil_rat(const Rational& r);

/// Nearest integer, ties rounded up; deterministic.
Integer round_rat(const Rational& r);

/**
 * Rounds x to a dyadic rational with the given number of mantissa bits,
 * i.e. to the nearest m * 2^e with |m| < 2^bits. Relative error is at most
 * 2^(1-bits). Zero maps to zero.
 */
Rational round_to_dyadic(const Rational& x, unsigned mantissa_bits);

/// Parses "p/q", "p", or a decimal integer string with optional sign. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// "p/q" when the denominator is not 1, otherwise just "p".
std::string to_fraction_string(const Rational& r);

/// Decimal approximation with the given number of significant digits,
/// round-half-up, plain notation with a fixed point (no exponent field).
std::string to_decimal_string(const Rational& r, unsigned significant_digits = 20);

}  // namespace convexpoly
