#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bcf {

using Integer = mpz_class;
/// Always kept canonical: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;

/// Throws DivisionByZero when `den` is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Largest integer m with m <= x.
Integer floor_of(const Rational& x);

bool is_integer(const Rational& x);

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// "p/q" with q >= 1, including for integers ("2/1").
std::string to_fraction_string(const Rational& x);

/// Decimal rendering rounded half away from zero to exactly `digits` fractional digits.
std::string to_decimal(const Rational& x, std::size_t digits);

/// Parses a signed decimal integer; `offset` is added to error positions.
Integer parse_integer(std::string_view text, std::size_t offset = 0);

/// Parses "p", "p/q", or "-p/q".
Rational parse_rational(std::string_view text, std::size_t offset = 0);

/// The rational with the smallest denominator in the closed interval [lo, hi].
/// Ties on the denominator go to the smallest absolute numerator.
Rational simplest_between(const Rational& lo, const Rational& hi);

std::size_t hash_value(const Integer& x) noexcept;
std::size_t hash_value(const Rational& x) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace bcf
