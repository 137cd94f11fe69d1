#include "bcf/rational.hpp"

#include <algorithm>
#include <cctype>

#include "bcf/error.hpp"

namespace bcf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const Rational& x, std::size_t digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational mag = abs(x) * scale + Rational(1, 2);
  Integer n = floor_of(mag);
  std::string body = n.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = (sgn(x) < 0 && n != 0) ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - digits);
  }
  return out;
}

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError(offset + i, "expected digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError(offset + j, "unexpected character '" + std::string(1, text[j]) + "' in integer");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text, std::size_t offset) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, offset));
  Integer num = parse_integer(text.substr(0, slash), offset);
  Integer den = parse_integer(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw ParseError(offset + slash + 1, "zero denominator");
  return make_rational(num, den);
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi, via continued fractions.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (fl + 1 <= hi) return Rational(fl + 1);
  // Both in (fl, fl + 1): recurse on reciprocals of the fractional parts.
  Rational inner = simplest_nonneg(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = std::min(lo_in, hi_in);
  Rational hi = std::max(lo_in, hi_in);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

std::size_t hash_value(const Integer& x) noexcept {
  std::size_t seed = static_cast<std::size_t>(sgn(x) + 1);
  const std::size_t limbs = mpz_size(x.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), i)));
  }
  return seed;
}

std::size_t hash_value(const Rational& x) noexcept {
  std::size_t seed = hash_value(x.get_num());
  hash_combine(seed, hash_value(x.get_den()));
  return seed;
}

}  // namespace bcf
