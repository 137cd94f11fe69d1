#include "bcf/approx.hpp"

#include <cmath>

#include "bcf/error.hpp"

namespace bcf {

namespace {

mp_bitcnt_t bits_for(const ApproxOptions& o) {
  return static_cast<mp_bitcnt_t>(std::ceil(static_cast<double>(o.digits + o.guard) * 3.3219280948873623)) + 16;
}

mpf_class power_of_ten(long exponent, mp_bitcnt_t bits) {
  mpf_class ten(10, bits), out(1, bits);
  mpf_class step = exponent < 0 ? mpf_class(1, bits) / ten : ten;
  for (long i = 0; i < std::labs(exponent); ++i) out *= step;
  return out;
}

ApproxValue from_exact(const AlgebraicNumber& x, const ApproxOptions& o, mp_bitcnt_t bits) {
  auto ap = approximate(x, o.digits + o.guard);
  return {mpf_class(ap.decimal, bits), power_of_ten(-static_cast<long>(o.digits + o.guard), bits)};
}

ApproxValue from_decimal(const std::string& text, mp_bitcnt_t bits) {
  std::size_t dot = text.find('.');
  long places = dot == std::string::npos ? 0 : static_cast<long>(text.size() - dot - 1);
  return {mpf_class(text, bits), power_of_ten(-places, bits) / 2};
}

mpf_class eval(const Polynomial& p, const mpf_class& x, mp_bitcnt_t bits) {
  mpf_class acc(0, bits);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + mpf_class(p.coeff(static_cast<std::size_t>(i)), bits);
  return acc;
}

mpf_class ratfunc_at(const RationalFunction& f, const mpf_class& x, mp_bitcnt_t bits) {
  mpf_class d = eval(f.den, x, bits);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator of " + f.literal() + " vanishes");
  return eval(f.num, x, bits) / d;
}

std::string to_decimal_string(const mpf_class& x, std::size_t digits) { return to_decimal(mpq_class(x), digits); }

}  // namespace

std::pair<ApproxValue, ApproxValue> approximate_pair(const NumberSpec& alpha, const NumberSpec& beta,
                                                     const ApproxOptions& options) {
  mp_bitcnt_t bits = bits_for(options);
  auto single = [&](const NumberSpec& s) {
    if (s.kind == LiteralKind::Dec) return from_decimal(s.decimal, bits);
    return from_exact(*s.value, options, bits);
  };
  if (alpha.kind == LiteralKind::RatFunc) throw Error(ErrorKind::Usage, "ratfunc literals are only allowed for beta");
  ApproxValue a = single(alpha);
  if (beta.kind != LiteralKind::RatFunc) return {a, single(beta)};
  if (alpha.kind != LiteralKind::Dec) {
    return {a, from_exact((*beta.function)(*alpha.value), options, bits)};
  }
  // Spread of the function over [alpha - e, alpha + e].
  mpf_class mid = ratfunc_at(*beta.function, a.value, bits);
  mpf_class lo = ratfunc_at(*beta.function, a.value - a.error, bits);
  mpf_class hi = ratfunc_at(*beta.function, a.value + a.error, bits);
  mpf_class spread = abs(lo - mid);
  if (abs(hi - mid) > spread) spread = abs(hi - mid);
  return {a, {mid, spread * 2}};
}

ApproxExpansion approx_expand(const ApproxValue& alpha, const ApproxValue& beta, const ApproxOptions& options) {
  mp_bitcnt_t bits = bits_for(options);
  ApproxExpansion out;
  out.digits = options.digits;
  out.guard = options.guard;
  if (alpha.value <= 0 || beta.value <= 0) throw Error(ErrorKind::NonPositiveInput, "alpha and beta must be positive");
  const mpf_class ulp = power_of_ten(-static_cast<long>(options.digits + options.guard), bits);
  mpf_class x(alpha.value, bits), y(beta.value, bits), ex(alpha.error, bits), ey(beta.error, bits);
  for (std::size_t i = 0; i < options.max_terms; ++i) {
    mpf_class fy = floor(y);
    mpf_class f = y - fy;
    if (1 - f <= ey) {
      out.precision_exhausted = true;
      return out;
    }
    if (f <= ey) {
      out.b.emplace_back(fy);
      out.terminated = true;
      out.terminal = to_decimal_string(x, options.digits);
      return out;
    }
    mpf_class fx = floor(x);
    mpf_class g = x - fx;
    if (g <= ex || 1 - g <= ex) {
      out.precision_exhausted = true;
      return out;
    }
    out.a.emplace_back(fx);
    out.b.emplace_back(fy);
    mpf_class denom = f - ey;
    mpf_class nx = 1 / f;
    mpf_class ny = g / f;
    mpf_class nex = ey / (f * denom) + ulp * nx;
    mpf_class ney = ex / denom + g * ey / (f * denom) + ulp * ny;
    x = nx;
    y = ny;
    ex = nex;
    ey = ney;
  }
  return out;
}

}  // namespace bcf
