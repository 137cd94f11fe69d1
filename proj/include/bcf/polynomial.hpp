#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bcf/rational.hpp"

namespace bcf {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first
/// and trimmed so the leading coefficient is nonzero. The zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> low_first);
  Polynomial(std::initializer_list<Rational> low_first);

  static Polynomial from_high_first(const std::vector<Integer>& coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero for indices past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }
  Polynomial derivative() const;
  Polynomial monic() const;

  /// Scaled by a positive rational so that all coefficients are coprime
  /// integers with positive leading coefficient.
  Polynomial primitive() const;
  /// Coefficients of primitive(), highest degree first.
  std::vector<Integer> integer_coeffs_high_first() const;
  bool has_integer_coeffs() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

  /// Human-readable form in `var`, e.g. "x^3 - x^2 - x - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Throws DivisionByZero when `divisor` is zero.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);
Polynomial operator%(const Polynomial& p, const Polynomial& q);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// s*p + t*q = g with g the monic gcd.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q);

Polynomial squarefree_part(const Polynomial& p);

/// Canonical Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Number of distinct real roots of `p` in the open interval (lo, hi).
int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Cauchy bound: every real root r satisfies |r| < bound.
Rational root_bound(const Polynomial& p);

/// A root of a squarefree polynomial isolated either exactly (lo == hi, a
/// rational root) or strictly inside (lo, hi) with nonzero signs of opposite
/// parity at the endpoints.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Isolates every distinct real root, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

/// Distinct rational roots, ascending. Finds them by isolating each real root
/// finely enough that at most one candidate p/q with q | lead fits, then
/// testing the simplest rational in the interval.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Shrinks an isolating interval (lo, hi) of `p` by bisection until its width
/// is at most `max_width`. `p` must change sign strictly inside.
void refine_root(const Polynomial& p, Rational& lo, Rational& hi, const Rational& max_width);

/// Interval enclosure of { p(t) : lo <= t <= hi } by interval Horner evaluation.
std::pair<Rational, Rational> enclose(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace bcf
