#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcf/polynomial.hpp"
#include "bcf/rational.hpp"

namespace bcf {

/// Q(theta) for theta the unique real root of an irreducible integer
/// polynomial of degree 1..3 inside an open rational interval.
///
/// Construct through create(); the constructor validates irreducibility and
/// certifies the isolating interval (sign change at the endpoints plus a Sturm
/// count of exactly one). Degree-1 fields stand for Q itself.
class NumberField {
 public:
  /// Throws DegreeOutOfRange, ReduciblePolynomial or RootCountNotOne.
  static std::shared_ptr<const NumberField> create(const std::vector<Integer>& coeffs_high_first,
                                                   const Rational& lo, const Rational& hi);

  /// Q, presented as the root of x in (-1, 1).
  static const std::shared_ptr<const NumberField>& rationals();

  int degree() const { return min_poly_.degree(); }
  /// Primitive integer polynomial with positive leading coefficient.
  const Polynomial& min_poly() const { return min_poly_; }
  /// Monic version of min_poly(); multiplication reduces modulo this.
  const Polynomial& modulus() const { return modulus_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  int sign_at_lo() const { return sign_lo_; }

  /// Same polynomial and the same designated real root.
  bool same_as(const NumberField& other) const;

  /// Literal form `alg:c_d,...,c_0@lo,hi`.
  std::string literal() const;

 private:
  NumberField(Polynomial min_poly, Rational lo, Rational hi);

  Polynomial min_poly_;
  Polynomial modulus_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// A shrinking isolating interval for a field's generator. Callers that need
/// many sign decisions in one field carry one of these so refinement work is
/// reused; it never needs to be shared between threads.
struct RootBracket {
  Rational lo;
  Rational hi;

  static RootBracket of(const NumberField& field) { return {field.lo(), field.hi()}; }
  /// One bisection step.
  void halve(const NumberField& field);
};

/// c_0 + c_1 theta + ... + c_{d-1} theta^{d-1}, always reduced.
class AlgebraicNumber {
 public:
  /// `coeffs` is reduced modulo the minimal polynomial and zero-padded to the field degree.
  AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs);
  AlgebraicNumber(FieldPtr field, const Polynomial& poly);

  static AlgebraicNumber from_rational(FieldPtr field, const Rational& value);
  static AlgebraicNumber generator(FieldPtr field);
  /// An element of Q.
  static AlgebraicNumber rational(const Rational& value);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Polynomial as_polynomial() const { return Polynomial(coeffs_); }

  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  bool is_zero() const;

  /// Same element in `target`, when this element is rational (or already lives there).
  AlgebraicNumber embed_in(const FieldPtr& target) const;

  /// "p/q" for rationals, otherwise a polynomial in `var`.
  std::string to_string(const std::string& var = "t") const;

  std::size_t hash() const noexcept;

  friend AlgebraicNumber operator+(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator-(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator-(const AlgebraicNumber& x);
  friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y);

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

AlgebraicNumber operator+(const AlgebraicNumber& x, const Rational& r);
AlgebraicNumber operator-(const AlgebraicNumber& x, const Rational& r);
AlgebraicNumber operator*(const Rational& r, const AlgebraicNumber& x);

struct AlgebraicNumberHash {
  std::size_t operator()(const AlgebraicNumber& x) const noexcept { return x.hash(); }
};

enum class FieldOp { Add, Sub, Mul, Div };

/// Exact arithmetic; throws FieldMismatch or DivisionByZero.
AlgebraicNumber field_op(const AlgebraicNumber& x, const AlgebraicNumber& y, FieldOp op);

/// Common field of two numbers: rationals embed into the other operand's
/// field. Throws FieldMismatch for two genuinely different fields.
FieldPtr common_field(const AlgebraicNumber& x, const AlgebraicNumber& y);

/// Interval [lo, hi] containing x with hi - lo <= max_width.
std::pair<Rational, Rational> enclose(const AlgebraicNumber& x, const Rational& max_width,
                                      RootBracket* hint = nullptr);

int sign(const AlgebraicNumber& x, RootBracket* hint = nullptr);
/// sign(x - y).
int compare(const AlgebraicNumber& x, const AlgebraicNumber& y, RootBracket* hint = nullptr);

/// The integer m with m <= x < m + 1, decided by exact sign evaluation.
Integer floor_of(const AlgebraicNumber& x, RootBracket* hint = nullptr);

struct Approximation {
  std::string decimal;     // rounded to `digits` fractional digits
  Rational lo;             // certified enclosure of the exact value
  Rational hi;
  std::size_t digits = 0;  // |decimal - x| < 10^-digits
};

/// Requires digits >= 1.
Approximation approximate(const AlgebraicNumber& x, std::size_t digits);

}  // namespace bcf
