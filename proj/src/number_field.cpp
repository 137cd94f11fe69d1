#include "bcf/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "bcf/error.hpp"

namespace bcf {

namespace {

bool is_perfect_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::string endpoint_literal(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

}  // namespace

NumberField::NumberField(Polynomial min_poly, Rational lo, Rational hi)
    : min_poly_(std::move(min_poly)), modulus_(min_poly_.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_lo_ = min_poly_.sign_at(lo_);
}

std::shared_ptr<const NumberField> NumberField::create(const std::vector<Integer>& coeffs_high_first,
                                                       const Rational& lo, const Rational& hi) {
  Polynomial p = Polynomial::from_high_first(coeffs_high_first);
  if (p.degree() < 1 || p.degree() > 3) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "minimal polynomial must have degree 1, 2 or 3 (got " + std::to_string(p.degree()) + ")");
  }
  p = p.primitive();
  if (p.degree() == 2) {
    Integer a = p.coeff(2).get_num(), b = p.coeff(1).get_num(), c = p.coeff(0).get_num();
    if (is_perfect_square(b * b - 4 * a * c)) {
      throw Error(ErrorKind::ReduciblePolynomial, p.to_string() + " has a square discriminant");
    }
  } else if (p.degree() == 3) {
    auto roots = rational_roots(p);
    if (!roots.empty()) {
      throw Error(ErrorKind::ReduciblePolynomial, p.to_string() + " has the rational root " + roots.front().get_str());
    }
  }
  if (!(lo < hi)) throw Error(ErrorKind::RootCountNotOne, "isolating interval is empty");
  int s_lo = p.sign_at(lo), s_hi = p.sign_at(hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
    throw Error(ErrorKind::RootCountNotOne,
                p.to_string() + " does not change sign strictly across (" + lo.get_str() + ", " + hi.get_str() + ")");
  }
  int n = count_roots(p, lo, hi);
  if (n != 1) {
    throw Error(ErrorKind::RootCountNotOne, p.to_string() + " has " + std::to_string(n) + " roots in (" +
                                                lo.get_str() + ", " + hi.get_str() + ")");
  }
  return std::shared_ptr<const NumberField>(new NumberField(std::move(p), lo, hi));
}

const std::shared_ptr<const NumberField>& NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q = create({Integer(1), Integer(0)}, Rational(-1), Rational(1));
  return q;
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (!(min_poly_ == other.min_poly_)) return false;
  if (degree() == 1) return true;
  Rational lo = std::max(lo_, other.lo_), hi = std::min(hi_, other.hi_);
  return lo < hi && count_roots(min_poly_, lo, hi) == 1;
}

std::string NumberField::literal() const {
  std::ostringstream os;
  os << "alg:";
  auto coeffs = min_poly_.integer_coeffs_high_first();
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i].get_str();
  os << '@' << endpoint_literal(lo_) << ',' << endpoint_literal(hi_);
  return os.str();
}

void RootBracket::halve(const NumberField& field) {
  Rational mid = (lo + hi) / 2;
  int s = field.min_poly().sign_at(mid);
  if (s == 0) {
    lo = hi = mid;
  } else if (s == field.sign_at_lo()) {
    lo = std::move(mid);
  } else {
    hi = std::move(mid);
  }
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const Polynomial& poly) : field_(std::move(field)) {
  Polynomial reduced = poly.degree() >= field_->degree() ? poly % field_->modulus() : poly;
  coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  for (std::size_t i = 0; i < reduced.coeffs().size(); ++i) coeffs_[i] = reduced.coeffs()[i];
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : AlgebraicNumber(std::move(field), Polynomial(std::move(coeffs))) {}

AlgebraicNumber AlgebraicNumber::from_rational(FieldPtr field, const Rational& value) {
  return AlgebraicNumber(std::move(field), Polynomial::constant(value));
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) {
  return AlgebraicNumber(std::move(field), Polynomial::x());
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& value) {
  return from_rational(NumberField::rationals(), value);
}

bool AlgebraicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

AlgebraicNumber AlgebraicNumber::embed_in(const FieldPtr& target) const {
  if (field_ == target || field_->same_as(*target)) return AlgebraicNumber(target, coeffs_);
  if (is_rational()) return from_rational(target, coeffs_[0]);
  throw Error(ErrorKind::FieldMismatch, "cannot embed " + to_string() + " from " + field_->literal() + " into " +
                                            target->literal());
}

std::string AlgebraicNumber::to_string(const std::string& var) const {
  if (is_rational()) return to_fraction_string(coeffs_[0]);
  return as_polynomial().to_string(var);
}

std::size_t AlgebraicNumber::hash() const noexcept {
  std::size_t seed = coeffs_.size();
  for (const auto& c : coeffs_) hash_combine(seed, hash_value(c));
  return seed;
}

FieldPtr common_field(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  const FieldPtr& fx = x.field();
  const FieldPtr& fy = y.field();
  if (fx == fy || fx->same_as(*fy)) return fx;
  if (x.is_rational()) return fy;
  if (y.is_rational()) return fx;
  throw Error(ErrorKind::FieldMismatch, "operands live in different fields: " + fx->literal() + " and " +
                                            fy->literal());
}

AlgebraicNumber field_op(const AlgebraicNumber& x, const AlgebraicNumber& y, FieldOp op) {
  FieldPtr f = common_field(x, y);
  Polynomial px = x.embed_in(f).as_polynomial();
  Polynomial py = y.embed_in(f).as_polynomial();
  switch (op) {
    case FieldOp::Add: return AlgebraicNumber(f, px + py);
    case FieldOp::Sub: return AlgebraicNumber(f, px - py);
    case FieldOp::Mul: return AlgebraicNumber(f, px * py);
    case FieldOp::Div: {
      if (py.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in " + f->literal());
      // Irreducible modulus: gcd(py, m) = 1 and s * py == 1 (mod m).
      ExtendedGcd eg = extended_gcd(py, f->modulus());
      return AlgebraicNumber(f, px * eg.s);
    }
  }
  return x;
}

AlgebraicNumber operator+(const AlgebraicNumber& x, const AlgebraicNumber& y) { return field_op(x, y, FieldOp::Add); }
AlgebraicNumber operator-(const AlgebraicNumber& x, const AlgebraicNumber& y) { return field_op(x, y, FieldOp::Sub); }
AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y) { return field_op(x, y, FieldOp::Mul); }
AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y) { return field_op(x, y, FieldOp::Div); }

AlgebraicNumber operator-(const AlgebraicNumber& x) { return AlgebraicNumber(x.field_, -x.as_polynomial()); }

bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (x.field_ != y.field_ && !x.field_->same_as(*y.field_)) {
    // Rationals compare by value across fields.
    return x.is_rational() && y.is_rational() && x.coeffs_[0] == y.coeffs_[0];
  }
  return x.coeffs_ == y.coeffs_;
}

AlgebraicNumber operator+(const AlgebraicNumber& x, const Rational& r) {
  return x + AlgebraicNumber::from_rational(x.field(), r);
}
AlgebraicNumber operator-(const AlgebraicNumber& x, const Rational& r) {
  return x - AlgebraicNumber::from_rational(x.field(), r);
}
AlgebraicNumber operator*(const Rational& r, const AlgebraicNumber& x) {
  return AlgebraicNumber::from_rational(x.field(), r) * x;
}

std::pair<Rational, Rational> enclose(const AlgebraicNumber& x, const Rational& max_width, RootBracket* hint) {
  if (auto r = x.as_rational()) return {*r, *r};
  const NumberField& f = *x.field();
  RootBracket local = RootBracket::of(f);
  RootBracket& b = hint ? *hint : local;
  Polynomial p = x.as_polynomial();
  while (true) {
    auto enc = enclose(p, b.lo, b.hi);
    if (enc.second - enc.first <= max_width) return enc;
    b.halve(f);
  }
}

int sign(const AlgebraicNumber& x, RootBracket* hint) {
  if (auto r = x.as_rational()) return sgn(*r);
  // Irrational: x != 0, so the enclosure eventually excludes zero.
  const NumberField& f = *x.field();
  RootBracket local = RootBracket::of(f);
  RootBracket& b = hint ? *hint : local;
  Polynomial p = x.as_polynomial();
  while (true) {
    auto [lo, hi] = enclose(p, b.lo, b.hi);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    b.halve(f);
  }
}

int compare(const AlgebraicNumber& x, const AlgebraicNumber& y, RootBracket* hint) { return sign(x - y, hint); }

Integer floor_of(const AlgebraicNumber& x, RootBracket* hint) {
  if (auto r = x.as_rational()) return floor_of(*r);
  const NumberField& f = *x.field();
  RootBracket local = RootBracket::of(f);
  RootBracket& b = hint ? *hint : local;
  Polynomial p = x.as_polynomial();
  while (true) {
    auto [lo, hi] = enclose(p, b.lo, b.hi);
    Integer m = floor_of(lo);
    if (floor_of(hi) == m) return m;
    b.halve(f);
  }
}

Approximation approximate(const AlgebraicNumber& x, std::size_t digits) {
  if (digits == 0) throw Error(ErrorKind::Usage, "approximate needs at least one digit");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // Enclosure width <= 10^-d / 2 keeps |decimal - x| <= 10^-d / 4 + 10^-d / 2.
  auto [lo, hi] = enclose(x, Rational(1) / (2 * scale));
  Rational mid = (lo + hi) / 2;
  return {to_decimal(mid, digits), lo, hi, digits};
}

}  // namespace bcf
