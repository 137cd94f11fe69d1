#include <doctest.h>

#include "bcf/error.hpp"
#include "bcf/literal.hpp"
#include "bcf/number_field.hpp"
#include "bcf/polynomial.hpp"
#include "bcf/rational.hpp"
#include "support/generators.hpp"

using namespace bcf;
using namespace bcf::testing;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Usage;
}

// Independent root oracle: plain bisection on the sign of p, no Sturm chains.
Rational bisect(const Polynomial& p, Rational lo, Rational hi, const Rational& width) {
  int s = p.sign_at(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) == s) lo = mid; else hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(floor_of(Rational(7, 4)) == 1);
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(floor_of(Rational(-2)) == -2);
  CHECK(is_integer(make_rational(6, 3)));
  CHECK(to_fraction_string(Rational(2)) == "2/1");
  CHECK(to_fraction_string(make_rational(-3, 6)) == "-1/2");
  CHECK(to_decimal(Rational(3, 2), 4) == "1.5000");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(2, 3), 0) == "1");
  CHECK(parse_rational("-14/8") == Rational(-7, 4));
  CHECK(parse_integer("+12") == 12);
  CHECK(simplest_between(make_rational(31, 10), make_rational(32, 10)) == Rational(16, 5));
  CHECK(simplest_between(Rational(-1, 3), Rational(1, 3)) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  try {
    parse_rational("12/x4", 5);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("polynomial arithmetic") {
  Polynomial p = Polynomial::from_high_first({1, -1, -1, -1});
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "x^3 - x^2 - x - 1");
  CHECK(p.eval(2) == 1);
  auto dm = divmod(p, Polynomial::from_high_first({1, -1}));
  CHECK(dm.quotient * Polynomial::from_high_first({1, -1}) + dm.remainder == p);
  CHECK(dm.remainder.degree() < 1);

  Polynomial q = Polynomial::from_high_first({2, -3, 1});  // (2x - 1)(x - 1)
  CHECK(rational_roots(q) == std::vector<Rational>{Rational(1, 2), Rational(1)});
  CHECK(rational_roots(p).empty());
  CHECK(gcd(q, Polynomial::from_high_first({1, -1})) == Polynomial::from_high_first({1, -1}));

  auto eg = extended_gcd(p, Polynomial::from_high_first({1, 0, 0}));
  CHECK(eg.s * p + eg.t * Polynomial::from_high_first({1, 0, 0}) == eg.g);
  CHECK(eg.g == Polynomial::constant(1));

  Polynomial sq = q * q;
  CHECK(squarefree_part(sq) == q.monic());
  CHECK(Polynomial::from_high_first({6, 4, -2}).primitive() == Polynomial::from_high_first({3, 2, -1}));
  CHECK(Polynomial::from_high_first({-2, 4}).primitive() == Polynomial::from_high_first({1, -2}));
}

TEST_CASE("root isolation") {
  Polynomial p = Polynomial::from_high_first({1, 0, -2, 0});  // x^3 - 2x, roots -sqrt2, 0, sqrt2
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[1].exact());
  CHECK(roots[1].lo == 0);
  CHECK(count_roots(p, -2, 2) == 3);
  CHECK(count_roots(p, 0, 2) == 1);
  CHECK(count_roots(p, 1, 2) == 1);
  Rational lo = roots[2].lo, hi = roots[2].hi;
  refine_root(p, lo, hi, Rational(1, 1000));
  CHECK(hi - lo <= Rational(1, 1000));
  CHECK(lo * lo < 2);
  CHECK(hi * hi > 2);

  auto [elo, ehi] = enclose(p, 1, 2);
  CHECK(elo <= p.eval(Rational(3, 2)));
  CHECK(ehi >= p.eval(Rational(3, 2)));
}

TEST_CASE("field creation") {
  auto trib = tribonacci_field();
  CHECK(trib->degree() == 3);
  CHECK(trib->literal() == "alg:1,-1,-1,-1@1,2");

  auto ex = example_field();
  // The designated root matches an independent bisection oracle.
  Rational r = bisect(ex->min_poly(), 2, 3, Rational(1, 1000000));
  CHECK(count_roots(ex->min_poly(), 2, 3) == 1);
  CHECK(r > make_rational(21478, 10000));
  CHECK(r < make_rational(21480, 10000));

  auto q = NumberField::create({1, 0}, -1, 1);
  CHECK(q->degree() == 1);
  CHECK(NumberField::create({2, -3}, 0, 5)->degree() == 1);

  CHECK(kind_of([] { NumberField::create({1, 0, -4}, 0, 3); }) == ErrorKind::ReduciblePolynomial);
  CHECK(kind_of([] { NumberField::create({1, -1, -1, 1}, 0, 3); }) == ErrorKind::ReduciblePolynomial);
  CHECK(kind_of([] { NumberField::create({1, 0, 0, 0, -2}, 1, 2); }) == ErrorKind::DegreeOutOfRange);
  CHECK(kind_of([] { NumberField::create({5}, 0, 1); }) == ErrorKind::DegreeOutOfRange);
  CHECK(kind_of([] { NumberField::create({1, -1, -1, -1}, 2, 3); }) == ErrorKind::RootCountNotOne);
  CHECK(kind_of([] { NumberField::create({1, 0, -2}, -2, 2); }) == ErrorKind::RootCountNotOne);
}

TEST_CASE("field arithmetic examples") {
  auto f = tribonacci_field();
  auto t = AlgebraicNumber::generator(f);
  CHECK(t * t * t == t * t + t + AlgebraicNumber::from_rational(f, 1));
  CHECK((t * t * t).coeffs() == std::vector<Rational>{1, 1, 1});
  auto inv = AlgebraicNumber::from_rational(f, 1) / t;
  CHECK(inv == t * t - t - Rational(1));
  CHECK(t + AlgebraicNumber::from_rational(f, 0) == t);
  CHECK(t * AlgebraicNumber::from_rational(f, 1) == t);
  CHECK_THROWS_AS(t / AlgebraicNumber::from_rational(f, 0), Error);
  CHECK(kind_of([&] { (void)(t / AlgebraicNumber::rational(0)); }) == ErrorKind::DivisionByZero);

  auto m = AlgebraicNumber::generator(moore_field());
  CHECK(kind_of([&] { (void)(t + m); }) == ErrorKind::FieldMismatch);
  // Rationals from Q embed into any field.
  CHECK(t + AlgebraicNumber::rational(Rational(1, 2)) == t + Rational(1, 2));
  // Two presentations of the same root agree.
  auto f2 = NumberField::create({1, -1, -1, -1}, Rational(3, 2), 2);
  CHECK(AlgebraicNumber::generator(f2) == t);
}

TEST_CASE("field arithmetic properties") {
  Rng rng(20261016);
  FieldPtr fields[] = {tribonacci_field(), moore_field(), example_field(), NumberField::create({1, 0, -2}, 1, 2)};
  int inverses = 0;
  for (int i = 0; i < 500; ++i) {
    const FieldPtr& f = fields[i % 4];
    auto x = random_element(rng, f);
    auto y = random_element(rng, f);
    auto z = random_element(rng, f);
    if (!x.is_zero()) {
      CHECK((AlgebraicNumber::from_rational(f, 1) / x) * x == AlgebraicNumber::from_rational(f, 1));
      ++inverses;
    }
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == AlgebraicNumber::from_rational(f, 0));
  }
  CHECK(inverses > 450);
}

TEST_CASE("sign, floor and approximation") {
  auto t = AlgebraicNumber::generator(tribonacci_field());
  CHECK(floor_of(t) == 1);
  CHECK(floor_of(AlgebraicNumber::generator(example_field())) == 2);
  CHECK(floor_of(AlgebraicNumber::rational(Rational(7, 4))) == 1);
  CHECK(floor_of(AlgebraicNumber::rational(Rational(-1, 2))) == -1);
  CHECK(floor_of(-t) == -2);
  CHECK(sign(t - Rational(2)) < 0);
  CHECK(compare(t * t, t + Rational(1)) > 0);

  auto a6 = approximate(t, 6);
  CHECK(a6.decimal == "1.839287");
  CHECK(approximate(AlgebraicNumber::generator(moore_field()), 4).decimal == "1.4656");
  CHECK(approximate(AlgebraicNumber::rational(Rational(3, 2)), 5).decimal == "1.50000");
  CHECK_THROWS_AS(approximate(t, 0), Error);

  // The certified interval contains the root and the decimal is within bound.
  Polynomial p = tribonacci_field()->min_poly();
  CHECK(p.sign_at(a6.lo) != p.sign_at(a6.hi));
  Rational d6 = parse_rational("1839287/1000000");
  Rational oracle = bisect(p, 1, 2, Rational(1, 1000000000));
  CHECK(abs(d6 - oracle) < Rational(1, 1000000));

  Rng rng(7);
  auto f = example_field();
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(rng, f, 20);
    Integer m = floor_of(x);
    CHECK(sign(x - Rational(m)) >= 0);
    CHECK(sign(x - Rational(m + 1)) < 0);
    Rational prev_bound;
    Rational prev_value;
    for (std::size_t d = 1; d <= 8; ++d) {
      auto ap = approximate(x, d);
      Rational v = parse_rational(std::string(ap.decimal).erase(ap.decimal.find('.'), 1) + "/1" +
                                  std::string(d, '0'));
      CHECK(ap.lo <= ap.hi);
      CHECK(sign(x - ap.lo) >= 0);
      CHECK(sign(x - ap.hi) <= 0);
      Rational bound(1, 1);
      for (std::size_t k = 0; k < d; ++k) bound /= 10;
      CHECK(sign(x - (v - bound)) > 0);
      CHECK(sign(x - (v + bound)) < 0);
      if (d > 1) CHECK(abs(v - prev_value) <= prev_bound);
      prev_value = v;
      prev_bound = bound;
    }
  }
}

TEST_CASE("number literals") {
  auto r = parse_number("rat:7/4");
  CHECK(r.kind == LiteralKind::Rat);
  CHECK(r.value->as_rational() == Rational(7, 4));

  auto a = parse_number("alg:1,-1,-2,-1@2,3");
  CHECK(a.kind == LiteralKind::Alg);
  CHECK(a.value->field()->same_as(*example_field()));

  auto f = parse_number("ratfunc:1/1,0");
  CHECK(f.kind == LiteralKind::RatFunc);
  auto m = AlgebraicNumber::generator(moore_field());
  CHECK((*f.function)(m) == AlgebraicNumber::from_rational(moore_field(), 1) / m);
  CHECK(f.function->literal() == "ratfunc:1/1,0");

  auto d = parse_number("dec:-1.25");
  CHECK(d.kind == LiteralKind::Dec);
  CHECK(d.decimal == "-1.25");

  auto [alpha, beta] = resolve_pair(parse_number("alg:1,-1,-1,-1@1,2"), parse_number("ratfunc:1,1/1,0"));
  CHECK(beta == AlgebraicNumber::from_rational(alpha.field(), 1) / alpha + Rational(1));

  auto position = [](const char* text) -> std::size_t {
    try {
      parse_number(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("rat:7/x") == 6);
  CHECK(position("foo:1") == 0);
  CHECK(position("alg:1,-1,z@1,2") == 9);
  CHECK(position("alg:1,-1,-1,-1") == 14);
  CHECK(position("ratfunc:1,1") == 11);
  CHECK(position("dec:1.2.3") == 7);
  CHECK(position("rat:") == 4);
  CHECK(kind_of([] { parse_number("alg:1,0,-4@0,3"); }) == ErrorKind::ReduciblePolynomial);
  CHECK(kind_of([] { resolve_pair(parse_number("ratfunc:1/1"), parse_number("rat:1")); }) == ErrorKind::Usage);
  CHECK(kind_of([] { resolve_pair(parse_number("dec:1.5"), parse_number("rat:1")); }) == ErrorKind::Usage);
}
