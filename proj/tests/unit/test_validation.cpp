#include <doctest.h>

#include "bcf/error.hpp"
#include "bcf/expansion.hpp"
#include "bcf/validation.hpp"
#include "support/generators.hpp"

using namespace bcf;
using namespace bcf::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); }

AlgebraicNumber one_over(const AlgebraicNumber& x) { return AlgebraicNumber::from_rational(x.field(), 1) / x; }

// 1 = proper/appropriate, 0 = not, -1 = DivisionByZero.
template <typename F>
int outcome(F&& f) {
  try {
    return f() ? 1 : 0;
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::DivisionByZero);
    return -1;
  }
}

}  // namespace

TEST_CASE("validate examples") {
  auto ones = validate(SequencePair(repeat(1, 6), repeat(1, 6)));
  CHECK(ones.valid);
  CHECK(ones.indeterminate == std::vector<std::size_t>{5});
  CHECK(ones.tested_through == 5);

  auto r = validate(SequencePair(ints({5, 2, 2}), ints({1, 2, 3})));
  CHECK_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].index == 2);
  CHECK(r.violations[0].rule == ValidationRule::ALessThanB);

  auto s = validate(SequencePair(ints({3, 2, 2, 1}), ints({0, 2, 0, 1})));
  CHECK_FALSE(s.valid);
  REQUIRE(s.violations.size() == 1);
  CHECK(s.violations[0].index == 1);
  CHECK(s.violations[0].rule == ValidationRule::EqualThenBZero);
  CHECK(s.indeterminate == std::vector<std::size_t>{3});

  auto z = validate(SequencePair(ints({0, 0, 1}), ints({4, 0, 1})));
  REQUIRE(z.violations.size() == 1);
  CHECK(z.violations[0].index == 1);
  CHECK(z.violations[0].rule == ValidationRule::ABelowOne);
  CHECK(to_string(ValidationRule::EqualThenBZero) == "equal_then_b_zero");

  // Index 0 is unconstrained for plain prefixes but recurs in a pure period.
  CHECK(validate(SequencePair(ints({0, 2}), ints({7, 1}))).valid);
  CHECK_FALSE(validate(SequencePair::periodic({}, {}, ints({0, 2}), ints({0, 1}))).valid);
  auto wrap = validate(SequencePair::periodic({}, {}, ints({2, 3}), ints({2, 0})));
  CHECK_FALSE(wrap.valid);
  CHECK(wrap.indeterminate.empty());
  CHECK(validate(SequencePair::periodic(ints({2}), ints({2}), ints({2, 3}), ints({0, 0}))).valid);
}

TEST_CASE("expansions pass validation") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    auto e = bcf_expand_rational(random_positive_rational(rng, 10000, 500), random_positive_rational(rng, 10000, 500));
    auto full = e.digits;
    CHECK(validate(SequencePair(full.a(), std::vector<Integer>(full.b().begin(), full.b().end() - 1))).valid);
  }
}

TEST_CASE("proper and appropriate examples") {
  auto t = AlgebraicNumber::generator(tribonacci_field());
  auto beta = one_over(t) + Rational(1);
  auto digits = bcf_expand(t, beta, 12).digits;
  CHECK(check_proper(t, beta, digits, 10));
  CHECK(check_appropriate(t, beta, digits, 10));
  CHECK(check_proper(t, beta, digits, 0));
  CHECK(check_appropriate(t, beta, digits, 0));

  // ({1,1,...},{2,2,...}) against its tree limit.
  auto x = AlgebraicNumber::generator(example_field());
  auto y = one_over(x) + Rational(2);
  SequencePair bad(repeat(1, 6), repeat(2, 6));
  CHECK_FALSE(check_proper(x, y, bad, 3));
  CHECK_FALSE(check_appropriate(x, y, bad, 3));

  CHECK_THROWS_AS(check_proper(AlgebraicNumber::rational(-1), beta, digits, 2), Error);
  // beta_0 = b_0 exactly.
  auto hit = SequencePair(ints({1, 1}), ints({3, 1}));
  CHECK(outcome([&] { return check_proper(AlgebraicNumber::rational(2), AlgebraicNumber::rational(3), hit, 1); }) == -1);
}

TEST_CASE("proper iff appropriate") {
  Rng rng(404);
  FieldPtr fields[] = {tribonacci_field(), moore_field(), example_field()};
  int agree_true = 0, agree_false = 0;
  for (int i = 0; i < 120; ++i) {
    AlgebraicNumber x = AlgebraicNumber::rational(0), y = x;
    if (i % 2) {
      x = AlgebraicNumber::rational(random_positive_rational(rng, 5000, 97));
      y = AlgebraicNumber::rational(random_positive_rational(rng, 5000, 97));
    } else {
      const FieldPtr& f = fields[uniform(rng, 0, 2)];
      x = random_element(rng, f);
      y = random_element(rng, f);
      if (sign(x) <= 0) x = -x;
      if (sign(y) <= 0) y = -y;
      if (x.is_zero() || y.is_zero()) continue;
    }
    auto e = bcf_expand(x, y, 10);
    std::vector<Integer> a = e.digits.a(), b = e.digits.b();
    b.resize(a.size());
    if (a.size() < 2) continue;
    if (i % 3) {
      std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(a.size()) - 1));
      auto& digit = uniform(rng, 0, 1) ? a[k] : b[k];
      digit = digit == 0 ? Integer(1) : Integer(digit + (uniform(rng, 0, 1) ? 1 : -1));
    }
    SequencePair seqs(a, b);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(a.size()) - 1));
    int p = outcome([&] { return check_proper(x, y, seqs, n); });
    int q = outcome([&] { return check_appropriate(x, y, seqs, n); });
    CHECK(p == q);
    if (p == 1) ++agree_true;
    if (p == 0) ++agree_false;
  }
  CHECK(agree_true > 10);
  CHECK(agree_false > 10);
}
