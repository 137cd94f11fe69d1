#pragma once

// Seeded generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "bcf/number_field.hpp"
#include "bcf/rational.hpp"
#include "bcf/sequence.hpp"

namespace bcf::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Digits meeting 1 <= a_i >= b_i for i >= 1 and a_i = b_i => b_{i+1} != 0.
/// Index 0 is unconstrained apart from non-negativity.
inline SequencePair random_valid_pair(Rng& rng, std::size_t length, long max_digit) {
  std::vector<Integer> a, b;
  for (std::size_t i = 0; i < length; ++i) {
    if (i == 0) {
      a.emplace_back(uniform(rng, 0, max_digit));
      b.emplace_back(uniform(rng, 0, max_digit));
      continue;
    }
    long ai = uniform(rng, 1, max_digit);
    bool need_nonzero = i >= 2 && a[i - 1] == b[i - 1];
    long bi = uniform(rng, need_nonzero ? 1 : 0, ai);
    a.emplace_back(ai);
    b.emplace_back(bi);
  }
  return SequencePair(std::move(a), std::move(b));
}

/// A purely periodic valid pair given by one period of digits. Every index,
/// including 0, obeys the validity rules because index 0 recurs.
struct PeriodDigits {
  std::vector<Integer> a, b;
};

inline PeriodDigits random_valid_period(Rng& rng, std::size_t max_period, long max_digit) {
  for (;;) {
    std::size_t m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_period)));
    PeriodDigits p;
    for (std::size_t i = 0; i < m; ++i) {
      long ai = uniform(rng, 1, max_digit);
      p.a.emplace_back(ai);
      p.b.emplace_back(uniform(rng, 0, ai));
    }
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (p.a[i] == p.b[i] && p.b[(i + 1) % m] == 0) ok = false;
    }
    if (ok) return p;
  }
}

inline Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
  return make_rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

/// Random element of `field` with small rational coefficients.
inline AlgebraicNumber random_element(Rng& rng, const FieldPtr& field, long bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < field->degree(); ++i) c.push_back(make_rational(uniform(rng, -bound, bound), uniform(rng, 1, bound)));
  return AlgebraicNumber(field, std::move(c));
}

inline FieldPtr tribonacci_field() { return NumberField::create({1, -1, -1, -1}, 1, 2); }
inline FieldPtr moore_field() { return NumberField::create({1, -1, 0, -1}, 1, 2); }
inline FieldPtr example_field() { return NumberField::create({1, -1, -2, -1}, 2, 3); }

inline std::vector<Integer> repeat(long value, std::size_t n) { return std::vector<Integer>(n, Integer(value)); }

}  // namespace bcf::testing
