#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bcf/number_field.hpp"
#include "bcf/rational.hpp"

namespace bcf {

/// Digits from index `preperiod` on repeat with length `period`.
struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 0;

  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

/// Paired non-negative digit sequences ({a_i}, {b_i}).
///
/// Three shapes occur:
///  - a plain prefix: a and b of equal length;
///  - a finite expansion: a_0..a_{n-1}, b_0..b_n and the real tail alpha_n;
///  - an eventually periodic pair: stored digits cover at least the preperiod
///    plus one period and reads past the end extend periodically.
class SequencePair {
 public:
  SequencePair() = default;
  /// Throws InvalidSequence on negative digits or unequal lengths.
  SequencePair(std::vector<Integer> a, std::vector<Integer> b);

  /// Finite expansion shape; requires b.size() == a.size() + 1.
  static SequencePair finite(std::vector<Integer> a, std::vector<Integer> b, AlgebraicNumber terminal);
  /// preperiod digits followed by one period; the period must be nonempty.
  static SequencePair periodic(std::vector<Integer> pre_a, std::vector<Integer> pre_b,
                               std::vector<Integer> period_a, std::vector<Integer> period_b);

  const std::vector<Integer>& a() const { return a_; }
  const std::vector<Integer>& b() const { return b_; }
  /// Number of stored (a_i, b_i) pairs.
  std::size_t size() const { return a_.size(); }

  bool is_finite() const { return terminal_.has_value(); }
  bool is_periodic() const { return periodicity_.has_value(); }
  const std::optional<AlgebraicNumber>& terminal() const { return terminal_; }
  const std::optional<Periodicity>& periodicity() const { return periodicity_; }

  /// Declares the stored digits eventually periodic. Throws InvalidSequence if
  /// the stored digits contradict the claim or do not cover one full period.
  void set_periodicity(const Periodicity& p);

  bool has_a(std::size_t i) const;
  bool has_b(std::size_t i) const;
  /// Throws IndexOutOfRange past the available digits.
  const Integer& a_at(std::size_t i) const;
  const Integer& b_at(std::size_t i) const;

  /// First n pairs as a plain prefix (periodic pairs are unrolled as needed).
  SequencePair prefix(std::size_t n) const;

  friend bool operator==(const SequencePair& x, const SequencePair& y);

 private:
  std::size_t periodic_index(std::size_t i) const;

  std::vector<Integer> a_;
  std::vector<Integer> b_;
  std::optional<AlgebraicNumber> terminal_;
  std::optional<Periodicity> periodicity_;
};

/// Parses "1,2,3" into digits; throws ParseError on malformed or negative entries.
std::vector<Integer> parse_digits(std::string_view text, std::size_t offset = 0);

}  // namespace bcf
