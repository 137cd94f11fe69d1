#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "bcf/number_field.hpp"
#include "bcf/polynomial.hpp"

namespace bcf {

/// num(x) / den(x) with integer coefficients; x stands for alpha.
struct RationalFunction {
  Polynomial num;
  Polynomial den;
  /// `ratfunc:n_k,...,n_0/d_k,...,d_0`.
  std::string literal() const;
  /// Throws DivisionByZero when den(x) = 0.
  AlgebraicNumber operator()(const AlgebraicNumber& x) const;
};

enum class LiteralKind { Rat, Alg, RatFunc, Dec };

/// A parsed number literal:
///   rat:<p>/<q>
///   alg:<c_d>,...,<c_0>@<lo>,<hi>
///   ratfunc:<n_k>,...,<n_0>/<d_k>,...,<d_0>   (beta only, a function of alpha)
///   dec:<decimal>                             (approximate mode only)
struct NumberSpec {
  LiteralKind kind = LiteralKind::Rat;
  std::string text;
  std::optional<AlgebraicNumber> value;      // rat, alg
  std::optional<RationalFunction> function;  // ratfunc
  std::string decimal;                       // dec
};

inline constexpr std::string_view kNumberGrammar =
    "rat:<p>/<q> | alg:<c_d>,...,<c_0>@<lo>,<hi> | ratfunc:<n_k>,...,<n_0>/<d_k>,...,<d_0> | dec:<decimal>";

/// Throws ParseError (with a position into `text`) on malformed input and
/// propagates DegreeOutOfRange, ReduciblePolynomial, RootCountNotOne from the
/// field constructor.
NumberSpec parse_number(std::string_view text);

/// Exact (alpha, beta) from two literals; a ratfunc beta is evaluated at alpha.
/// Throws Usage for a ratfunc alpha or any dec literal.
std::pair<AlgebraicNumber, AlgebraicNumber> resolve_pair(const NumberSpec& alpha, const NumberSpec& beta);

}  // namespace bcf
