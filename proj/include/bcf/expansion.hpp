#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bcf/number_field.hpp"
#include "bcf/rational.hpp"
#include "bcf/sequence.hpp"

namespace bcf {

/// (alpha_i, beta_i) during an expansion, both in one field.
struct ExpansionState {
  AlgebraicNumber alpha;
  AlgebraicNumber beta;
  std::size_t index = 0;
};

struct StepResult {
  Integer a;
  Integer b;
  /// Empty when beta_i was an integer and the expansion terminated; the
  /// terminal value is then the input state's alpha.
  std::optional<ExpansionState> next;

  bool terminated() const { return !next.has_value(); }
};

/// One step of a_i = floor(alpha_i), b_i = floor(beta_i),
/// alpha_{i+1} = 1/(beta_i - b_i), beta_{i+1} = (alpha_i - a_i)/(beta_i - b_i).
/// Throws NonPositiveInput when called at index 0 with alpha or beta <= 0.
StepResult bcf_step(const ExpansionState& state, RootBracket* hint = nullptr);

struct Expansion {
  SequencePair digits;
  /// states[i] = (alpha_i, beta_i) for every state actually computed. When
  /// periodicity was found the list stops at the first repeat.
  std::vector<ExpansionState> states;

  /// (alpha_n, beta_n), following the period past the computed states.
  ExpansionState state_at(std::size_t n) const;
};

inline constexpr std::size_t kDefaultMaxTerms = 64;

/// Expands (alpha, beta) for at most max_terms digit pairs, stopping early on
/// termination. Exact periodicity of the states is detected on the way and
/// recorded on the digits.
Expansion bcf_expand(const AlgebraicNumber& alpha, const AlgebraicNumber& beta,
                     std::size_t max_terms = kDefaultMaxTerms);

struct RationalExpansion {
  SequencePair digits;
  /// w_0, w_1, ..., w_n, 0: the common denominators of each state followed
  /// by the vanishing w_{n+1} that ends the run.
  std::vector<Integer> w;
};

/// Integer-only expansion of a positive rational pair using
/// u' = w, v' = u - a w, w' = v - b w. Always terminates.
RationalExpansion bcf_expand_rational(const Rational& alpha, const Rational& beta);

}  // namespace bcf
