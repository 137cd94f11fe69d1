#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "bcf/number_field.hpp"
#include "bcf/sequence.hpp"

namespace bcf {

enum class ValidationRule {
  ABelowOne,     // a_i < 1
  ALessThanB,    // a_i < b_i
  EqualThenBZero // a_i = b_i and b_{i+1} = 0
};

std::string_view to_string(ValidationRule rule);

struct Violation {
  std::size_t index = 0;
  ValidationRule rule{};
};

/// Outcome of checking the BCF digit conditions on i >= 1 of a finite prefix
/// (or on one period's worth past the preperiod for periodic pairs, which
/// covers every index). `valid` is true exactly when no violation was found;
/// indices where a_i = b_i but b_{i+1} is not available are listed as
/// indeterminate instead.
struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::vector<std::size_t> indeterminate;
  std::size_t tested_through = 0;  // last index examined
};

ValidationReport validate(const SequencePair& seqs);

/// True iff running alpha_{k+1} = 1/(beta_k - b_k), beta_{k+1} = (alpha_k - a_k)/(beta_k - b_k)
/// with the given digits keeps every tail positive and 1 < alpha_k > beta_k
/// for 1 <= k <= n. Throws DivisionByZero if some beta_k equals b_k exactly,
/// NonPositiveInput unless alpha, beta > 0.
bool check_proper(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, const SequencePair& seqs,
                  std::size_t n);

/// Same tail computation; true iff every tail through index n is positive
/// and floor(alpha_k) = a_k, floor(beta_k) = b_k for 0 <= k < n. These are
/// the floors that determine tails 1..n, which makes the two checks
/// equivalent at every n.
bool check_appropriate(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, const SequencePair& seqs,
                       std::size_t n);

}  // namespace bcf
