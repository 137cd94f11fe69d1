#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bcf/literal.hpp"
#include "bcf/rational.hpp"

namespace bcf {

/// Floating-point expansion for inputs outside the exact contract. Results
/// are heuristic: digits are reported only while a running error bound keeps
/// every floor unambiguous.
struct ApproxOptions {
  std::size_t max_terms = 64;
  std::size_t digits = 50;  // working decimal digits
  std::size_t guard = 10;   // extra decimal digits carried internally
};

struct ApproxValue {
  mpf_class value;
  mpf_class error;  // bound on |value - intended input|
};

struct ApproxExpansion {
  std::vector<Integer> a;
  std::vector<Integer> b;
  bool terminated = false;           // some beta_i looked integral
  bool precision_exhausted = false;  // stopped because a floor became ambiguous
  std::optional<std::string> terminal;
  std::size_t digits = 0;
  std::size_t guard = 0;
};

/// Approximates alpha and beta from literals. A dec literal is taken as exact
/// up to half a unit in its last place; exact literals are rounded to the
/// working precision; a ratfunc beta is evaluated at the approximate alpha.
std::pair<ApproxValue, ApproxValue> approximate_pair(const NumberSpec& alpha, const NumberSpec& beta,
                                                     const ApproxOptions& options);

/// Throws NonPositiveInput unless both values are positive.
ApproxExpansion approx_expand(const ApproxValue& alpha, const ApproxValue& beta, const ApproxOptions& options);

}  // namespace bcf
