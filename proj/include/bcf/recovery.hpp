#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bcf/expansion.hpp"
#include "bcf/literal.hpp"
#include "bcf/matrix.hpp"
#include "bcf/number_field.hpp"
#include "bcf/polynomial.hpp"
#include "bcf/sequence.hpp"

namespace bcf {

/// The polynomial an (eventually) periodic digit pair forces on alpha, with
/// beta as a rational function of alpha and both located exactly.
struct RecoveredCubic {
  /// Eliminant before factoring: primitive, degree <= 3.
  Polynomial raw;
  /// Coefficient of alpha^4 in the eliminant before truncation (always zero).
  Integer quartic_coefficient;
  /// Irreducible factor of `raw` that alpha is a root of (primitive, leading > 0).
  Polynomial poly;
  /// beta = beta_num(alpha) / beta_den(alpha), integer coefficients.
  Polynomial beta_num;
  Polynomial beta_den;
  /// Q(alpha) with a certified isolating interval for alpha.
  FieldPtr field;
  AlgebraicNumber alpha;
  AlgebraicNumber beta;
  /// Transfer matrix used by the eventually periodic route (identity for the pure route).
  Matrix3 transfer;
};

/// Recovers alpha's polynomial from one full period of a purely periodic pair
/// by clearing denominators in the self-similar tree-sum relations.
/// Throws InvalidSequence for invalid or empty digits, DegenerateSystem if the
/// elimination collapses.
RecoveredCubic recover_cubic_pure(const std::vector<Integer>& period_a, const std::vector<Integer>& period_b);

/// Eventually periodic route: M = R_0^{-1} ... R_k-1^{-1} R_{k+m-1} ... R_k R_{k-1} ... R_0
/// with (alpha beta 1) a left eigenvector of M.
RecoveredCubic recover_cubic_eventual(const std::vector<Integer>& pre_a, const std::vector<Integer>& pre_b,
                                      const std::vector<Integer>& period_a, const std::vector<Integer>& period_b);

/// The matrix M of the eventually periodic route; det M = 1.
Matrix3 eventual_transfer_matrix(const std::vector<Integer>& pre_a, const std::vector<Integer>& pre_b,
                                 const std::vector<Integer>& period_a, const std::vector<Integer>& period_b);

/// Dispatches on the detected periodicity of an expansion. Throws
/// DegenerateSystem if the expansion is not periodic.
RecoveredCubic recover_from_digits(const SequencePair& digits);

/// Rigorous enclosure of the limit alpha of valid digits, from the tail box
/// alpha_n in [a_n, a_n + 1], beta_n in [b_n, b_n + 1] pushed through the
/// depth-n tree sum.
std::pair<Rational, Rational> alpha_enclosure(const SequencePair& digits, std::size_t depth);

/// One rational-function beta candidate in terms of alpha.
using BetaCandidate = RationalFunction;

/// Monic cubics x^3 + c2 x^2 + c1 x + c0 with each c in [lo, hi].
struct CubicFamily {
  long c2_lo = 0, c2_hi = 0;
  long c1_lo = 0, c1_hi = 0;
  long c0_lo = 0, c0_hi = 0;
};

struct ScanOptions {
  CubicFamily family;
  std::vector<BetaCandidate> betas;
  std::size_t horizon = kDefaultMaxTerms;
  std::size_t jobs = 1;
  std::size_t preview = 12;
};

/// Outcome for one (field, beta) candidate. Status is one of "periodic",
/// "terminated", "no_period_within_horizon", "beta_not_positive" or
/// "error:<kind>". A miss says nothing about longer horizons.
struct ScanRecord {
  std::string min_poly;  // coefficients, highest degree first, comma separated
  std::string interval;  // "lo,hi"
  std::string beta_expr;
  std::string status;
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> period;
  std::string digits_preview;
};

/// The default beta family: k + 1/alpha (k = 0..2), alpha, alpha^2, alpha^2 - alpha, alpha^2 + alpha.
std::vector<BetaCandidate> default_beta_candidates();

/// Every irreducible cubic of the family, each of its positive real roots as
/// alpha, every beta candidate; runs the exact expansion with period
/// detection. Results come back in a deterministic order regardless of `jobs`.
std::vector<ScanRecord> conjecture_scan(const ScanOptions& options);

}  // namespace bcf
