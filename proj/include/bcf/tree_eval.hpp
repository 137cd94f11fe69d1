#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bcf/number_field.hpp"
#include "bcf/rational.hpp"
#include "bcf/sequence.hpp"

namespace bcf {

/// (A_n, B_n, C_n) with alpha^(n) = A_n / C_n and beta^(n) = B_n / C_n.
struct ConvergentTriple {
  std::size_t n = 0;
  Integer A, B, C;
  Rational alpha, beta;
};

/// A_{m,n}, B_{m,n} of the backward (fixed n) recurrence.
struct GeneralTableEntry {
  std::size_t m = 0, n = 0;
  Integer A, B;
};

struct BackwardResult {
  Integer A;       // A_{m,n}
  Integer B;       // B_{m,n}
  Integer A_next;  // A_{m+1,n}
};

/// Fibonacci tree sum [{a_0..a_k, alpha_tail}, {b_0..b_k, beta_tail}] by the
/// backward rule alpha <- a + beta'/alpha', beta <- b + 1/alpha'. Digit lists
/// must have equal length; empty lists return the tails unchanged.
/// Throws DivisionByZero if an intermediate alpha is zero.
std::pair<Rational, Rational> tree_sum(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                       const Rational& alpha_tail, const Rational& beta_tail);
std::pair<AlgebraicNumber, AlgebraicNumber> tree_sum(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                                     const AlgebraicNumber& alpha_tail,
                                                     const AlgebraicNumber& beta_tail);

/// n-th convergent from the forward three-term recurrences. Keeps only a
/// three-deep window. Throws IndexOutOfRange if digit n is unavailable and
/// DivisionByZero if C_n = 0 (possible only for invalid digits).
ConvergentTriple convergent(const SequencePair& seqs, std::size_t n);
/// Convergents 0..n in one forward pass.
std::vector<ConvergentTriple> convergents(const SequencePair& seqs, std::size_t n);

/// Backward recurrence in m at fixed n; requires m <= n.
BackwardResult convergent_backward(const SequencePair& seqs, std::size_t m, std::size_t n);
/// Whole column m = 0..n of the (m, n) table.
std::vector<GeneralTableEntry> general_table(const SequencePair& seqs, std::size_t n);

/// n-th convergent read off R_0^T R_1^T ... R_n^T (first column).
ConvergentTriple convergent_matrix(const SequencePair& seqs, std::size_t n);

/// det [[A_n, A_{n-1}, A_{n-2}], [B_n, ...], [C_n, ...]]; requires n >= 2.
Integer det_invariant(const SequencePair& seqs, std::size_t n);

/// Both sides of
/// (alpha^(n) - alpha^(n-1))(beta^(n-1) - beta^(n-2)) - (alpha^(n-1) - alpha^(n-2))(beta^(n) - beta^(n-1))
///   = 1 / (C_{n-2} C_{n-1} C_n).
struct CrossDifference {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};
CrossDifference cross_difference(const SequencePair& seqs, std::size_t n);

struct IndexedRational {
  std::size_t n = 0;
  Rational value;
};

/// Delta_n = |alpha^(n) - alpha^(n-1)| and D_n = max(Delta_{n-1}, Delta_{n-2}, Delta_{n-3}),
/// with exact checks of D_{n+1} <= D_n and D_{n+4} < (35/36) D_n.
struct ConvergenceDiagnostics {
  std::size_t count = 0;               // convergents 0..count-1 were used
  std::vector<IndexedRational> delta;  // n = 1..count-1
  std::vector<IndexedRational> dmax;   // n = 4..count
  bool monotone = true;                // D_{n+1} <= D_n at every checkable n
  bool contracting = true;             // D_{n+4} < (35/36) D_n at every checkable n
  std::vector<std::size_t> monotone_failures;
  std::vector<std::size_t> contraction_failures;

  bool certified() const { return monotone && contracting; }
};

/// Requires count >= 8 digits available and 1 <= a_i >= b_i for 1 <= i < count
/// (InvalidSequence otherwise).
ConvergenceDiagnostics gap_diagnostics(const SequencePair& seqs, std::size_t count);

enum class RenderFormat { Ascii, Latex };

/// Renders the alpha and beta trees down to digit index `depth`. Ascii output
/// has one line per a/b node (indented by level) followed by the fully
/// parenthesized expression; latex output nests \frac. LF endings, no
/// trailing whitespace.
std::string render_tree(const SequencePair& seqs, std::size_t depth, RenderFormat format);

/// Per-level node counts of the alpha tree and the beta tree for levels 0..depth.
struct NodeCounts {
  std::vector<Integer> alpha_a, alpha_b;
  std::vector<Integer> beta_a, beta_b;
};
NodeCounts node_counts(std::size_t depth);

}  // namespace bcf
