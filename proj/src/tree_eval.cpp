#include "bcf/tree_eval.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bcf/error.hpp"
#include "bcf/matrix.hpp"

namespace bcf {

namespace {

void require_same_length(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidSequence, "tree sum needs equal-length digit lists");
}

ConvergentTriple make_triple(std::size_t n, Integer A, Integer B, Integer C) {
  if (C == 0) {
    throw Error(ErrorKind::DivisionByZero, "C_" + std::to_string(n) + " = 0; convergent undefined");
  }
  ConvergentTriple t{n, std::move(A), std::move(B), std::move(C), {}, {}};
  t.alpha = make_rational(t.A, t.C);
  t.beta = make_rational(t.B, t.C);
  return t;
}

struct Column {
  Integer A, B, C;
};

}  // namespace

std::pair<Rational, Rational> tree_sum(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                       const Rational& alpha_tail, const Rational& beta_tail) {
  require_same_length(a, b);
  Rational alpha = alpha_tail, beta = beta_tail;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (alpha == 0) throw Error(ErrorKind::DivisionByZero, "tree sum hit a zero denominator");
    Rational next_alpha = Rational(a[k]) + beta / alpha;
    Rational next_beta = Rational(b[k]) + 1 / alpha;
    alpha = std::move(next_alpha);
    beta = std::move(next_beta);
  }
  return {alpha, beta};
}

std::pair<AlgebraicNumber, AlgebraicNumber> tree_sum(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                                     const AlgebraicNumber& alpha_tail,
                                                     const AlgebraicNumber& beta_tail) {
  require_same_length(a, b);
  FieldPtr f = common_field(alpha_tail, beta_tail);
  AlgebraicNumber alpha = alpha_tail.embed_in(f), beta = beta_tail.embed_in(f);
  const AlgebraicNumber one = AlgebraicNumber::from_rational(f, Rational(1));
  for (std::size_t k = a.size(); k-- > 0;) {
    if (alpha.is_zero()) throw Error(ErrorKind::DivisionByZero, "tree sum hit a zero denominator");
    AlgebraicNumber next_alpha = beta / alpha + Rational(a[k]);
    AlgebraicNumber next_beta = one / alpha + Rational(b[k]);
    alpha = std::move(next_alpha);
    beta = std::move(next_beta);
  }
  return {alpha, beta};
}

std::vector<ConvergentTriple> convergents(const SequencePair& seqs, std::size_t n) {
  std::vector<ConvergentTriple> out;
  out.reserve(n + 1);
  // Notional columns for indices -1, -2, -3.
  std::array<Column, 3> win = {Column{1, 0, 0}, Column{0, 1, 0}, Column{0, 0, 1}};
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer& a = seqs.a_at(i);
    const Integer& b = seqs.b_at(i);
    Column next{a * win[0].A + b * win[1].A + win[2].A, a * win[0].B + b * win[1].B + win[2].B,
                a * win[0].C + b * win[1].C + win[2].C};
    win[2] = std::move(win[1]);
    win[1] = std::move(win[0]);
    win[0] = std::move(next);
    out.push_back(make_triple(i, win[0].A, win[0].B, win[0].C));
  }
  return out;
}

ConvergentTriple convergent(const SequencePair& seqs, std::size_t n) {
  std::array<Column, 3> win = {Column{1, 0, 0}, Column{0, 1, 0}, Column{0, 0, 1}};
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer& a = seqs.a_at(i);
    const Integer& b = seqs.b_at(i);
    Column next{a * win[0].A + b * win[1].A + win[2].A, a * win[0].B + b * win[1].B + win[2].B,
                a * win[0].C + b * win[1].C + win[2].C};
    win[2] = std::move(win[1]);
    win[1] = std::move(win[0]);
    win[0] = std::move(next);
  }
  return make_triple(n, win[0].A, win[0].B, win[0].C);
}

namespace {

// A_{k,n} for k = 0..n+3 (only entries >= m are filled).
std::vector<Integer> backward_column(const SequencePair& seqs, std::size_t m, std::size_t n) {
  if (m > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "backward recurrence needs m <= n (m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
  }
  std::vector<Integer> A(n + 4);
  A[n + 1] = 1;
  A[n + 2] = 0;
  A[n + 3] = 0;
  for (std::size_t k = n + 1; k-- > m;) {
    A[k] = seqs.a_at(k) * A[k + 1] + A[k + 3];
    if (A[k + 2] != 0) A[k] += seqs.b_at(k + 1) * A[k + 2];
  }
  return A;
}

}  // namespace

BackwardResult convergent_backward(const SequencePair& seqs, std::size_t m, std::size_t n) {
  std::vector<Integer> A = backward_column(seqs, m, n);
  Integer B = seqs.b_at(m) * A[m + 1] + A[m + 2];
  return {A[m], std::move(B), A[m + 1]};
}

std::vector<GeneralTableEntry> general_table(const SequencePair& seqs, std::size_t n) {
  std::vector<Integer> A = backward_column(seqs, 0, n);
  std::vector<GeneralTableEntry> out;
  out.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) out.push_back({m, n, A[m], seqs.b_at(m) * A[m + 1] + A[m + 2]});
  return out;
}

ConvergentTriple convergent_matrix(const SequencePair& seqs, std::size_t n) {
  Matrix3 acc = identity3();
  for (std::size_t i = 0; i <= n; ++i) acc = acc * transpose(transfer_matrix(seqs.a_at(i), seqs.b_at(i)));
  return make_triple(n, acc[0][0], acc[1][0], acc[2][0]);
}

Integer det_invariant(const SequencePair& seqs, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "determinant invariant needs n >= 2");
  auto cs = convergents(seqs, n);
  const auto &x = cs[n], &y = cs[n - 1], &z = cs[n - 2];
  Matrix3 m = {{{x.A, y.A, z.A}, {x.B, y.B, z.B}, {x.C, y.C, z.C}}};
  return det(m);
}

CrossDifference cross_difference(const SequencePair& seqs, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "cross difference needs n >= 2");
  auto cs = convergents(seqs, n);
  const auto &x = cs[n], &y = cs[n - 1], &z = cs[n - 2];
  CrossDifference out;
  out.lhs = (x.alpha - y.alpha) * (y.beta - z.beta) - (y.alpha - z.alpha) * (x.beta - y.beta);
  out.rhs = make_rational(Integer(1), z.C * y.C * x.C);
  return out;
}

ConvergenceDiagnostics gap_diagnostics(const SequencePair& seqs, std::size_t count) {
  if (count < 8) throw Error(ErrorKind::IndexOutOfRange, "gap diagnostics need at least 8 convergents");
  for (std::size_t i = 1; i < count; ++i) {
    const Integer& a = seqs.a_at(i);
    if (a < 1 || a < seqs.b_at(i)) {
      throw Error(ErrorKind::InvalidSequence,
                  "index " + std::to_string(i) + " violates 1 <= a_i >= b_i (a = " + a.get_str() +
                      ", b = " + seqs.b_at(i).get_str() + ")");
    }
  }
  auto cs = convergents(seqs, count - 1);
  ConvergenceDiagnostics out;
  out.count = count;
  // delta[k] holds Delta_{k+1}.
  for (std::size_t n = 1; n < count; ++n) out.delta.push_back({n, abs(cs[n].alpha - cs[n - 1].alpha)});
  auto delta = [&](std::size_t n) -> const Rational& { return out.delta[n - 1].value; };
  for (std::size_t n = 4; n <= count; ++n) {
    out.dmax.push_back({n, std::max({delta(n - 1), delta(n - 2), delta(n - 3)})});
  }
  // dmax[k] holds D_{k+4}.
  auto D = [&](std::size_t n) -> const Rational& { return out.dmax[n - 4].value; };
  const Rational ratio(35, 36);
  for (std::size_t n = 4; n + 1 <= count; ++n) {
    if (!(D(n + 1) <= D(n))) {
      out.monotone = false;
      out.monotone_failures.push_back(n);
    }
  }
  for (std::size_t n = 4; n + 4 <= count; ++n) {
    if (!(D(n + 4) < ratio * D(n))) {
      out.contracting = false;
      out.contraction_failures.push_back(n);
    }
  }
  return out;
}

namespace {

class TreeRenderer {
 public:
  TreeRenderer(const SequencePair& seqs, std::size_t depth) : seqs_(seqs), depth_(depth) {}

  void outline_a(std::size_t i, std::size_t indent, const char* role, std::string& out) const {
    line(indent, role, "a_" + std::to_string(i) + " = " + seqs_.a_at(i).get_str(), out);
    if (i == depth_) return;
    outline_b(i + 1, indent + 1, "num: ", out);
    outline_a(i + 1, indent + 1, "den: ", out);
  }

  void outline_b(std::size_t i, std::size_t indent, const char* role, std::string& out) const {
    line(indent, role, "b_" + std::to_string(i) + " = " + seqs_.b_at(i).get_str(), out);
    if (i == depth_) return;
    outline_a(i + 1, indent + 1, "den: ", out);
  }

  std::string ascii_a(std::size_t i) const {
    std::string v = seqs_.a_at(i).get_str();
    if (i == depth_) return v;
    return v + " + (" + ascii_b(i + 1) + ")/(" + ascii_a(i + 1) + ")";
  }

  std::string ascii_b(std::size_t i) const {
    std::string v = seqs_.b_at(i).get_str();
    if (i == depth_) return v;
    return v + " + 1/(" + ascii_a(i + 1) + ")";
  }

  std::string latex_a(std::size_t i) const {
    std::string v = seqs_.a_at(i).get_str();
    if (i == depth_) return v;
    return v + " + \\frac{" + latex_b(i + 1) + "}{" + latex_a(i + 1) + "}";
  }

  std::string latex_b(std::size_t i) const {
    std::string v = seqs_.b_at(i).get_str();
    if (i == depth_) return v;
    return v + " + \\frac{1}{" + latex_a(i + 1) + "}";
  }

 private:
  static void line(std::size_t indent, const char* role, const std::string& text, std::string& out) {
    out.append(2 * indent, ' ');
    out += role;
    out += text;
    out += '\n';
  }

  const SequencePair& seqs_;
  std::size_t depth_;
};

}  // namespace

std::string render_tree(const SequencePair& seqs, std::size_t depth, RenderFormat format) {
  // Touch the deepest digits first so a short sequence fails before any output.
  seqs.a_at(depth);
  seqs.b_at(depth);
  TreeRenderer r(seqs, depth);
  std::string out;
  const std::string d = std::to_string(depth);
  if (format == RenderFormat::Latex) {
    out += "\\alpha^{(" + d + ")} = " + r.latex_a(0) + "\n";
    out += "\\beta^{(" + d + ")} = " + r.latex_b(0) + "\n";
    return out;
  }
  out += "alpha tree, depth " + d + "\n";
  r.outline_a(0, 0, "", out);
  out += "alpha = " + r.ascii_a(0) + "\n";
  out += "beta tree, depth " + d + "\n";
  r.outline_b(0, 0, "", out);
  out += "beta = " + r.ascii_b(0) + "\n";
  return out;
}

NodeCounts node_counts(std::size_t depth) {
  NodeCounts out;
  // Each a-node spawns one b and one a on the next level; each b-node one a.
  auto grow = [depth](Integer a, Integer b, std::vector<Integer>& as, std::vector<Integer>& bs) {
    for (std::size_t level = 0; level <= depth; ++level) {
      as.push_back(a);
      bs.push_back(b);
      Integer next_a = a + b;
      b = a;
      a = std::move(next_a);
    }
  };
  grow(Integer(1), Integer(0), out.alpha_a, out.alpha_b);
  grow(Integer(0), Integer(1), out.beta_a, out.beta_b);
  return out;
}

}  // namespace bcf
