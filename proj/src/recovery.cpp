#include "bcf/recovery.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

#include "bcf/error.hpp"
#include "bcf/validation.hpp"

namespace bcf {

namespace {

struct Column {
  Integer A, B, C;
};

// Columns for indices -3..n, stored at offset 3. The notional columns are the
// identity.
std::vector<Column> forward_columns(const SequencePair& digits, std::ptrdiff_t n) {
  std::vector<Column> cols{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  for (std::ptrdiff_t i = 0; i <= n; ++i) {
    const Integer& a = digits.a_at(static_cast<std::size_t>(i));
    const Integer& b = digits.b_at(static_cast<std::size_t>(i));
    const Column& c1 = cols[cols.size() - 1];
    const Column& c2 = cols[cols.size() - 2];
    const Column& c3 = cols[cols.size() - 3];
    cols.push_back({a * c1.A + b * c2.A + c3.A, a * c1.B + b * c2.B + c3.B, a * c1.C + b * c2.C + c3.C});
  }
  return cols;
}

Polynomial poly_of(std::initializer_list<Integer> low_first) {
  std::vector<Rational> c;
  for (const auto& x : low_first) c.emplace_back(x);
  return Polynomial(std::move(c));
}

void require_valid(const std::vector<Integer>& pre_a, const std::vector<Integer>& pre_b,
                   const std::vector<Integer>& period_a, const std::vector<Integer>& period_b) {
  if (period_a.empty()) throw Error(ErrorKind::InvalidSequence, "period must be nonempty");
  auto seqs = SequencePair::periodic(pre_a, pre_b, period_a, period_b);
  auto report = validate(seqs);
  if (!report.valid) {
    const auto& v = report.violations.front();
    throw Error(ErrorKind::InvalidSequence,
                "digits violate " + std::string(to_string(v.rule)) + " at index " + std::to_string(v.index));
  }
}

// Splits the eliminant into its rational roots and the remaining irreducible
// factor, then deepens the digit enclosure of alpha until exactly one
// candidate root is left inside it.
void locate(RecoveredCubic& out, const SequencePair& digits) {
  if (out.raw.is_zero() || out.raw.degree() < 1) {
    throw Error(ErrorKind::DegenerateSystem, "elimination left no polynomial in alpha");
  }
  std::vector<Rational> roots = rational_roots(out.raw);
  Polynomial g = out.raw;
  for (const auto& r : roots) {
    Polynomial lin{-r, Rational(1)};
    for (;;) {
      DivMod dm = divmod(g, lin);
      if (!dm.remainder.is_zero()) break;
      g = dm.quotient;
    }
  }
  for (std::size_t depth = 0; depth < 2000; ++depth) {
    auto [lo, hi] = alpha_enclosure(digits, depth);
    int rational_inside = 0;
    for (const auto& r : roots) rational_inside += (lo <= r && r <= hi) ? 1 : 0;
    int irrational_inside = g.degree() >= 2 ? count_roots(g, lo, hi) : 0;
    int total = rational_inside + irrational_inside;
    if (total == 0) throw Error(ErrorKind::DegenerateSystem, "no root of " + out.raw.to_string() + " matches the digits");
    if (total > 1) continue;
    if (rational_inside == 1) {
      throw Error(ErrorKind::DegenerateSystem, "periodic digits selected a rational root of " + out.raw.to_string());
    }
    out.poly = g.primitive();
    out.field = NumberField::create(out.poly.integer_coeffs_high_first(), lo, hi);
    out.alpha = AlgebraicNumber::generator(out.field);
    AlgebraicNumber den(out.field, out.beta_den);
    if (den.is_zero()) throw Error(ErrorKind::DegenerateSystem, "beta denominator vanishes at alpha");
    out.beta = AlgebraicNumber(out.field, out.beta_num) / den;
    return;
  }
  throw Error(ErrorKind::DegenerateSystem, "could not separate the roots of " + out.raw.to_string());
}

void finish_raw(RecoveredCubic& out, const Polynomial& full) {
  out.quartic_coefficient = full.coeff(4).get_num();
  if (out.quartic_coefficient != 0 || full.degree() > 4) {
    throw Error(ErrorKind::DegenerateSystem, "eliminant has a nonzero alpha^4 term");
  }
  std::vector<Rational> low(full.coeffs().begin(), full.coeffs().begin() + std::min<std::size_t>(4, full.coeffs().size()));
  Polynomial cubic(std::move(low));
  out.raw = cubic.is_zero() ? cubic : cubic.primitive();
}

RecoveredCubic empty_result() {
  return RecoveredCubic{{}, 0, {}, {}, {}, nullptr, AlgebraicNumber::rational(0), AlgebraicNumber::rational(0),
                        identity3()};
}

std::string join_digits(const std::vector<Integer>& d, std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < std::min(count, d.size()); ++i) {
    if (i) s += ',';
    s += d[i].get_str();
  }
  return s;
}

}  // namespace

std::pair<Rational, Rational> alpha_enclosure(const SequencePair& digits, std::size_t depth) {
  auto cols = forward_columns(digits, static_cast<std::ptrdiff_t>(depth) - 1);
  const Column& c1 = cols[cols.size() - 1];
  const Column& c2 = cols[cols.size() - 2];
  const Column& c3 = cols[cols.size() - 3];
  const Integer& a = digits.a_at(depth);
  const Integer& b = digits.b_at(depth);
  std::optional<Rational> lo, hi;
  for (int da = 0; da < 2; ++da) {
    for (int db = 0; db < 2; ++db) {
      Integer x = a + da;
      Integer y = b + db;
      Integer den = x * c1.C + y * c2.C + c3.C;
      if (den <= 0) throw Error(ErrorKind::InvalidSequence, "digits do not define a convergent tree sum");
      Rational v = make_rational(x * c1.A + y * c2.A + c3.A, den);
      if (!lo || v < *lo) lo = v;
      if (!hi || v > *hi) hi = v;
    }
  }
  return {*lo, *hi};
}

RecoveredCubic recover_cubic_pure(const std::vector<Integer>& period_a, const std::vector<Integer>& period_b) {
  require_valid({}, {}, period_a, period_b);
  auto digits = SequencePair::periodic({}, {}, period_a, period_b);
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(period_a.size()) - 1;
  auto cols = forward_columns(digits, n);
  const Column& cn = cols[cols.size() - 1];
  const Column& cn1 = cols[cols.size() - 2];
  const Column& cn2 = cols[cols.size() - 3];

  RecoveredCubic out = empty_result();
  out.beta_num = poly_of({-cn2.A, cn2.C - cn.A, cn.C});
  out.beta_den = poly_of({cn1.A, -cn1.C});
  const Polynomial& N = out.beta_num;
  const Polynomial& D = out.beta_den;
  Polynomial full = Rational(cn1.C) * (N * N) + poly_of({cn2.C - cn1.B, cn.C}) * (N * D) -
                    poly_of({cn2.B, cn.B}) * (D * D);
  finish_raw(out, full);
  locate(out, digits);
  return out;
}

Matrix3 eventual_transfer_matrix(const std::vector<Integer>& pre_a, const std::vector<Integer>& pre_b,
                                 const std::vector<Integer>& period_a, const std::vector<Integer>& period_b) {
  Matrix3 P = identity3();
  Matrix3 P_inv = identity3();
  for (std::size_t i = 0; i < pre_a.size(); ++i) {
    P = transfer_matrix(pre_a[i], pre_b[i]) * P;
    P_inv = P_inv * inverse_transfer_matrix(pre_a[i], pre_b[i]);
  }
  Matrix3 Q = identity3();
  for (std::size_t i = 0; i < period_a.size(); ++i) Q = transfer_matrix(period_a[i], period_b[i]) * Q;
  return P_inv * Q * P;
}

RecoveredCubic recover_cubic_eventual(const std::vector<Integer>& pre_a, const std::vector<Integer>& pre_b,
                                      const std::vector<Integer>& period_a, const std::vector<Integer>& period_b) {
  require_valid(pre_a, pre_b, period_a, period_b);
  auto digits = SequencePair::periodic(pre_a, pre_b, period_a, period_b);
  Matrix3 M = eventual_transfer_matrix(pre_a, pre_b, period_a, period_b);
  if (det(M) != 1) throw Error(ErrorKind::SingularRFactor, "transfer matrix has determinant " + det(M).get_str());
  auto m = [&](int i, int j) -> const Integer& { return M[i - 1][j - 1]; };

  RecoveredCubic out = empty_result();
  out.transfer = M;
  Polynomial N = poly_of({m(3, 1), m(1, 1) - m(3, 3), -m(1, 3)});
  Polynomial D = poly_of({-m(2, 1), m(2, 3)});
  Polynomial full = poly_of({m(3, 2), m(1, 2)}) * (D * D) + poly_of({m(2, 2) - m(3, 3), -m(1, 3)}) * (N * D) -
                    Rational(m(2, 3)) * (N * N);
  if (D.is_zero()) {
    // Beta drops out of the first eigenvector relation, which then pins alpha
    // alone; the second relation gives beta.
    out.quartic_coefficient = full.coeff(4).get_num();
    if (N.is_zero()) throw Error(ErrorKind::DegenerateSystem, "transfer matrix gives no relation for alpha");
    out.raw = N.primitive();
    out.beta_num = poly_of({m(3, 2), m(1, 2)});
    out.beta_den = poly_of({m(3, 3) - m(2, 2), m(1, 3)});
  } else {
    out.beta_num = N;
    out.beta_den = D;
    finish_raw(out, full);
  }
  locate(out, digits);
  return out;
}

RecoveredCubic recover_from_digits(const SequencePair& digits) {
  const auto& p = digits.periodicity();
  if (!p) throw Error(ErrorKind::DegenerateSystem, "digits are not known to be periodic");
  auto slice = [&](const std::vector<Integer>& v, std::size_t from, std::size_t to) {
    return std::vector<Integer>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
  };
  std::size_t k = p->preperiod, end = p->preperiod + p->period;
  if (k == 0) return recover_cubic_pure(slice(digits.a(), 0, end), slice(digits.b(), 0, end));
  return recover_cubic_eventual(slice(digits.a(), 0, k), slice(digits.b(), 0, k), slice(digits.a(), k, end),
                                slice(digits.b(), k, end));
}

std::vector<BetaCandidate> default_beta_candidates() {
  Polynomial x = Polynomial::x();
  Polynomial one = Polynomial::constant(1);
  return {
      {one, x},
      {x + one, x},
      {Rational(2) * x + one, x},
      {x, one},
      {x * x, one},
      {x * x - x, one},
      {x * x + x, one},
  };
}

namespace {

struct ScanTask {
  FieldPtr field;
  const BetaCandidate* beta;
};

ScanRecord run_task(const ScanTask& task, const ScanOptions& options) {
  ScanRecord rec;
  const auto coeffs = task.field->min_poly().integer_coeffs_high_first();
  rec.min_poly = join_digits(coeffs, coeffs.size());
  std::string lit = task.field->literal();
  rec.interval = lit.substr(lit.find('@') + 1);
  rec.beta_expr = task.beta->literal();
  try {
    AlgebraicNumber alpha = AlgebraicNumber::generator(task.field);
    AlgebraicNumber beta = (*task.beta)(alpha);
    RootBracket hint = RootBracket::of(*task.field);
    if (sign(beta, &hint) <= 0) {
      rec.status = "beta_not_positive";
      return rec;
    }
    Expansion e = bcf_expand(alpha, beta, options.horizon);
    const SequencePair& d = e.digits;
    if (const auto& p = d.periodicity()) {
      rec.status = "periodic";
      rec.preperiod = p->preperiod;
      rec.period = p->period;
    } else if (d.is_finite()) {
      rec.status = "terminated";
    } else {
      rec.status = "no_period_within_horizon";
    }
    rec.digits_preview = "a=" + join_digits(d.a(), options.preview) + ";b=" + join_digits(d.b(), options.preview);
  } catch (const Error& err) {
    rec.status = "error:" + std::string(to_string(err.kind()));
  }
  return rec;
}

// Positive real roots of an irreducible cubic, each with an isolating interval
// that lies in [0, inf).
std::vector<std::pair<Rational, Rational>> positive_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, Rational>> out;
  for (auto r : isolate_real_roots(p)) {
    while (r.lo < 0 && r.hi > 0) refine_root(p, r.lo, r.hi, (r.hi - r.lo) / 2);
    if (r.lo >= 0) out.emplace_back(r.lo, r.hi);
  }
  return out;
}

}  // namespace

std::vector<ScanRecord> conjecture_scan(const ScanOptions& options) {
  const CubicFamily& f = options.family;
  std::vector<BetaCandidate> betas = options.betas.empty() ? default_beta_candidates() : options.betas;
  std::vector<ScanTask> tasks;
  for (long c2 = f.c2_lo; c2 <= f.c2_hi; ++c2) {
    for (long c1 = f.c1_lo; c1 <= f.c1_hi; ++c1) {
      for (long c0 = f.c0_lo; c0 <= f.c0_hi; ++c0) {
        std::vector<Integer> coeffs{1, c2, c1, c0};
        Polynomial p = Polynomial::from_high_first(coeffs);
        if (!rational_roots(p).empty()) continue;
        for (const auto& [lo, hi] : positive_roots(p)) {
          FieldPtr field = NumberField::create(coeffs, lo, hi);
          for (const auto& b : betas) tasks.push_back({field, &b});
        }
      }
    }
  }
  std::vector<ScanRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) records[i] = run_task(tasks[i], options);
  };
  std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  return records;
}

}  // namespace bcf
