#include "bcf/validation.hpp"

#include <string>

#include "bcf/error.hpp"

namespace bcf {

std::string_view to_string(ValidationRule rule) {
  switch (rule) {
    case ValidationRule::ABelowOne: return "a_below_one";
    case ValidationRule::ALessThanB: return "a_less_than_b";
    case ValidationRule::EqualThenBZero: return "equal_then_b_zero";
  }
  return "unknown";
}

ValidationReport validate(const SequencePair& seqs) {
  ValidationReport report;
  std::size_t last = seqs.size();  // exclusive
  if (const auto& p = seqs.periodicity()) {
    // Indices 1..k+m visit every residue of the period, including index 0's
    // when the pair is purely periodic.
    last = p->preperiod + p->period + 1;
  }
  for (std::size_t i = 1; i < last; ++i) {
    const Integer& a = seqs.a_at(i);
    const Integer& b = seqs.b_at(i);
    report.tested_through = i;
    if (a < 1) report.violations.push_back({i, ValidationRule::ABelowOne});
    if (a < b) report.violations.push_back({i, ValidationRule::ALessThanB});
    if (a == b) {
      if (!seqs.has_b(i + 1)) {
        report.indeterminate.push_back(i);
      } else if (seqs.b_at(i + 1) == 0) {
        report.violations.push_back({i, ValidationRule::EqualThenBZero});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

namespace {

struct Tail {
  AlgebraicNumber alpha;
  AlgebraicNumber beta;
};

// Tails 0..n under the given digits, or stops early (returning false through
// `positive`) once a tail is not positive.
std::vector<Tail> tails(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, const SequencePair& seqs,
                        std::size_t n, RootBracket& hint, bool& positive) {
  FieldPtr f = common_field(alpha, beta);
  std::vector<Tail> out{{alpha.embed_in(f), beta.embed_in(f)}};
  if (sign(out[0].alpha, &hint) <= 0 || sign(out[0].beta, &hint) <= 0) {
    throw Error(ErrorKind::NonPositiveInput, "representation checks need alpha, beta > 0");
  }
  positive = true;
  const AlgebraicNumber one = AlgebraicNumber::from_rational(f, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    const Tail& t = out.back();
    AlgebraicNumber denom = t.beta - Rational(seqs.b_at(k));
    if (denom.is_zero()) {
      throw Error(ErrorKind::DivisionByZero, "beta_" + std::to_string(k) + " equals b_" + std::to_string(k) +
                                                 "; the representation breaks down");
    }
    Tail next{one / denom, (t.alpha - Rational(seqs.a_at(k))) / denom};
    bool ok = sign(next.alpha, &hint) > 0 && sign(next.beta, &hint) > 0;
    out.push_back(std::move(next));
    if (!ok) {
      positive = false;
      break;
    }
  }
  return out;
}

}  // namespace

bool check_proper(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, const SequencePair& seqs,
                  std::size_t n) {
  RootBracket hint = RootBracket::of(*common_field(alpha, beta));
  bool positive = true;
  auto ts = tails(alpha, beta, seqs, n, hint, positive);
  if (!positive) return false;
  const AlgebraicNumber one = AlgebraicNumber::from_rational(ts[0].alpha.field(), Rational(1));
  for (std::size_t k = 1; k <= n; ++k) {
    if (compare(ts[k].alpha, one, &hint) <= 0) return false;
    if (compare(ts[k].alpha, ts[k].beta, &hint) <= 0) return false;
  }
  return true;
}

bool check_appropriate(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, const SequencePair& seqs,
                       std::size_t n) {
  RootBracket hint = RootBracket::of(*common_field(alpha, beta));
  bool positive = true;
  auto ts = tails(alpha, beta, seqs, n, hint, positive);
  if (!positive) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (floor_of(ts[k].alpha, &hint) != seqs.a_at(k)) return false;
    if (floor_of(ts[k].beta, &hint) != seqs.b_at(k)) return false;
  }
  return true;
}

}  // namespace bcf
