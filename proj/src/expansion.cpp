#include "bcf/expansion.hpp"

#include <string>

#include "bcf/error.hpp"
#include "bcf/periodicity.hpp"

namespace bcf {

namespace {

bool is_integral(const AlgebraicNumber& x) {
  auto r = x.as_rational();
  return r && is_integer(*r);
}

}  // namespace

StepResult bcf_step(const ExpansionState& state, RootBracket* hint) {
  if (state.index == 0) {
    if (sign(state.alpha, hint) <= 0) {
      throw Error(ErrorKind::NonPositiveInput, "alpha must be positive, got " + state.alpha.to_string());
    }
    if (sign(state.beta, hint) <= 0) {
      throw Error(ErrorKind::NonPositiveInput, "beta must be positive, got " + state.beta.to_string());
    }
  }
  StepResult out{floor_of(state.alpha, hint), floor_of(state.beta, hint), std::nullopt};
  if (is_integral(state.beta)) return out;
  AlgebraicNumber frac_beta = state.beta - Rational(out.b);
  AlgebraicNumber frac_alpha = state.alpha - Rational(out.a);
  AlgebraicNumber one = AlgebraicNumber::from_rational(state.alpha.field(), Rational(1));
  out.next = ExpansionState{one / frac_beta, frac_alpha / frac_beta, state.index + 1};
  return out;
}

ExpansionState Expansion::state_at(std::size_t n) const {
  if (n < states.size()) return states[n];
  const auto& p = digits.periodicity();
  if (!p) {
    throw Error(ErrorKind::IndexOutOfRange, "state " + std::to_string(n) + " was not computed (" +
                                                std::to_string(states.size()) + " available)");
  }
  ExpansionState s = states[p->preperiod + (n - p->preperiod) % p->period];
  s.index = n;
  return s;
}

Expansion bcf_expand(const AlgebraicNumber& alpha, const AlgebraicNumber& beta, std::size_t max_terms) {
  if (max_terms == 0) throw Error(ErrorKind::Usage, "max_terms must be at least 1");
  FieldPtr field = common_field(alpha, beta);
  RootBracket bracket = RootBracket::of(*field);
  Expansion out;
  out.states.push_back(ExpansionState{alpha.embed_in(field), beta.embed_in(field), 0});

  PeriodDetector detector;
  detector.observe(out.states.back());
  std::vector<Integer> a, b;
  while (a.size() < max_terms) {
    StepResult step = bcf_step(out.states.back(), &bracket);
    if (step.terminated()) {
      b.push_back(std::move(step.b));
      out.digits = SequencePair::finite(std::move(a), std::move(b), out.states.back().alpha);
      return out;
    }
    a.push_back(std::move(step.a));
    b.push_back(std::move(step.b));
    out.states.push_back(std::move(*step.next));
    if (auto p = detector.observe(out.states.back())) {
      // Equal states produce equal futures: copy digits instead of recomputing.
      while (a.size() < max_terms) {
        std::size_t src = a.size() - p->period;
        a.push_back(a[src]);
        b.push_back(b[src]);
      }
      out.digits = SequencePair(std::move(a), std::move(b));
      out.digits.set_periodicity(*p);
      return out;
    }
  }
  out.digits = SequencePair(std::move(a), std::move(b));
  return out;
}

RationalExpansion bcf_expand_rational(const Rational& alpha, const Rational& beta) {
  if (sgn(alpha) <= 0 || sgn(beta) <= 0) {
    throw Error(ErrorKind::NonPositiveInput, "rational expansion needs alpha, beta > 0");
  }
  Integer w;
  mpz_lcm(w.get_mpz_t(), alpha.get_den_mpz_t(), beta.get_den_mpz_t());
  Integer u = alpha.get_num() * (w / alpha.get_den());
  Integer v = beta.get_num() * (w / beta.get_den());

  RationalExpansion out;
  std::vector<Integer> a, b;
  out.w.push_back(w);
  while (true) {
    Integer ai, bi, rem;
    mpz_fdiv_q(ai.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t());
    mpz_fdiv_qr(bi.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), w.get_mpz_t());
    if (rem == 0) {
      b.push_back(std::move(bi));
      out.w.push_back(Integer(0));
      out.digits = SequencePair::finite(std::move(a), std::move(b), AlgebraicNumber::rational(make_rational(u, w)));
      return out;
    }
    Integer next_v = u - ai * w;
    u = w;
    v = std::move(next_v);
    w = std::move(rem);
    a.push_back(std::move(ai));
    b.push_back(std::move(bi));
    out.w.push_back(w);
  }
}

}  // namespace bcf
