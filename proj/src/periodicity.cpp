#include "bcf/periodicity.hpp"

#include "bcf/error.hpp"

namespace bcf {

std::size_t PeriodDetector::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t seed = k.alpha.hash();
  hash_combine(seed, k.beta.hash());
  return seed;
}

std::optional<Periodicity> PeriodDetector::observe(const ExpansionState& state) {
  const FieldPtr& f = state.alpha.field();
  if (state.beta.field() != f && !state.beta.field()->same_as(*f)) {
    throw Error(ErrorKind::MixedFields, "state has alpha and beta in different fields");
  }
  if (!field_) {
    field_ = f;
  } else if (f != field_ && !f->same_as(*field_)) {
    throw Error(ErrorKind::MixedFields, "states come from different fields: " + field_->literal() + " and " +
                                            f->literal());
  }
  const std::size_t index = count_++;
  auto [it, inserted] = seen_.try_emplace(Key{state.alpha, state.beta}, index);
  if (inserted) return std::nullopt;
  return Periodicity{it->second, index - it->second};
}

PeriodSearch detect_period(const std::vector<ExpansionState>& states, bool terminated) {
  PeriodSearch out;
  out.terminated = terminated;
  if (terminated) return out;
  PeriodDetector detector;
  for (const auto& s : states) {
    if (auto p = detector.observe(s)) {
      out.periodicity = p;
      break;
    }
  }
  return out;
}

PeriodSearch detect_period(const Expansion& expansion) {
  return detect_period(expansion.states, expansion.digits.is_finite());
}

}  // namespace bcf
