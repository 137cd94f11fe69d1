#include "bcf/sequence.hpp"

#include <algorithm>
#include <string>

#include "bcf/error.hpp"

namespace bcf {

namespace {

void require_nonnegative(const std::vector<Integer>& digits, const char* name) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (sgn(digits[i]) < 0) {
      throw Error(ErrorKind::InvalidSequence,
                  std::string(name) + "_" + std::to_string(i) + " = " + digits[i].get_str() + " is negative");
    }
  }
}

}  // namespace

SequencePair::SequencePair(std::vector<Integer> a, std::vector<Integer> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) {
    throw Error(ErrorKind::InvalidSequence, "digit sequences differ in length (" + std::to_string(a_.size()) +
                                                " vs " + std::to_string(b_.size()) + ")");
  }
  require_nonnegative(a_, "a");
  require_nonnegative(b_, "b");
}

SequencePair SequencePair::finite(std::vector<Integer> a, std::vector<Integer> b, AlgebraicNumber terminal) {
  if (b.size() != a.size() + 1) {
    throw Error(ErrorKind::InvalidSequence, "finite expansion needs exactly one more b digit than a digits");
  }
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  SequencePair s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.terminal_ = std::move(terminal);
  return s;
}

SequencePair SequencePair::periodic(std::vector<Integer> pre_a, std::vector<Integer> pre_b,
                                    std::vector<Integer> period_a, std::vector<Integer> period_b) {
  if (period_a.empty()) throw Error(ErrorKind::InvalidSequence, "period must be nonempty");
  const std::size_t k = pre_a.size(), m = period_a.size();
  pre_a.insert(pre_a.end(), period_a.begin(), period_a.end());
  pre_b.insert(pre_b.end(), period_b.begin(), period_b.end());
  SequencePair s(std::move(pre_a), std::move(pre_b));
  s.periodicity_ = Periodicity{k, m};
  return s;
}

void SequencePair::set_periodicity(const Periodicity& p) {
  if (terminal_) throw Error(ErrorKind::InvalidSequence, "a finite expansion cannot be periodic");
  if (p.period == 0) throw Error(ErrorKind::InvalidSequence, "period must be nonempty");
  if (a_.size() < p.preperiod + p.period) {
    throw Error(ErrorKind::InvalidSequence, "stored digits do not cover one full period");
  }
  for (std::size_t i = p.preperiod + p.period; i < a_.size(); ++i) {
    if (a_[i] != a_[i - p.period] || b_[i] != b_[i - p.period]) {
      throw Error(ErrorKind::InvalidSequence, "digit " + std::to_string(i) + " breaks the declared period");
    }
  }
  periodicity_ = p;
}

std::size_t SequencePair::periodic_index(std::size_t i) const {
  const auto& p = *periodicity_;
  return p.preperiod + (i - p.preperiod) % p.period;
}

bool SequencePair::has_a(std::size_t i) const { return i < a_.size() || periodicity_.has_value(); }

bool SequencePair::has_b(std::size_t i) const { return i < b_.size() || periodicity_.has_value(); }

const Integer& SequencePair::a_at(std::size_t i) const {
  if (i < a_.size()) return a_[i];
  if (periodicity_) return a_[periodic_index(i)];
  throw Error(ErrorKind::IndexOutOfRange, "a_" + std::to_string(i) + " is beyond the " +
                                              std::to_string(a_.size()) + " available digits");
}

const Integer& SequencePair::b_at(std::size_t i) const {
  if (i < b_.size()) return b_[i];
  if (periodicity_) return b_[periodic_index(i)];
  throw Error(ErrorKind::IndexOutOfRange, "b_" + std::to_string(i) + " is beyond the " +
                                              std::to_string(b_.size()) + " available digits");
}

SequencePair SequencePair::prefix(std::size_t n) const {
  std::vector<Integer> a, b;
  a.reserve(n);
  b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(a_at(i));
    b.push_back(b_at(i));
  }
  return SequencePair(std::move(a), std::move(b));
}

bool operator==(const SequencePair& x, const SequencePair& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.terminal_ == y.terminal_ && x.periodicity_ == y.periodicity_;
}

std::vector<Integer> parse_digits(std::string_view text, std::size_t offset) {
  std::vector<Integer> out;
  if (text.empty()) throw ParseError(offset, "expected a comma-separated digit list");
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!tok.empty() && tok[0] == '-') throw ParseError(offset + start, "digits must be non-negative");
    out.push_back(parse_integer(tok, offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace bcf
