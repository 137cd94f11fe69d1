#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bcf/expansion.hpp"
#include "bcf/sequence.hpp"

namespace bcf {

/// Exact repeat detection over a stream of expansion states. States are kept
/// in canonical form, so equality is coefficient equality and hashing is exact.
class PeriodDetector {
 public:
  /// Returns the (preperiod, period) of the first repeat, once it is seen.
  /// Throws MixedFields if states arrive from different fields.
  std::optional<Periodicity> observe(const ExpansionState& state);

 private:
  struct Key {
    AlgebraicNumber alpha;
    AlgebraicNumber beta;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  FieldPtr field_;
  std::size_t count_ = 0;
  std::unordered_map<Key, std::size_t, KeyHash> seen_;
};

struct PeriodSearch {
  std::optional<Periodicity> periodicity;
  bool terminated = false;  // the run ended on an integral beta
};

/// First (k, m) with states[k] == states[k + m] in the list.
PeriodSearch detect_period(const std::vector<ExpansionState>& states, bool terminated = false);

/// Same, over a finished expansion.
PeriodSearch detect_period(const Expansion& expansion);

}  // namespace bcf
