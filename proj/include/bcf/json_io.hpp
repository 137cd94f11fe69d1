#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "bcf/approx.hpp"
#include "bcf/expansion.hpp"
#include "bcf/recovery.hpp"
#include "bcf/tree_eval.hpp"
#include "bcf/validation.hpp"

namespace bcf {

// JSON views of library results. Keys come out sorted and every big integer
// is a decimal string.
using Json = nlohmann::json;

Json digits_json(const std::vector<Integer>& digits);
Json to_json(const ConvergentTriple& c, std::size_t decimal_digits);
Json to_json(const Expansion& e, std::size_t decimal_digits);
Json to_json(const ValidationReport& r);
Json to_json(const ConvergenceDiagnostics& d);
Json to_json(const Matrix3& m);
Json to_json(const RecoveredCubic& r, std::size_t decimal_digits);
Json to_json(const ScanRecord& r);
Json to_json(const ApproxExpansion& e);

}  // namespace bcf
