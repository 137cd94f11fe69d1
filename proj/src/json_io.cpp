#include "bcf/json_io.hpp"

namespace bcf {

namespace {

Json coeffs_json(const Polynomial& p) {
  Json out = Json::array();
  for (int i = p.degree(); i >= 0; --i) out.push_back(p.coeff(static_cast<std::size_t>(i)).get_num().get_str());
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json digits_json(const std::vector<Integer>& digits) {
  Json out = Json::array();
  for (const auto& d : digits) out.push_back(d.get_str());
  return out;
}

Json to_json(const ConvergentTriple& c, std::size_t decimal_digits) {
  return {{"n", c.n},
          {"A", c.A.get_str()},
          {"B", c.B.get_str()},
          {"C", c.C.get_str()},
          {"alpha", to_fraction_string(c.alpha)},
          {"beta", to_fraction_string(c.beta)},
          {"alpha_dec", to_decimal(c.alpha, decimal_digits)}};
}

Json to_json(const Expansion& e, std::size_t decimal_digits) {
  const SequencePair& d = e.digits;
  Json out;
  out["a"] = digits_json(d.a());
  out["b"] = digits_json(d.b());
  out["terminated"] = d.is_finite();
  std::optional<std::size_t> pre, per;
  if (d.periodicity()) {
    pre = d.periodicity()->preperiod;
    per = d.periodicity()->period;
  }
  out["preperiod"] = optional_json(pre);
  out["period"] = optional_json(per);
  out["terminal"] = d.terminal() ? Json(d.terminal()->to_string("alpha")) : Json(nullptr);
  Json convs = Json::array();
  if (d.size() > 0) {
    for (const auto& c : convergents(d, d.size() - 1)) convs.push_back(to_json(c, decimal_digits));
  }
  out["convergents"] = std::move(convs);
  return out;
}

Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"index", v.index}, {"rule", std::string(to_string(v.rule))}});
  return {{"valid", r.valid},
          {"violations", std::move(violations)},
          {"indeterminate", r.indeterminate},
          {"tested_through", r.tested_through}};
}

Json to_json(const ConvergenceDiagnostics& d) {
  Json delta = Json::array(), dmax = Json::array();
  for (const auto& x : d.delta) delta.push_back({{"n", x.n}, {"value", to_fraction_string(x.value)}});
  for (const auto& x : d.dmax) dmax.push_back({{"n", x.n}, {"value", to_fraction_string(x.value)}});
  return {{"count", d.count},
          {"delta", std::move(delta)},
          {"dmax", std::move(dmax)},
          {"monotone", d.monotone},
          {"contracting", d.contracting},
          {"monotone_failures", d.monotone_failures},
          {"contraction_failures", d.contraction_failures},
          {"certified", d.certified()}};
}

Json to_json(const Matrix3& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back({row[0].get_str(), row[1].get_str(), row[2].get_str()});
  return out;
}

Json to_json(const RecoveredCubic& r, std::size_t decimal_digits) {
  return {{"poly", coeffs_json(r.poly)},
          {"poly_text", r.poly.to_string()},
          {"raw_poly", coeffs_json(r.raw)},
          {"quartic_coefficient", r.quartic_coefficient.get_str()},
          {"beta_expr", RationalFunction{r.beta_num, r.beta_den}.literal()},
          {"alpha", r.field->literal()},
          {"alpha_dec", approximate(r.alpha, decimal_digits).decimal},
          {"beta_dec", approximate(r.beta, decimal_digits).decimal},
          {"transfer", to_json(r.transfer)}};
}

Json to_json(const ScanRecord& r) {
  return {{"min_poly", r.min_poly},
          {"interval", r.interval},
          {"beta_expr", r.beta_expr},
          {"status", r.status},
          {"preperiod", optional_json(r.preperiod)},
          {"period", optional_json(r.period)},
          {"digits_preview", r.digits_preview}};
}

Json to_json(const ApproxExpansion& e) {
  return {{"heuristic", true},
          {"a", digits_json(e.a)},
          {"b", digits_json(e.b)},
          {"terminated", e.terminated},
          {"precision_exhausted", e.precision_exhausted},
          {"terminal", optional_json(e.terminal)},
          {"preperiod", nullptr},
          {"period", nullptr},
          {"working_digits", e.digits},
          {"guard_digits", e.guard}};
}

}  // namespace bcf
