#include "bcf/literal.hpp"

#include <cctype>

#include "bcf/error.hpp"

namespace bcf {

namespace {

std::string coeff_list(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    if (i != p.degree()) s += ',';
    s += p.coeff(static_cast<std::size_t>(i)).get_num().get_str();
  }
  return s;
}

// Comma-separated integers starting at text[offset..].
std::vector<Integer> parse_integer_list(std::string_view whole, std::size_t begin, std::size_t end) {
  std::vector<Integer> out;
  std::size_t pos = begin;
  for (;;) {
    std::size_t comma = whole.find(',', pos);
    if (comma == std::string_view::npos || comma > end) comma = end;
    out.push_back(parse_integer(whole.substr(pos, comma - pos), pos));
    if (comma == end) break;
    pos = comma + 1;
  }
  return out;
}

Polynomial from_list(const std::vector<Integer>& coeffs) { return Polynomial::from_high_first(coeffs); }

void check_decimal(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  bool dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++digits;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      throw ParseError(offset + i, "unexpected character '" + std::string(1, c) + "' in decimal");
    }
  }
  if (digits == 0) throw ParseError(offset + text.size(), "decimal has no digits");
}

}  // namespace

std::string RationalFunction::literal() const { return "ratfunc:" + coeff_list(num) + "/" + coeff_list(den); }

AlgebraicNumber RationalFunction::operator()(const AlgebraicNumber& x) const {
  AlgebraicNumber d(x.field(), den);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator of " + literal() + " vanishes at alpha");
  return AlgebraicNumber(x.field(), num) / d;
}

NumberSpec parse_number(std::string_view text) {
  NumberSpec spec;
  spec.text = std::string(text);
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "missing literal prefix (rat:, alg:, ratfunc:, dec:)");
  std::string_view prefix = text.substr(0, colon);
  std::size_t body = colon + 1;
  if (body >= text.size()) throw ParseError(body, "empty literal body");

  if (prefix == "rat") {
    spec.kind = LiteralKind::Rat;
    spec.value = AlgebraicNumber::rational(parse_rational(text.substr(body), body));
  } else if (prefix == "alg") {
    spec.kind = LiteralKind::Alg;
    std::size_t at = text.find('@', body);
    if (at == std::string_view::npos) throw ParseError(text.size(), "expected '@<lo>,<hi>' after coefficients");
    auto coeffs = parse_integer_list(text, body, at);
    std::size_t comma = text.find(',', at + 1);
    if (comma == std::string_view::npos) throw ParseError(text.size(), "expected '<lo>,<hi>' interval");
    Rational lo = parse_rational(text.substr(at + 1, comma - at - 1), at + 1);
    Rational hi = parse_rational(text.substr(comma + 1), comma + 1);
    if (!(lo < hi)) throw ParseError(at + 1, "interval must satisfy lo < hi");
    spec.value = AlgebraicNumber::generator(NumberField::create(coeffs, lo, hi));
  } else if (prefix == "ratfunc") {
    spec.kind = LiteralKind::RatFunc;
    std::size_t slash = text.find('/', body);
    if (slash == std::string_view::npos) throw ParseError(text.size(), "expected '/<denominator coefficients>'");
    RationalFunction f{from_list(parse_integer_list(text, body, slash)),
                       from_list(parse_integer_list(text, slash + 1, text.size()))};
    if (f.den.is_zero()) throw ParseError(slash + 1, "denominator polynomial is zero");
    spec.function = std::move(f);
  } else if (prefix == "dec") {
    spec.kind = LiteralKind::Dec;
    check_decimal(text.substr(body), body);
    spec.decimal = std::string(text.substr(body));
  } else {
    throw ParseError(0, "unknown literal prefix '" + std::string(prefix) + "'");
  }
  return spec;
}

std::pair<AlgebraicNumber, AlgebraicNumber> resolve_pair(const NumberSpec& alpha, const NumberSpec& beta) {
  if (alpha.kind == LiteralKind::RatFunc) throw Error(ErrorKind::Usage, "ratfunc literals are only allowed for beta");
  if (alpha.kind == LiteralKind::Dec || beta.kind == LiteralKind::Dec) {
    throw Error(ErrorKind::Usage, "dec literals need --approx");
  }
  AlgebraicNumber a = *alpha.value;
  AlgebraicNumber b = beta.kind == LiteralKind::RatFunc ? (*beta.function)(a) : *beta.value;
  return {a, b};
}

}  // namespace bcf
