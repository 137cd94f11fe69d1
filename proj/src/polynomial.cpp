#include "bcf/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bcf/error.hpp"

namespace bcf {

Polynomial::Polynomial(std::vector<Rational> low_first) : coeffs_(std::move(low_first)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> low_first) : coeffs_(low_first) { trim(); }

Polynomial Polynomial::from_high_first(const std::vector<Integer>& coeffs) {
  std::vector<Rational> low(coeffs.rbegin(), coeffs.rend());
  return Polynomial(std::move(low));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content(0);
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(v / content);
  return Polynomial(std::move(out));
}

std::vector<Integer> Polynomial::integer_coeffs_high_first() const {
  Polynomial p = primitive();
  std::vector<Integer> out;
  for (auto it = p.coeffs_.rbegin(); it != p.coeffs_.rend(); ++it) out.push_back(it->get_num());
  return out;
}

bool Polynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) {
      if (!unit) os << '*';
      os << var;
      if (i >= 2) os << '^' << i;
    }
  }
  return os.str();
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational inv_lead = 1 / divisor.leading();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + dd);
    Rational f = rem[top] * inv_lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= f * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& p, const Polynomial& q) { return divmod(p, q).remainder; }

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p, b = q;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial r0 = p, r1 = q;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    Polynomial r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

namespace {

int count_open(const Polynomial& sqf, const std::vector<Polynomial>& chain, const Rational& lo,
               const Rational& hi) {
  // For squarefree p, V(lo) - V(hi) counts the roots in (lo, hi].
  int n = sign_variations(chain, lo) - sign_variations(chain, hi);
  if (sqf.sign_at(hi) == 0) --n;
  return n;
}

}  // namespace

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorKind::DegenerateSystem, "root count of the zero polynomial");
  if (lo >= hi) return 0;
  Polynomial sqf = squarefree_part(p);
  return count_open(sqf, sturm_chain(sqf), lo, hi);
}

Rational root_bound(const Polynomial& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

namespace {

void isolate(const Polynomial& sqf, const std::vector<Polynomial>& chain, const Rational& lo,
             const Rational& hi, std::vector<RootInterval>& out) {
  int n = count_open(sqf, chain, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sqf.sign_at(mid) != 0) {
    isolate(sqf, chain, lo, mid, out);
    isolate(sqf, chain, mid, hi, out);
    return;
  }
  // Exact rational root at the midpoint: carve out a clean neighbourhood.
  Rational delta = (hi - lo) / 4;
  while (sqf.sign_at(mid - delta) == 0 || sqf.sign_at(mid + delta) == 0 ||
         count_open(sqf, chain, mid - delta, mid + delta) != 1) {
    delta /= 2;
  }
  isolate(sqf, chain, lo, mid - delta, out);
  out.push_back({mid, mid});
  isolate(sqf, chain, mid + delta, hi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  Polynomial sqf = squarefree_part(p);
  Rational b = root_bound(sqf);
  isolate(sqf, sturm_chain(sqf), -b, b, out);
  return out;
}

void refine_root(const Polynomial& p, Rational& lo, Rational& hi, const Rational& max_width) {
  if (lo == hi) return;
  int s_lo = p.sign_at(lo);
  while (hi - lo > max_width) {
    Rational mid = (lo + hi) / 2;
    int s = p.sign_at(mid);
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    if (s == s_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  Polynomial sqf = squarefree_part(p).primitive();
  const Rational lead = sqf.leading();
  const Rational width = 1 / (lead * lead * 2);
  for (RootInterval r : isolate_real_roots(sqf)) {
    if (r.exact()) {
      out.push_back(r.lo);
      continue;
    }
    refine_root(sqf, r.lo, r.hi, width);
    Rational s = r.exact() ? r.lo : simplest_between(r.lo, r.hi);
    if (sqf.sign_at(s) == 0) out.push_back(s);
  }
  return out;
}

std::pair<Rational, Rational> enclose(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  Rational acc_lo = p.leading(), acc_hi = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) {
    Rational c1 = acc_lo * lo, c2 = acc_lo * hi, c3 = acc_hi * lo, c4 = acc_hi * hi;
    Rational mn = std::min({c1, c2, c3, c4});
    Rational mx = std::max({c1, c2, c3, c4});
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    acc_lo = mn + c;
    acc_hi = mx + c;
  }
  return {acc_lo, acc_hi};
}

}  // namespace bcf
