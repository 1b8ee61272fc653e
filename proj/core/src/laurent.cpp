#include "knotconc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotconc {

LaurentPoly::LaurentPoly(const Rational& c, long exp) {
  if (c != 0) {
    // Callers may hand over an uncanonicalized mpq (e.g. mpq_class(2, 4));
    // term maps must always hold reduced fractions for == to be exact.
    Rational r = c;
    r.canonicalize();
    terms_[exp] = r;
  }
}

LaurentPoly::LaurentPoly(long c, long exp) {
  if (c != 0) terms_[exp] = Rational(c);
}

LaurentPoly LaurentPoly::t(long exp) { return LaurentPoly(Rational(1), exp); }

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

long LaurentPoly::span() const { return max_exp() - min_exp(); }

Rational LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long exp, const Rational& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  if (x == 0 && min_exp() < 0)
    throw std::domain_error("evaluation at 0 with negative exponents");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    Rational base = x;
    long k = e;
    if (k < 0) {
      base = Rational(1) / x;
      k = -k;
    }
    for (long i = 0; i < k; ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& p) { return p * s; }

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    if (e != 0) r.terms_[e - 1] = c * Rational(e);
  return r;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::inflate(unsigned long c) const {
  if (c == 0) throw std::domain_error("inflate with c = 0");
  LaurentPoly r;
  for (const auto& [e, k] : terms_) r.terms_[e * static_cast<long>(c)] = k;
  return r;
}

LaurentPoly LaurentPoly::normalize() const {
  if (is_zero()) return LaurentPoly();
  LaurentPoly r = shifted(-min_exp());
  // Clear denominators, then remove integer content.
  Integer den(1);
  for (const auto& [e, c] : r.terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Integer content(0);
  for (auto& [e, c] : r.terms_) {
    c *= Rational(den);
    c.canonicalize();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational scale = Rational(1) / Rational(content);
  if (r.terms_.rbegin()->second < 0) scale = -scale;
  for (auto& [e, c] : r.terms_) {
    c *= scale;
    c.canonicalize();
  }
  return r;
}

bool LaurentPoly::is_symmetric() const {
  if (is_zero()) throw std::domain_error("is_symmetric of zero polynomial");
  return normalize() == conjugate().normalize();
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az || bz) return az == bz ? 0 : (az ? -1 : 1);
  if (a.span() != b.span()) return a.span() < b.span() ? -1 : 1;
  long lo_a = a.min_exp(), lo_b = b.min_exp();
  for (long i = 0; i <= a.span(); ++i) {
    Rational ca = a.coeff(lo_a + i), cb = b.coeff(lo_b + i);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (lo_a != lo_b) return lo_a < lo_b ? -1 : 1;
  return 0;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.get_str() << "*t^" << it->first;
  }
  return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Parses one term: [sign] [coeff] [* t [^ exp]]
LaurentPoly parse_term(const std::string& s, size_t& i) {
  skip_ws(s, i);
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
    skip_ws(s, i);
  }
  std::string num;
  while (i < s.size() &&
         (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) {
    num += s[i++];
  }
  Rational c(1);
  bool have_coeff = !num.empty();
  if (have_coeff) {
    c = Rational(num);
    c.canonicalize();
  }
  skip_ws(s, i);
  if (i < s.size() && s[i] == '*') {
    ++i;
    skip_ws(s, i);
  }
  long exp = 0;
  if (i < s.size() && s[i] == 't') {
    ++i;
    exp = 1;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws(s, i);
      std::string es;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) es += s[i++];
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        es += s[i++];
      if (es.empty() || (es.size() == 1 && !std::isdigit(static_cast<unsigned char>(es[0]))))
        throw std::invalid_argument("bad exponent in polynomial text");
      exp = std::stol(es);
    }
  } else if (!have_coeff) {
    throw std::invalid_argument("bad term in polynomial text");
  }
  if (neg) c = -c;
  return LaurentPoly(c, exp);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw std::invalid_argument("empty polynomial text");
  LaurentPoly acc;
  bool first = true;
  while (i < text.size()) {
    if (!first) {
      skip_ws(text, i);
      if (i >= text.size()) break;
      if (text[i] == '+') {
        ++i;
      } else if (text[i] != '-') {
        throw std::invalid_argument("expected '+' between terms");
      }
    }
    acc = acc + parse_term(text, i);
    first = false;
    skip_ws(text, i);
  }
  return acc;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                           const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  const long sa = a.min_exp(), sb = b.min_exp();
  LaurentPoly r = a.shifted(-sa);
  LaurentPoly d = b.shifted(-sb);
  LaurentPoly q;
  const long db = d.max_exp();
  const Rational lead = d.coeff(db);
  while (!r.is_zero() && r.max_exp() >= db) {
    const long e = r.max_exp() - db;
    const Rational c = r.coeff(r.max_exp()) / lead;
    LaurentPoly m(c, e);
    q = q + m;
    r = r - m * d;
  }
  // Undo the shifts: a = q * b + rem, with the unit bookkeeping folded in.
  return {q.shifted(sa - sb), r.shifted(sa)};
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) throw std::domain_error("divisibility by zero polynomial");
  return divmod(a, b).second.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd(0, 0) is undefined");
  LaurentPoly x = a.normalize(), y = b.normalize();
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = y;
    y = r.is_zero() ? r : r.normalize();
  }
  return x.normalize();
}

Rational resultant(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  // Euclidean-style computation on the shifted ordinary representatives.
  LaurentPoly x = a.shifted(-a.min_exp());
  LaurentPoly y = b.shifted(-b.min_exp());
  Rational res(1);
  while (true) {
    const long dx = x.max_exp(), dy = y.max_exp();
    if (dy == 0) {
      Rational c = y.coeff(0);
      Rational p(1);
      for (long i = 0; i < dx; ++i) p *= c;
      return res * p;
    }
    LaurentPoly r = divmod(x, y).second;
    if (r.is_zero()) return Rational(0);
    r = r.shifted(-r.min_exp());
    const long dr = r.max_exp();
    Rational ly = y.coeff(dy);
    Rational p(1);
    for (long i = 0; i < dx - dr; ++i) p *= ly;
    res *= p;
    if (((dx % 2) == 1) && ((dy % 2) == 1)) res = -res;
    x = y;
    y = r;
  }
}

}  // namespace knotconc
