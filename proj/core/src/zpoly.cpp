#include "knotconc/zpoly.hpp"

#include <stdexcept>

namespace knotconc::zpoly {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& s) {
  if (s == 0) return {};
  ZPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Integer(i);
  trim(r);
  return r;
}

Integer content(const ZPoly& a) {
  Integer g(0);
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(const ZPoly& a) {
  if (a.empty()) return {};
  Integer g = content(a);
  if (lc(a) < 0) g = -g;
  ZPoly r = a;
  for (auto& c : r) c /= g;
  return r;
}

Rational evaluate(const ZPoly& a, const Rational& x) {
  Rational acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Integer evaluate_int(const ZPoly& a, const Integer& x) {
  Integer acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  LaurentPoly n = p.normalize();
  ZPoly r(static_cast<size_t>(n.span()) + 1, Integer(0));
  for (const auto& [e, c] : n.terms()) {
    if (c.get_den() != 1)
      throw std::domain_error("normalized polynomial has non-integer coefficient");
    r[static_cast<size_t>(e)] = c.get_num();
  }
  return r;
}

LaurentPoly to_laurent(const ZPoly& p) {
  LaurentPoly r;
  for (size_t i = 0; i < p.size(); ++i)
    r = r + LaurentPoly(Rational(p[i]), static_cast<long>(i));
  return r;
}

ZPoly squarefree_part(const ZPoly& p) {
  if (p.empty()) throw std::domain_error("squarefree part of zero");
  if (degree(p) == 0) return {Integer(1)};
  LaurentPoly lp = to_laurent(p);
  LaurentPoly g = gcd(lp, lp.derivative());
  return from_laurent(divide_exact(lp.normalize(), g));
}

}  // namespace knotconc::zpoly
