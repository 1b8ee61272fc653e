#include "knotconc/blanchfield.hpp"

#include <sstream>

#include "knotconc/factor.hpp"

namespace knotconc {

namespace {

bool is_squarefree(const LaurentPoly& p) {
  if (p.is_constant()) return true;
  return gcd(p, p.derivative()).is_constant();
}

}  // namespace

RationalFunctionClass::RationalFunctionClass(const LaurentPoly& num,
                                             const LaurentPoly& den) {
  if (den.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  if (den.is_constant() || num.is_zero()) return;  // zero class
  LaurentPoly n = divmod(num, den).second;
  if (n.is_zero()) return;
  LaurentPoly g = gcd(n, den);
  LaurentPoly d = den;
  if (!g.is_constant()) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
    if (d.is_constant()) return;
  }
  // Renormalize the denominator, compensating in the numerator so that the
  // value num/den is preserved exactly.
  LaurentPoly dn = d.normalize();
  LaurentPoly unit = divide_exact(dn, d);  // a unit q*t^k
  num_ = divmod(n * unit, dn).second;
  den_ = dn;
  if (num_.is_zero()) den_ = LaurentPoly(Rational(1));
}

bool RationalFunctionClass::same_class(const RationalFunctionClass& o) const {
  LaurentPoly diff = num_ * o.den_ - o.num_ * den_;
  if (diff.is_zero()) return true;
  return divides(den_ * o.den_, diff);
}

RationalFunctionClass RationalFunctionClass::scaled(const LaurentPoly& f) const {
  if (is_zero_class() || f.is_zero()) return {};
  return RationalFunctionClass(num_ * f, den_);
}

RationalFunctionClass RationalFunctionClass::conjugate_class() const {
  if (is_zero_class()) return {};
  return RationalFunctionClass(num_.conjugate(), den_.conjugate());
}

RationalFunctionClass RationalFunctionClass::inflate(unsigned long c) const {
  if (is_zero_class()) return {};
  return RationalFunctionClass(num_.inflate(c), den_.inflate(c));
}

std::string RationalFunctionClass::to_string() const {
  if (is_zero_class()) return "0";
  std::ostringstream os;
  os << "(" << num_.to_string() << ") / (" << den_.to_string() << ")";
  return os.str();
}

PairedModule pairing_from_seifert(const SeifertMatrix& V, unsigned long c) {
  if (c == 0) throw std::invalid_argument("complexity must be positive");
  PairedModule m;
  m.provenance.kind = c == 1 ? Provenance::Plain : Provenance::Inflated;
  m.provenance.c = c;
  if (V.size() == 0) return m;  // unknot: zero module
  if (V.size() != 2)
    throw NonCyclicError("only 2x2 Seifert matrices are supported here");
  LaurentPoly delta = alexander_poly(V);
  if (!is_squarefree(delta))
    throw NonCyclicError("Alexander polynomial is not squarefree");

  // tV - V^T and its adjugate.
  auto entry = [&](size_t i, size_t j) {
    return LaurentPoly(Rational(V.entries()[i][j]), 1) -
           LaurentPoly(Rational(V.entries()[j][i]), 0);
  };
  LaurentPoly m00 = entry(0, 0), m01 = entry(0, 1);
  LaurentPoly m10 = entry(1, 0), m11 = entry(1, 1);
  LaurentPoly det = m00 * m11 - m01 * m10;
  LaurentPoly adj[2][2] = {{m11, -m01}, {-m10, m00}};

  const LaurentPoly one_minus_t =
      LaurentPoly(Rational(1), 0) - LaurentPoly(Rational(1), 1);
  const long cand[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (const auto& y : cand) {
    LaurentPoly quad;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        quad = quad + Rational(y[i] * y[j]) * adj[i][j];
    RationalFunctionClass cls(one_minus_t * quad, det);
    if (cls.denominator() == delta) {
      m.order = delta.inflate(c).normalize();
      m.b00 = cls.inflate(c);
      if (m.b00.denominator() != m.order)
        throw std::logic_error("inflated pairing lost nondegeneracy");
      return m;
    }
  }
  throw NonCyclicError("no cyclic generator among the candidate vectors");
}

RationalFunctionClass pairing(const PairedModule& m, const LaurentPoly& f,
                              const LaurentPoly& g) {
  return m.b00.scaled(f * g.conjugate());
}

PairedModule localize(const PairedModule& m, const LaurentPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("localization at the zero polynomial");
  PairedModule out;
  out.provenance.kind = Provenance::Localized;
  out.provenance.p = p;
  if (m.is_zero_module()) return out;
  FactorList fl = factor(m.order);
  LaurentPoly keep(Rational(1)), drop(Rational(1));
  for (const auto& [q, mult] : fl.factors) {
    LaurentPoly power(Rational(1));
    for (unsigned i = 0; i < mult; ++i) power = power * q;
    if (p.is_constant() || gcd(q, p).is_constant())
      drop = drop * power;
    else
      keep = keep * power;
  }
  if (keep.is_constant()) return out;  // coprime torsion annihilated
  // The kept summand is generated by drop * x0, so the pairing at the new
  // generator is drop * conj(drop) * b00.
  out.order = keep.normalize();
  out.b00 = m.b00.scaled(drop * drop.conjugate());
  // When every factor of p is symmetric the dropped torsion is orthogonal
  // to the kept part and the restricted pairing stays nondegenerate. For
  // non-symmetric p the conjugate of a dropped factor can land inside the
  // kept order, degenerating (even zeroing) the restriction; that is the
  // correct value of the form there, not an error.
  return out;
}

std::vector<Submodule> submodules(const PairedModule& m) {
  if (m.is_zero_module()) return {Submodule{LaurentPoly(Rational(1))}};
  FactorList fl = factor(m.order);
  std::vector<LaurentPoly> divisors{LaurentPoly(Rational(1))};
  for (const auto& [q, mult] : fl.factors) {
    std::vector<LaurentPoly> next;
    LaurentPoly power(Rational(1));
    for (unsigned e = 0; e <= mult; ++e) {
      for (const auto& d : divisors) next.push_back((d * power).normalize());
      power = power * q;
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end(),
            [](const LaurentPoly& a, const LaurentPoly& b) {
              return LaurentPoly::compare(a, b) < 0;
            });
  std::vector<Submodule> out;
  for (auto& d : divisors) out.push_back(Submodule{std::move(d)});
  return out;
}

bool is_isotropic(const PairedModule& m, const Submodule& s) {
  if (m.is_zero_module()) return true;
  if (!divides(s.generator_divisor, m.order))
    throw std::invalid_argument("submodule generator does not divide the order");
  return pairing(m, s.generator_divisor, s.generator_divisor).is_zero_class();
}

LaurentPoly perp_divisor(const PairedModule& m, const Submodule& s) {
  if (m.is_zero_module()) return m.order.normalize();
  if (!divides(s.generator_divisor, m.order))
    throw std::invalid_argument("submodule generator does not divide the order");
  // With b00 = N/order and gcd(N, order) = 1, the annihilator condition
  // order | h * conj(g) * N reduces to (order / gcd(order, conj(g))) | h.
  LaurentPoly g = gcd(m.order, s.generator_divisor.conjugate());
  return divide_exact(m.order, g).normalize();
}

std::vector<IsotropicFinding> find_isotropic(const PairedModule& m) {
  std::vector<IsotropicFinding> out;
  if (m.is_zero_module()) return out;
  for (const auto& s : submodules(m)) {
    if (s.generator_divisor == m.order.normalize()) continue;  // zero submodule
    if (!is_isotropic(m, s)) continue;
    IsotropicFinding f;
    f.sub = s;
    f.lagrangian = perp_divisor(m, s) == s.generator_divisor;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace knotconc
