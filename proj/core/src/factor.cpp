#include "knotconc/factor.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>

#include "knotconc/zpoly.hpp"

namespace knotconc {

LaurentPoly FactorList::remultiply() const {
  LaurentPoly r(unit, shift);
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) r = r * f;
  return r;
}

namespace {


// ---------------------------------------------------------------------------
// Polynomial arithmetic modulo an integer m (dense, coefficients in [0, m)).
// ---------------------------------------------------------------------------

using MPoly = std::vector<Integer>;

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void mtrim(MPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

MPoly mreduce(const ZPoly& p, const Integer& m) {
  MPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = mod(p[i], m);
  mtrim(r);
  return r;
}

MPoly madd(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] + b[i], m);
  for (auto& c : r) c = mod(c, m);
  mtrim(r);
  return r;
}

MPoly msub(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (auto& c : r) c = mod(c, m);
  mtrim(r);
  return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod(c, m);
  mtrim(r);
  return r;
}

Integer minv(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible element in modular arithmetic");
  return r;
}

// Division with invertible leading coefficient of b.
std::pair<MPoly, MPoly> mdivmod(const MPoly& a, const MPoly& b,
                                const Integer& m) {
  if (b.empty()) throw std::domain_error("modular division by zero");
  MPoly r = a, q;
  const Integer linv = minv(b.back(), m);
  const long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(r.size()) - 1 >= db) {
    const long e = static_cast<long>(r.size()) - 1 - db;
    const Integer c = mod(r.back() * linv, m);
    if (static_cast<long>(q.size()) < e + 1) q.resize(e + 1, Integer(0));
    q[e] = c;
    for (long i = 0; i <= db; ++i)
      r[e + i] = mod(r[e + i] - c * b[i], m);
    mtrim(r);
    if (r.empty()) break;
  }
  mtrim(q);
  return {q, r};
}

MPoly mmod(const MPoly& a, const MPoly& b, const Integer& m) {
  return mdivmod(a, b, m).second;
}

MPoly mmonic(const MPoly& a, const Integer& m) {
  if (a.empty()) return a;
  const Integer inv = minv(a.back(), m);
  MPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] * inv, m);
  return r;
}

// gcd over F_p (prime modulus), monic output.
MPoly mgcd(MPoly a, MPoly b, const Integer& p) {
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : mmonic(a, p);
}

MPoly mpowmod(const MPoly& base, const Integer& e, const MPoly& f,
              const Integer& p) {
  MPoly result{Integer(1)};
  MPoly b = mmod(base, f, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mmod(mmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = mmod(mmul(result, b, p), f, p);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cantor-Zassenhaus over F_p (p odd prime), monic squarefree input.
// ---------------------------------------------------------------------------

void edf(const MPoly& f, long d, const Integer& p, std::mt19937_64& rng,
         std::vector<MPoly>& out) {
  const long n = static_cast<long>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer pd(1);
  for (long i = 0; i < d; ++i) pd *= p;
  const Integer e = (pd - 1) / 2;
  while (true) {
    MPoly r(n);
    for (long i = 0; i < n; ++i)
      r[i] = mod(Integer(static_cast<unsigned long>(rng())), p);
    mtrim(r);
    if (r.empty() || static_cast<long>(r.size()) - 1 < 1) continue;
    MPoly s = mpowmod(r, e, f, p);
    s = msub(s, MPoly{Integer(1)}, p);
    MPoly w = mgcd(f, s, p);
    const long dw = static_cast<long>(w.size()) - 1;
    if (dw > 0 && dw < n) {
      edf(w, d, p, rng, out);
      edf(mdivmod(f, w, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<MPoly> factor_mod_p(const MPoly& f_in, const Integer& p) {
  std::mt19937_64 rng(0x5eed5eedULL);  // fixed seed: deterministic output
  std::vector<MPoly> out;
  MPoly f = mmonic(f_in, p);
  MPoly x{Integer(0), Integer(1)};
  MPoly h = x;
  long d = 0;
  while (static_cast<long>(f.size()) - 1 > 0) {
    ++d;
    if (2 * d > static_cast<long>(f.size()) - 1) {
      out.push_back(f);
      break;
    }
    h = mpowmod(h, p, f, p);
    MPoly g = mgcd(f, msub(h, x, p), p);
    if (static_cast<long>(g.size()) - 1 > 0) {
      edf(g, d, p, rng, out);
      f = mdivmod(f, g, p).first;
      h = mmod(h, f, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic, factor tree).
// ---------------------------------------------------------------------------

struct LiftPair {
  MPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
  Integer m;
};

// One quadratic step: modulus m -> m^2.
void hensel_step(const ZPoly& f, LiftPair& lp) {
  const Integer m2 = lp.m * lp.m;
  MPoly fm = mreduce(f, m2);
  MPoly e = msub(fm, mmul(lp.g, lp.h, m2), m2);
  auto [q, r] = mdivmod(mmul(lp.s, e, m2), lp.h, m2);
  MPoly g1 = madd(lp.g, madd(mmul(lp.t, e, m2), mmul(q, lp.g, m2), m2), m2);
  MPoly h1 = madd(lp.h, r, m2);
  MPoly b = msub(madd(mmul(lp.s, g1, m2), mmul(lp.t, h1, m2), m2),
                 MPoly{Integer(1)}, m2);
  auto [c, d] = mdivmod(mmul(lp.s, b, m2), h1, m2);
  MPoly s1 = msub(lp.s, d, m2);
  MPoly t1 = msub(lp.t, madd(mmul(lp.t, b, m2), mmul(c, g1, m2), m2), m2);
  lp = {g1, h1, s1, t1, m2};
}

// Extended Euclid over F_p: s*a + t*b = 1 for coprime a, b.
std::pair<MPoly, MPoly> bezout_mod_p(const MPoly& a, const MPoly& b,
                                     const Integer& p) {
  MPoly r0 = a, r1 = b;
  MPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, p);
    MPoly s2 = msub(s0, mmul(q, s1, p), p);
    MPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (static_cast<long>(r0.size()) - 1 != 0)
    throw std::logic_error("bezout of non-coprime polynomials");
  const Integer inv = minv(r0[0], p);
  for (auto& c : s0) c = mod(c * inv, p);
  for (auto& c : t0) c = mod(c * inv, p);
  return {s0, t0};
}

// Lifts the mod-p factorization of the monic integer polynomial f to
// modulus M (a power of p). The modular factors must be monic, pairwise
// coprime, with product congruent to f mod p.
std::vector<MPoly> hensel_lift_tree(const ZPoly& f,
                                    const std::vector<MPoly>& modular,
                                    const Integer& p, const Integer& M) {
  if (modular.size() == 1) return {mreduce(f, M)};
  const size_t half = modular.size() / 2;
  MPoly g0{Integer(1)}, h0{Integer(1)};
  for (size_t i = 0; i < half; ++i) g0 = mmul(g0, modular[i], p);
  for (size_t i = half; i < modular.size(); ++i) h0 = mmul(h0, modular[i], p);
  auto [s0, t0] = bezout_mod_p(g0, h0, p);
  LiftPair lp{g0, h0, s0, t0, p};
  while (lp.m < M) hensel_step(f, lp);
  // Reduce to the target modulus and recurse on integer lifts of g, h.
  auto to_int = [&](const MPoly& a) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], M);
    return r;
  };
  ZPoly G = to_int(lp.g), H = to_int(lp.h);
  std::vector<MPoly> left(modular.begin(), modular.begin() + half);
  std::vector<MPoly> right(modular.begin() + half, modular.end());
  std::vector<MPoly> out = hensel_lift_tree(G, left, p, M);
  std::vector<MPoly> rhs = hensel_lift_tree(H, right, p, M);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination for a monic squarefree integer polynomial.
// ---------------------------------------------------------------------------

Integer mignotte_bound(const ZPoly& f) {
  Integer sq(0);
  for (const auto& c : f) sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
  norm += 1;
  Integer b = norm;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size());
  return b;
}

ZPoly balanced(const MPoly& a, const Integer& M) {
  ZPoly r(a.size());
  const Integer half = M / 2;
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] > half ? Integer(a[i] - M) : a[i];
  zpoly::trim(r);
  return r;
}

// Exact division of integer polynomials with monic divisor; nullopt when
// not divisible over Z.
std::optional<ZPoly> zdivide_monic(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a, q;
  const long db = zpoly::degree(b);
  while (zpoly::degree(r) >= db) {
    const long e = zpoly::degree(r) - db;
    const Integer c = r.back();
    if (static_cast<long>(q.size()) < e + 1) q.resize(e + 1, Integer(0));
    q[e] = c;
    for (long i = 0; i <= db; ++i) r[e + i] -= c * b[i];
    zpoly::trim(r);
    if (r.empty()) break;
  }
  if (!r.empty()) return std::nullopt;
  zpoly::trim(q);
  return q;
}

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  const long n = zpoly::degree(f);
  if (n <= 1) return {f};

  // Pick an odd prime keeping f squarefree.
  Integer p(1);
  MPoly fp;
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw std::logic_error("no suitable prime found");
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p == 2) continue;
    fp = mreduce(f, p);
    if (zpoly::degree(ZPoly(fp.begin(), fp.end())) != n) continue;
    MPoly dfp = mreduce(zpoly::derivative(f), p);
    MPoly g = mgcd(fp, dfp, p);
    if (static_cast<long>(g.size()) - 1 == 0) break;
  }

  std::vector<MPoly> modular = factor_mod_p(fp, p);
  if (modular.size() == 1) return {f};

  const Integer B = mignotte_bound(f);
  Integer M = p;
  while (M <= 2 * B) M *= M;  // quadratic lifting reaches powers p^(2^j)
  std::vector<MPoly> lifted = hensel_lift_tree(f, modular, p, M);

  std::vector<ZPoly> out;
  std::vector<size_t> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  ZPoly rem = f;

  size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<size_t> pick(s);
    // Enumerate s-subsets of alive in lexicographic order.
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      MPoly prod{Integer(1)};
      for (size_t i = 0; i < s; ++i) prod = mmul(prod, lifted[alive[idx[i]]], M);
      ZPoly cand = balanced(prod, M);
      if (auto q = zdivide_monic(rem, cand)) {
        out.push_back(cand);
        rem = *q;
        std::vector<size_t> next_alive;
        for (size_t i = 0, j = 0; i < alive.size(); ++i) {
          if (j < s && idx[j] == i) { ++j; continue; }
          next_alive.push_back(alive[i]);
        }
        alive = std::move(next_alive);
        found = true;
        break;
      }
      // next combination
      long i = static_cast<long>(s) - 1;
      while (i >= 0 && idx[i] == alive.size() - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zpoly::degree(rem) > 0) out.push_back(rem);
  return out;
}

// Factors a primitive squarefree integer polynomial (degree >= 1) into
// primitive irreducible integer polynomials with positive leading
// coefficients, via the monic transform y = lc * x.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const long n = zpoly::degree(f);
  if (n == 1) return {f};
  const Integer l = zpoly::lc(f);
  ZPoly fhat(f.size());
  fhat[n] = 1;
  Integer pw(1);
  for (long i = n - 1; i >= 0; --i) {
    fhat[i] = f[i] * pw;
    pw *= l;
  }
  // fhat(x) = l^(n-1) f(x/l), monic.
  std::vector<ZPoly> monic_factors = factor_monic_squarefree(fhat);
  std::vector<ZPoly> out;
  for (const auto& g : monic_factors) {
    ZPoly gb(g.size());
    Integer q(1);
    for (size_t i = 0; i < g.size(); ++i) {
      gb[i] = g[i] * q;
      q *= l;
    }
    out.push_back(zpoly::primitive(gb));
  }
  return out;
}

void sort_factors(std::vector<std::pair<LaurentPoly, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    return LaurentPoly::compare(a.first, b.first) < 0;
  });
}

// Recomputes unit and shift so that fl.remultiply() == p exactly.
void fix_unit(FactorList& fl, const LaurentPoly& p) {
  LaurentPoly q(Rational(1));
  for (const auto& [f, m] : fl.factors)
    for (unsigned i = 0; i < m; ++i) q = q * f;
  fl.shift = p.is_zero() ? 0 : p.min_exp() - q.min_exp();
  fl.unit = p.coeff(p.min_exp()) / q.coeff(q.min_exp());
}

}  // namespace

FactorList squarefree_decomposition(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::domain_error("squarefree decomposition of zero");
  FactorList fl;
  LaurentPoly f = p.normalize();
  if (f.is_constant()) {
    fix_unit(fl, p);
    return fl;
  }
  // Yun's algorithm.
  LaurentPoly df = f.derivative();
  LaurentPoly g = gcd(f, df);
  LaurentPoly c = divide_exact(f, g);
  LaurentPoly d = divide_exact(df, g) - c.derivative();
  unsigned i = 1;
  while (!c.is_constant()) {
    LaurentPoly a = gcd(c, d);
    if (!a.is_constant()) fl.factors.emplace_back(a.normalize(), i);
    c = divide_exact(c, a);
    d = divide_exact(d, a) - c.derivative();
    ++i;
  }
  sort_factors(fl.factors);
  fix_unit(fl, p);
  return fl;
}

FactorList factor(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of zero");
  FactorList sq = squarefree_decomposition(p);
  FactorList fl;
  for (const auto& [part, mult] : sq.factors) {
    ZPoly z = zpoly::from_laurent(part);
    for (const ZPoly& irr : factor_squarefree_z(z)) {
      fl.factors.emplace_back(zpoly::to_laurent(irr).normalize(), mult);
    }
  }
  // Merge associate factors (cannot occur across squarefree grades for a
  // correct Yun decomposition, but keep the invariant airtight).
  std::map<std::string, size_t> seen;
  std::vector<std::pair<LaurentPoly, unsigned>> merged;
  for (auto& [f, m] : fl.factors) {
    auto key = f.to_string();
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, merged.size());
      merged.emplace_back(f, m);
    } else {
      merged[it->second].second += m;
    }
  }
  fl.factors = std::move(merged);
  sort_factors(fl.factors);
  fix_unit(fl, p);
  return fl;
}

bool is_irreducible(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("irreducibility of zero");
  if (p.is_constant() || p.span() < 1)
    throw std::domain_error("irreducibility of a constant");
  FactorList fl = factor(p);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::optional<LaurentPoly> fox_milnor_test(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("Fox-Milnor test of zero");
  FactorList fl = factor(p);
  LaurentPoly witness(Rational(1));
  std::vector<bool> used(fl.factors.size(), false);
  for (size_t i = 0; i < fl.factors.size(); ++i) {
    if (used[i]) continue;
    const auto& [f, m] = fl.factors[i];
    LaurentPoly fc = f.conjugate().normalize();
    if (fc == f) {
      if (m % 2 != 0) return std::nullopt;  // symmetric factor, odd power
      for (unsigned k = 0; k < m / 2; ++k) witness = witness * f;
      used[i] = true;
      continue;
    }
    // Find the conjugate partner.
    size_t j = fl.factors.size();
    for (size_t k = i + 1; k < fl.factors.size(); ++k) {
      if (!used[k] && fl.factors[k].first == fc) { j = k; break; }
    }
    if (j == fl.factors.size() || fl.factors[j].second != m)
      return std::nullopt;  // unpaired conjugation orbit
    for (unsigned k = 0; k < m; ++k) witness = witness * f;
    used[i] = used[j] = true;
  }
  return witness.normalize();
}

}  // namespace knotconc
