#include "knotconc/seifert.hpp"

#include <mpfr.h>

#include <json.hpp>
#include <sstream>

namespace knotconc {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in Q[w]/(w^2 - z*w + 1) for rational z with |z| < 2 (w a
// unit-circle point, conj(w) = 1/w = z - w). Elements a + b*w.
// ---------------------------------------------------------------------------

struct QOmega {
  Rational a{0}, b{0};
  bool is_zero() const { return a == 0 && b == 0; }
};

QOmega qo_add(const QOmega& x, const QOmega& y) { return {x.a + y.a, x.b + y.b}; }
QOmega qo_sub(const QOmega& x, const QOmega& y) { return {x.a - y.a, x.b - y.b}; }

QOmega qo_mul(const QOmega& x, const QOmega& y, const Rational& z) {
  // (a1 + b1 w)(a2 + b2 w), w^2 = z w - 1.
  Rational bb = x.b * y.b;
  return {x.a * y.a - bb, x.a * y.b + x.b * y.a + bb * z};
}

QOmega qo_conj(const QOmega& x, const Rational& z) {
  return {x.a + x.b * z, -x.b};
}

QOmega qo_div_rat(const QOmega& x, const Rational& s) {
  return {x.a / s, x.b / s};
}

// Signature of a Hermitian matrix over Q[w]/(w^2 - z w + 1) via congruence
// diagonalization; diagonal entries stay rational (b = 0).
long hermitian_signature(std::vector<std::vector<QOmega>> H, const Rational& z) {
  const size_t n = H.size();
  long sig = 0;
  auto swap_rc = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) std::swap(H[i][k], H[j][k]);
    for (size_t k = 0; k < n; ++k) std::swap(H[k][i], H[k][j]);
  };
  // Congruence e_r := e_r + s*e_c (form conj-linear in the first slot).
  auto add_rc = [&](size_t r, size_t c, const QOmega& s) {
    QOmega sc = qo_conj(s, z);
    for (size_t k = 0; k < n; ++k) H[r][k] = qo_add(H[r][k], qo_mul(sc, H[c][k], z));
    for (size_t k = 0; k < n; ++k) H[k][r] = qo_add(H[k][r], qo_mul(s, H[k][c], z));
  };
  for (size_t i = 0; i < n; ++i) {
    if (H[i][i].is_zero()) {
      size_t j = i;
      for (size_t k = i + 1; k < n; ++k)
        if (!H[k][k].is_zero()) { j = k; break; }
      if (j != i) {
        swap_rc(i, j);
      } else {
        // All remaining diagonal entries are zero; look for an off-diagonal
        // entry and create a nonzero diagonal via a unit transvection.
        size_t r = n, c = n;
        for (size_t p = i; p < n && r == n; ++p)
          for (size_t q = p + 1; q < n; ++q)
            if (!H[p][q].is_zero()) { r = p; c = q; break; }
        if (r == n) break;  // remaining block is zero
        QOmega w = H[r][c];
        QOmega s{Rational(1), Rational(0)};
        QOmega sw = w;
        QOmega twice_re = qo_add(sw, qo_conj(sw, z));
        if (twice_re.is_zero()) {
          s = QOmega{Rational(0), Rational(1)};  // s = w itself as the unit
          sw = qo_mul(s, w, z);
        }
        add_rc(r, c, s);
        if (H[r][r].is_zero())
          throw std::logic_error("transvection failed to expose a pivot");
        if (r != i) swap_rc(i, r);
      }
      if (H[i][i].is_zero()) break;
    }
    if (H[i][i].b != 0)
      throw std::logic_error("non-real diagonal in Hermitian elimination");
    const Rational p = H[i][i].a;
    sig += sgn(p);
    for (size_t r = i + 1; r < n; ++r) {
      for (size_t c = i + 1; c < n; ++c) {
        // H[r][c] -= conj(H[i][r]) * H[i][c] / p
        QOmega t = qo_mul(qo_conj(H[i][r], z), H[i][c], z);
        H[r][c] = qo_sub(H[r][c], qo_div_rat(t, p));
      }
    }
    for (size_t k = i + 1; k < n; ++k) {
      H[i][k] = QOmega{};
      H[k][i] = QOmega{};
    }
  }
  return sig;
}

long symmetric_signature(const std::vector<std::vector<Rational>>& M) {
  const size_t n = M.size();
  std::vector<std::vector<QOmega>> H(n, std::vector<QOmega>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) H[i][j] = QOmega{M[i][j], Rational(0)};
  return hermitian_signature(std::move(H), Rational(0));
}

Rational det_rational(std::vector<std::vector<Rational>> M) {
  const size_t n = M.size();
  Rational det(1);
  for (size_t i = 0; i < n; ++i) {
    size_t piv = i;
    while (piv < n && M[piv][i] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != i) {
      std::swap(M[piv], M[i]);
      det = -det;
    }
    det *= M[i][i];
    for (size_t r = i + 1; r < n; ++r) {
      Rational f = M[r][i] / M[i][i];
      for (size_t c = i; c < n; ++c) M[r][c] -= f * M[i][c];
    }
  }
  return det;
}

// Determinant of a small LaurentPoly matrix by cofactor expansion.
LaurentPoly det_poly(const std::vector<std::vector<LaurentPoly>>& M) {
  const size_t n = M.size();
  if (n == 0) return LaurentPoly(Rational(1));
  if (n == 1) return M[0][0];
  LaurentPoly acc;
  std::vector<std::vector<LaurentPoly>> minor(n - 1,
                                              std::vector<LaurentPoly>(n - 1));
  for (size_t j = 0; j < n; ++j) {
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = M[r][c];
      }
    }
    LaurentPoly term = M[0][j] * det_poly(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Integer>> entries)
    : entries_(std::move(entries)) {
  const size_t n = entries_.size();
  if (n % 2 != 0)
    throw std::invalid_argument("Seifert matrix must have even size");
  for (const auto& row : entries_)
    if (row.size() != n)
      throw std::invalid_argument("Seifert matrix must be square");
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      A[i][j] = Rational(entries_[i][j] - entries_[j][i]);
  if (det_rational(A) != 1)
    throw std::invalid_argument("not a Seifert pairing: det(V - V^T) != 1");
}

SeifertMatrix SeifertMatrix::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const size_t size = j.at("size").get<size_t>();
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<Integer> r;
    for (const auto& v : row) r.emplace_back(v.get<long>());
    rows.push_back(std::move(r));
  }
  if (rows.size() != size)
    throw std::invalid_argument("Seifert JSON: size does not match rows");
  return SeifertMatrix(std::move(rows));
}

std::string SeifertMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : entries_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_si());
    rows.push_back(r);
  }
  nlohmann::json j{{"size", entries_.size()}, {"rows", rows}};
  return j.dump();
}

LaurentPoly alexander_poly(const SeifertMatrix& V) {
  const size_t n = V.size();
  if (n == 0) return LaurentPoly(Rational(1));
  std::vector<std::vector<LaurentPoly>> M(n, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      M[i][j] = LaurentPoly(Rational(V.entries()[i][j]), 1) -
                LaurentPoly(Rational(V.entries()[j][i]), 0);
  return det_poly(M).normalize();
}

long signature(const SeifertMatrix& V) {
  const size_t n = V.size();
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      M[i][j] = Rational(V.entries()[i][j] + V.entries()[j][i]);
  return symmetric_signature(M);
}

ZPoly symmetric_rewrite(const LaurentPoly& delta) {
  LaurentPoly d = delta.normalize();
  if (d.is_zero()) throw std::domain_error("symmetric rewrite of zero");
  if (!d.is_symmetric())
    throw std::domain_error("symmetric rewrite of a non-symmetric polynomial");
  const long span = d.is_constant() ? 0 : d.span();
  if (span % 2 != 0)
    throw std::domain_error("symmetric polynomial of odd span");
  const long g = span / 2;
  for (long k = 1; k <= g; ++k)
    if (d.coeff(g + k) != d.coeff(g - k))
      throw std::domain_error("normalized symmetric polynomial is not palindromic");
  // t^k + t^-k = P_k(z), P_0 = 2, P_1 = z, P_k = z P_{k-1} - P_{k-2}.
  std::vector<Rational> q(static_cast<size_t>(g) + 1, Rational(0));
  q[0] = d.coeff(g);
  std::vector<Rational> pk_prev{Rational(2)};       // P_0
  std::vector<Rational> pk{Rational(0), Rational(1)};  // P_1
  for (long k = 1; k <= g; ++k) {
    const Rational c = d.coeff(g + k);
    for (size_t i = 0; i < pk.size(); ++i) q[i] += c * pk[i];
    // advance P_{k+1} = z*P_k - P_{k-1}
    std::vector<Rational> next(pk.size() + 1, Rational(0));
    for (size_t i = 0; i < pk.size(); ++i) next[i + 1] = pk[i];
    for (size_t i = 0; i < pk_prev.size(); ++i) next[i] -= pk_prev[i];
    pk_prev = std::move(pk);
    pk = std::move(next);
  }
  ZPoly out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1)
      throw std::logic_error("symmetric rewrite produced a non-integer");
    out[i] = q[i].get_num();
  }
  zpoly::trim(out);
  return out;
}

long levine_tristram(const SeifertMatrix& V, const Rational& z) {
  if (z < -2 || z >= 2)
    throw std::domain_error("z = w + conj(w) must lie in [-2, 2)");
  const size_t n = V.size();
  if (n == 0) return 0;
  if (z == -2) {
    // w = -1: the form is 2(V + V^T).
    return signature(V);
  }
  LaurentPoly delta = alexander_poly(V);
  if (!delta.is_constant()) {
    ZPoly q = symmetric_rewrite(delta);
    if (zpoly::degree(q) >= 1 || !q.empty()) {
      if (zpoly::evaluate(zpoly::squarefree_part(q), z) == 0)
        throw JumpEvaluationError("evaluation at a signature jump point");
    }
  }
  // H[r][c] = (1-w) V[r][c] + (1-conj(w)) V[c][r], conj(w) = z - w.
  std::vector<std::vector<QOmega>> H(n, std::vector<QOmega>(n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      const Rational vrc(V.entries()[r][c]), vcr(V.entries()[c][r]);
      H[r][c] = QOmega{vrc + vcr - z * vcr, vcr - vrc};
    }
  }
  return hermitian_signature(std::move(H), z);
}

bool SignatureProfile::has_jumps() const {
  for (const auto& j : jumps)
    if (j.value_left != j.value_right) return true;
  return false;
}

SignatureProfile signature_profile(const SeifertMatrix& V) {
  SignatureProfile prof;
  prof.sigma_at_minus_one = signature(V);
  LaurentPoly delta = alexander_poly(V);
  std::vector<AlgebraicReal> roots;
  if (!delta.is_constant()) {
    ZPoly q = symmetric_rewrite(delta);
    if (zpoly::degree(q) >= 1) roots = isolate_roots(q, Rational(-2), Rational(2));
  }
  if (roots.empty()) {
    prof.base_value = V.size() == 0 ? 0 : levine_tristram(V, Rational(0));
    return prof;
  }
  // Refine until the isolating intervals are pairwise disjoint and strictly
  // inside (-2, 2), then sample each arc at a rational point.
  for (auto& r : roots) r.refine(Rational(1, 64));
  for (bool again = true; again;) {
    again = false;
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
      if (!(roots[i].hi() < roots[i + 1].lo())) {
        roots[i].refine((roots[i].hi() - roots[i].lo()) / 4);
        roots[i + 1].refine((roots[i + 1].hi() - roots[i + 1].lo()) / 4);
        again = true;
      }
    }
  }
  std::vector<Rational> samples;
  samples.push_back((Rational(-2) + roots.front().lo()) / 2);
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    samples.push_back((roots[i].hi() + roots[i + 1].lo()) / 2);
  samples.push_back((roots.back().hi() + Rational(2)) / 2);
  std::vector<long> values;
  for (const auto& s : samples) values.push_back(levine_tristram(V, s));
  prof.base_value = values.back();
  for (size_t i = 0; i < roots.size(); ++i)
    prof.jumps.push_back(SignatureJump{roots[i], values[i], values[i + 1]});
  return prof;
}

RhoZero rho_zero(const SeifertMatrix& V) {
  SignatureProfile prof = signature_profile(V);
  RhoZero rho;
  // rho0 = v_0 + sum_k (v_k - v_{k-1}) * arccos(j_k / 2) / pi, where v_0 is
  // the arc value adjacent to z = -2 and v_k the value right of jump k.
  long v0 = prof.jumps.empty() ? prof.base_value : prof.jumps.front().value_left;
  rho.constant = Rational(v0);
  for (const auto& j : prof.jumps) {
    const long coeff = j.value_right - j.value_left;
    if (coeff != 0) rho.terms.push_back(RhoZeroTerm{coeff, j.location});
  }

  // Guaranteed-error enclosure via MPFR interval endpoints.
  const int prec = 256;
  mpfr_t lo_sum, hi_sum, tmp_lo, tmp_hi, qv;
  mpfr_inits2(prec, lo_sum, hi_sum, tmp_lo, tmp_hi, qv, (mpfr_ptr) nullptr);
  mpfr_set_q(lo_sum, rho.constant.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_sum, rho.constant.get_mpq_t(), MPFR_RNDU);
  for (auto& term : rho.terms) {
    AlgebraicReal zr = term.z;
    Rational width(1);
    width /= Integer(1) << 120;
    zr.refine(width);
    // arccos is decreasing: lower bound from hi endpoint, upper from lo.
    Rational zlo = zr.lo() / 2, zhi = zr.hi() / 2;
    mpfr_set_q(qv, zhi.get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp_si(qv, 1) > 0) mpfr_set_si(qv, 1, MPFR_RNDN);
    mpfr_acos(tmp_lo, qv, MPFR_RNDD);
    mpfr_set_q(qv, zlo.get_mpq_t(), MPFR_RNDD);
    if (mpfr_cmp_si(qv, -1) < 0) mpfr_set_si(qv, -1, MPFR_RNDN);
    mpfr_acos(tmp_hi, qv, MPFR_RNDU);
    mpfr_t pi_lo, pi_hi;
    mpfr_inits2(prec, pi_lo, pi_hi, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    // term enclosure: coeff * acos(z/2) / pi
    mpfr_t t_lo, t_hi;
    mpfr_inits2(prec, t_lo, t_hi, (mpfr_ptr) nullptr);
    if (term.coeff >= 0) {
      mpfr_mul_si(t_lo, tmp_lo, term.coeff, MPFR_RNDD);
      mpfr_div(t_lo, t_lo, pi_hi, MPFR_RNDD);
      mpfr_mul_si(t_hi, tmp_hi, term.coeff, MPFR_RNDU);
      mpfr_div(t_hi, t_hi, pi_lo, MPFR_RNDU);
    } else {
      mpfr_mul_si(t_lo, tmp_hi, term.coeff, MPFR_RNDD);
      mpfr_div(t_lo, t_lo, pi_lo, MPFR_RNDD);
      mpfr_mul_si(t_hi, tmp_lo, term.coeff, MPFR_RNDU);
      mpfr_div(t_hi, t_hi, pi_hi, MPFR_RNDU);
    }
    mpfr_add(lo_sum, lo_sum, t_lo, MPFR_RNDD);
    mpfr_add(hi_sum, hi_sum, t_hi, MPFR_RNDU);
    mpfr_clears(pi_lo, pi_hi, t_lo, t_hi, (mpfr_ptr) nullptr);
  }
  mpfr_t mid, rad;
  mpfr_inits2(prec, mid, rad, (mpfr_ptr) nullptr);
  mpfr_add(mid, lo_sum, hi_sum, MPFR_RNDN);
  mpfr_div_si(mid, mid, 2, MPFR_RNDN);
  mpfr_sub(rad, hi_sum, lo_sum, MPFR_RNDU);
  mpfr_div_si(rad, rad, 2, MPFR_RNDU);
  rho.value = mpfr_get_d(mid, MPFR_RNDN);
  rho.error_bound = mpfr_get_d(rad, MPFR_RNDU) + 1e-60;
  char buf[64];
  mpfr_snprintf(buf, sizeof(buf), "%.30Rg", mid);
  rho.decimal = buf;
  mpfr_clears(lo_sum, hi_sum, tmp_lo, tmp_hi, qv, mid, rad, (mpfr_ptr) nullptr);
  return rho;
}

}  // namespace knotconc
