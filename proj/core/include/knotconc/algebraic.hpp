#ifndef KNOTCONC_ALGEBRAIC_HPP
#define KNOTCONC_ALGEBRAIC_HPP

#include <string>
#include <vector>

#include "knotconc/zpoly.hpp"

namespace knotconc {

/// Real algebraic number: a squarefree integer polynomial together with an
/// isolating rational interval (lo, hi) containing exactly one root, with
/// poly(lo) != 0 and poly(hi) != 0. A known-rational root is stored with
/// lo == hi.
class AlgebraicReal {
 public:
  AlgebraicReal(ZPoly defining, Rational lo, Rational hi);
  static AlgebraicReal from_rational(const Rational& r);

  const ZPoly& defining() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }

  /// Bisects until hi - lo <= width (no-op for exact rationals).
  void refine(const Rational& width);

  /// Sign of (this - r): -1, 0, or +1.
  int compare(const Rational& r) const;
  bool operator<(const AlgebraicReal& o) const;

  std::string to_string() const;

 private:
  ZPoly poly_;
  Rational lo_, hi_;
};

/// Sturm chain of a squarefree integer polynomial, usable for sign-variation
/// root counting.
class SturmChain {
 public:
  explicit SturmChain(const ZPoly& squarefree);
  /// Number of sign variations at x.
  int variations(const Rational& x) const;
  /// Number of roots in the half-open interval (a, b], a < b.
  int count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<std::vector<Rational>> chain_;
};

/// Isolates all real roots of p (any nonzero integer polynomial; repeated
/// roots are collapsed via the squarefree part) inside the open interval
/// (a, b). Roots are returned in increasing order; endpoints that happen to
/// be roots are excluded.
std::vector<AlgebraicReal> isolate_roots(const ZPoly& p, const Rational& a,
                                         const Rational& b);

}  // namespace knotconc

#endif
