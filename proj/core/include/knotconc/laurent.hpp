#ifndef KNOTCONC_LAURENT_HPP
#define KNOTCONC_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotconc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rational-coefficient Laurent polynomial in one variable t.
///
/// The zero polynomial is the empty term map; no zero coefficient is ever
/// stored. All operations are pure; values are immutable in practice
/// (mutating operators return fresh objects).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c, long exp = 0);
  explicit LaurentPoly(long c, long exp = 0);

  /// The monomial t^exp.
  static LaurentPoly t(long exp = 1);

  /// Parses the sparse text form `c*t^e + c*t^e + ...` (exponents any
  /// integers, coefficients `num` or `num/den`, optional whitespace).
  /// Also accepts bare `c` for a constant term and `t^e` / `-t^e`.
  static LaurentPoly parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Minimum/maximum exponent; throws on the zero polynomial.
  long min_exp() const;
  long max_exp() const;
  /// max_exp() - min_exp(); throws on zero.
  long span() const;
  const std::map<long, Rational>& terms() const { return terms_; }
  Rational coeff(long exp) const;

  Rational evaluate(const Rational& x) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& s) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiplication by the unit t^k.
  LaurentPoly shifted(long k) const;
  /// Formal derivative d/dt.
  LaurentPoly derivative() const;
  /// Substitution t -> t^{-1}.
  LaurentPoly conjugate() const;
  /// Substitution t -> t^c, c >= 1.
  LaurentPoly inflate(unsigned long c) const;

  /// Canonical associate: minimum exponent 0, coprime integer coefficients,
  /// positive leading coefficient. Zero maps to zero.
  LaurentPoly normalize() const;
  /// normalize(p) == normalize(conjugate(p)); rejects zero.
  bool is_symmetric() const;

  /// Deterministic total order on normalized polynomials: by span, then by
  /// coefficient sequence from exponent 0 upward. Used to sort factor lists.
  static int compare(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

 private:
  void set(long exp, const Rational& c);
  std::map<long, Rational> terms_;
};

LaurentPoly operator*(const Rational& s, const LaurentPoly& p);

/// Exact division; throws std::domain_error when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
/// True iff b divides a in Q[t^{+-1}] (b != 0).
bool divides(const LaurentPoly& b, const LaurentPoly& a);
/// Quotient and remainder of a by b viewed as ordinary polynomials after
/// shifting both to minimum exponent 0. rem has span < span(b) or is zero.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                           const LaurentPoly& b);

/// Normalized gcd; rejects the (0, 0) input.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Resultant of the shifted ordinary-polynomial representatives.
Rational resultant(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace knotconc

#endif
