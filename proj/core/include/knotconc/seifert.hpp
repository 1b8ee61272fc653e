#ifndef KNOTCONC_SEIFERT_HPP
#define KNOTCONC_SEIFERT_HPP

#include <string>
#include <vector>

#include "knotconc/algebraic.hpp"
#include "knotconc/laurent.hpp"

namespace knotconc {

/// Integer Seifert pairing presentation of a knot: a square matrix of even
/// size 2g with det(V - V^T) = 1, validated on construction.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(std::vector<std::vector<Integer>> entries);

  /// JSON form {"size": 2g, "rows": [[...], ...]}.
  static SeifertMatrix from_json(const std::string& text);
  std::string to_json() const;

  size_t size() const { return entries_.size(); }
  size_t genus() const { return entries_.size() / 2; }
  const std::vector<std::vector<Integer>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<Integer>> entries_;
};

/// Thrown when a signature evaluation lands on a jump of the step function.
struct JumpEvaluationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// normalize(det(tV - V^T)); symmetric, |value at 1| = 1.
LaurentPoly alexander_poly(const SeifertMatrix& V);

/// Signature of V + V^T (the ordinary knot signature).
long signature(const SeifertMatrix& V);

/// Levine-Tristram signature at the unit-circle point with z = w + conj(w),
/// z rational in [-2, 2). Throws JumpEvaluationError at jump points of the
/// step function and std::domain_error for z outside [-2, 2).
long levine_tristram(const SeifertMatrix& V, const Rational& z);

/// Symmetric rewrite q with Delta(t) = unit * t^g * q(t + 1/t); the jump
/// locations of the signature function are the roots of q in (-2, 2).
ZPoly symmetric_rewrite(const LaurentPoly& delta);

struct SignatureJump {
  AlgebraicReal location;  // z-coordinate in (-2, 2)
  long value_left;         // arc on the smaller-z side
  long value_right;        // arc on the larger-z side
};

/// Exact step-function description of the Levine-Tristram signature in the
/// z = w + conj(w) coordinate. Jumps are ascending in z; base_value is the
/// value on the arc adjacent to z = 2 (w near 1).
struct SignatureProfile {
  std::vector<SignatureJump> jumps;
  long base_value = 0;
  long sigma_at_minus_one = 0;
  bool has_jumps() const;
};

SignatureProfile signature_profile(const SeifertMatrix& V);

/// Normalized integral of the signature step function over the circle,
///   rho0 = constant + sum coeff_i * arccos(z_i / 2) / pi,
/// with a guaranteed-error numeric enclosure.
struct RhoZeroTerm {
  long coeff;
  AlgebraicReal z;
};

struct RhoZero {
  std::vector<RhoZeroTerm> terms;
  Rational constant{0};
  std::string decimal;  // enclosure midpoint, 30 significant digits
  double value = 0.0;
  double error_bound = 0.0;

  bool is_exactly_zero() const { return terms.empty() && constant == 0; }
};

RhoZero rho_zero(const SeifertMatrix& V);

}  // namespace knotconc

#endif
