#ifndef KNOTCONC_BLANCHFIELD_HPP
#define KNOTCONC_BLANCHFIELD_HPP

#include <string>
#include <vector>

#include "knotconc/laurent.hpp"
#include "knotconc/seifert.hpp"

namespace knotconc {

/// An element of Q(t) / Q[t^{+-1}]: a reduced fraction num/den of Laurent
/// polynomials, kept modulo Laurent polynomials. The representative is
/// canonical: den is normalized, num is the remainder of the numerator by
/// den with gcd(num, den) = 1 (num = 0 for the zero class).
class RationalFunctionClass {
 public:
  RationalFunctionClass() = default;  // zero class
  RationalFunctionClass(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero_class() const { return num_.is_zero(); }
  bool same_class(const RationalFunctionClass& o) const;

  /// Multiplication by a Laurent polynomial (module action on values).
  RationalFunctionClass scaled(const LaurentPoly& f) const;
  /// Induced by t -> t^{-1}.
  RationalFunctionClass conjugate_class() const;
  /// Induced by t -> t^c.
  RationalFunctionClass inflate(unsigned long c) const;

  std::string to_string() const;

 private:
  LaurentPoly num_;                     // zero for the zero class
  LaurentPoly den_{Rational(1)};        // normalized
};

/// Thrown when a Seifert matrix does not present a cyclic torsion module in
/// the supported range (size 2x2 with squarefree Alexander polynomial, or
/// the empty matrix).
struct NonCyclicError : std::domain_error {
  using std::domain_error::domain_error;
};

struct Provenance {
  enum Kind { Plain, Inflated, Localized } kind = Plain;
  unsigned long c = 1;   // for Inflated
  LaurentPoly p;         // for Localized
};

/// Cyclic torsion module Q[t^{+-1}]/(order) carrying a sesquilinear linking
/// form determined by its value b00 at the cyclic generator. A constant
/// order means the zero module.
struct PairedModule {
  LaurentPoly order{Rational(1)};  // normalized
  RationalFunctionClass b00;
  Provenance provenance;

  bool is_zero_module() const { return order.is_constant(); }
};

/// Submodule of a cyclic module: generated by a normalized divisor g of the
/// order (g = 1 is the whole module, g = order the zero submodule).
struct Submodule {
  LaurentPoly generator_divisor;
};

/// Linking form of the knot presented by V, at complexity c (t -> t^c).
/// Convention: Bl(x, y) = (1 - t) * conj(x)^T (tV - V^T)^{-1} y, evaluated
/// at a cyclic generator. Throws NonCyclicError outside the cyclic case.
PairedModule pairing_from_seifert(const SeifertMatrix& V, unsigned long c);

/// Pairing of the elements f*x0 and g*x0 (x0 the cyclic generator):
/// f * conj(g) * b00 as a class.
RationalFunctionClass pairing(const PairedModule& m, const LaurentPoly& f,
                              const LaurentPoly& g);

/// Torsion part not coprime to p, with the restricted form: the new order
/// keeps exactly the irreducible factors of the old order sharing a factor
/// with p. Localizing at coprime p gives the zero module.
PairedModule localize(const PairedModule& m, const LaurentPoly& p);

/// All submodules: one per normalized divisor of the order, sorted.
std::vector<Submodule> submodules(const PairedModule& m);

/// True iff g * conj(g) * b00 is the zero class (g the generator divisor);
/// by sesquilinearity this decides isotropy of the cyclic submodule.
bool is_isotropic(const PairedModule& m, const Submodule& s);

/// Generator divisor of the orthogonal complement s^perp.
LaurentPoly perp_divisor(const PairedModule& m, const Submodule& s);

struct IsotropicFinding {
  Submodule sub;
  bool lagrangian = false;
};

/// Exhaustive search for nontrivial (nonzero) isotropic submodules, each
/// flagged Lagrangian when s = s^perp. Empty for the zero module.
std::vector<IsotropicFinding> find_isotropic(const PairedModule& m);

}  // namespace knotconc

#endif
