#ifndef KNOTCONC_FACTOR_HPP
#define KNOTCONC_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "knotconc/laurent.hpp"

namespace knotconc {

/// A unit together with a list of normalized factors:
///   input = unit * t^shift * prod factor_i^multiplicity_i   (exactly).
struct FactorList {
  Rational unit{1};
  long shift = 0;
  std::vector<std::pair<LaurentPoly, unsigned>> factors;

  LaurentPoly remultiply() const;
};

/// Yun squarefree decomposition: factors are squarefree, pairwise coprime,
/// graded by multiplicity. Rejects zero.
FactorList squarefree_decomposition(const LaurentPoly& p);

/// Complete factorization into rational irreducibles, deterministic order
/// (by degree, then coefficients). Rejects zero.
FactorList factor(const LaurentPoly& p);

/// True iff factor(p) has a single factor with multiplicity 1.
/// Rejects zero and constants.
bool is_irreducible(const LaurentPoly& p);

/// Fox-Milnor witness: f with normalize(f * conjugate(f)) == normalize(p),
/// or nullopt when the factorization obstructs it. Rejects zero.
std::optional<LaurentPoly> fox_milnor_test(const LaurentPoly& p);

}  // namespace knotconc

#endif
