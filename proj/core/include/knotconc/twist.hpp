#ifndef KNOTCONC_TWIST_HPP
#define KNOTCONC_TWIST_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotconc/laurent.hpp"
#include "knotconc/seifert.hpp"

namespace knotconc {

/// Seifert matrix [[-1,1],[0,n]] of the n-twist knot with a positive clasp
/// (n >= 1); the empty matrix for n = 0 (unknot). Negative n rejected.
SeifertMatrix twist_seifert_matrix(long n);

/// normalize(n t^2 - (2n+1) t + n); equals
/// alexander_poly(twist_seifert_matrix(n)).
LaurentPoly twist_alexander(long n);

/// Position of the n-twist knot in the algebraic concordance group:
/// algebraically slice iff n = m^2 - m; order two iff n = a^2 - a + b^2
/// (a, b > 0) and not algebraically slice. Orders other than 1 and 2 are
/// not classified by this tool.
struct ACClassification {
  bool algebraically_slice = false;
  bool order_two = false;
  std::optional<std::pair<long, long>> order_two_witness;  // (a, b)
  bool square = false;          // n = m^2 (algebraically rationally slice)
  bool perfect_power = false;   // n = m^k, k > 1
};

ACClassification classify_ac(long n);

/// Arithmetic criterion for strong irreducibility of the n-twist Alexander
/// polynomial: n neither of the form m(m-1) nor a perfect power m^k (k > 1).
/// Requires n >= 2.
struct StrongIrreducibilityCertificate {
  bool criterion_holds = false;
  std::vector<std::string> reasons;  // which test failed, when any
};

StrongIrreducibilityCertificate strong_irreducibility(long n);

/// The family n = 36 k^2 - 6 k + 4 for odd k > 0, with all its recorded
/// arithmetic checks.
struct DavisFamilyMember {
  long k = 0;
  long n = 0;
  bool n_mod_3_is_1 = false;
  bool two_adic_valuation_is_1 = false;
  std::pair<long, long> witness{0, 0};  // (6k, 2)
  bool witness_valid = false;
  bool order_two = false;
  bool strongly_irreducible = false;

  bool all_checks_pass() const {
    return n_mod_3_is_1 && two_adic_valuation_is_1 && witness_valid &&
           order_two && strongly_irreducible;
  }
};

DavisFamilyMember davis_family(long k);

/// Externally supplied first-order signature status; never computed.
struct RhoOneStatus {
  long n = 0;
  bool asserted = false;  // false: table has no entry, status unasserted
  bool nonzero = false;
  std::string source;
};

/// Read-only lookup table of rho1 assertions, loaded from the JSON list
/// [{"n": ..., "nonzero": ..., "source": ...}, ...].
class RhoOneTable {
 public:
  /// Compiled-in table (the 36k^2-6k+4 family for odd k <= 99).
  static RhoOneTable builtin();
  static RhoOneTable load_file(const std::string& path);
  static RhoOneTable parse(const std::string& json_text);

  RhoOneStatus status(long n) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<long, RhoOneStatus> entries_;
};

}  // namespace knotconc

#endif
