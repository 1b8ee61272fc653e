#ifndef KNOTCONC_CERTIFY_HPP
#define KNOTCONC_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "knotconc/blanchfield.hpp"
#include "knotconc/laurent.hpp"
#include "knotconc/twist.hpp"

namespace knotconc {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertificateSchema = "v1";

/// Evidence that a knot has finite order in the rational algebraic
/// concordance group (hence vanishing zeroth-order signature).
struct FiniteOrderEvidence {
  enum Kind { OrderTwoTwist, AssertedExternal } kind = OrderTwoTwist;
  long n = 0, a = 0, b = 0;  // OrderTwoTwist: n = a^2 - a + b^2
  std::string citation;      // AssertedExternal
};

/// Evidence that the Alexander polynomial is strongly irreducible
/// (irreducible after every inflation t -> t^c).
struct StrongIrredEvidence {
  enum Kind { BullockDavis, Direct } kind = BullockDavis;
  long n = 0;                   // BullockDavis: twist parameter
  unsigned long c_checked = 0;  // Direct: machine-verified for all c <= this
};

/// The hypothesis bundle for one family member. `delta` already includes
/// the complexity bookkeeping: for a (c,1)-cable it is the inflated base
/// polynomial and `complexity` records c.
struct KnotHypotheses {
  std::string label;
  LaurentPoly delta;
  unsigned long complexity = 1;
  FiniteOrderEvidence finite_order;
  StrongIrredEvidence strong_irred;
  RhoOneStatus rho_one;
};

/// Hypotheses for the n-twist knot, with rho1 status looked up in `table`.
KnotHypotheses twist_hypotheses(long n, const RhoOneTable& table);

/// Hypotheses for the (c,1)-cable: delta inflated by c, complexity scaled,
/// rho1 and anisotropy assertions transferred.
KnotHypotheses cable_transfer(const KnotHypotheses& h, unsigned long c);

// ---------------------------------------------------------------------------

struct CoprimalityEntry {
  unsigned long c = 0, d = 0;
  LaurentPoly g;  // normalized gcd of p(t^c) and q(t^d)
};

struct CoprimalityCertificate {
  bool all_coprime = false;
  unsigned long c_max = 0, d_max = 0;
  std::vector<CoprimalityEntry> entries;
};

/// Exact gcd of p(t^c), q(t^d) for all 1 <= c <= c_max, 1 <= d <= d_max.
CoprimalityCertificate strong_coprimality_bounded(const LaurentPoly& p,
                                                  const LaurentPoly& q,
                                                  unsigned long c_max,
                                                  unsigned long d_max);

enum class LocalizationCase { CaseA_rho0, CaseB_rho1, Indeterminate };

struct LocalizationResult {
  LocalizationCase kind = LocalizationCase::Indeterminate;
  LaurentPoly gcd_witness;  // gcd(delta(t^c), p), normalized
};

/// Case A when gcd(delta(t^c), p) = 1 (the localized invariant reduces to
/// the zeroth-order signature); Case B when delta(t^c) equals p up to
/// units; Indeterminate otherwise, with the gcd as witness.
LocalizationResult localization_case(const LaurentPoly& delta, unsigned long c,
                                     const LaurentPoly& p);

struct AnisotropyCertificate {
  enum Verdict { Certified, Refuted, Unknown } verdict = Unknown;
  std::string method;  // "coprime" | "squarefree" | "symmetric-factors" | "oracle"
  std::optional<LaurentPoly> witness;  // nontrivial isotropic generator
};

/// Sufficient conditions for (c,p)-anisotropy of the knot with Alexander
/// polynomial delta, in order: gcd(delta(t^c), p) = 1; delta(t^c)
/// squarefree; every irreducible factor of p symmetric and dividing
/// delta(t^c) with multiplicity <= 1. When none applies and an oracle
/// module is supplied, brute force decides: a nontrivial isotropic
/// submodule of the localized module refutes, none certifies.
AnisotropyCertificate anisotropy_certificate(const LaurentPoly& delta,
                                             unsigned long c,
                                             const LaurentPoly& p,
                                             const PairedModule* oracle = nullptr);

// ---------------------------------------------------------------------------

struct CaseRecord {
  std::string member_label;
  LocalizationCase kind = LocalizationCase::Indeterminate;
  LaurentPoly gcd_witness;
  AnisotropyCertificate anisotropy;
};

struct TargetRecord {
  std::string target_label;
  unsigned long c = 0;
  LaurentPoly p;  // delta_target(t^c), normalized
  std::vector<CaseRecord> cases;
};

struct MemberRecord {
  KnotHypotheses hyp;
  std::vector<unsigned long> irreducibility_checked;  // c with delta(t^c) irreducible
  bool rho_zero_vanishes = false;
  std::string rho_zero_justification;
};

struct PairwiseRecord {
  std::string label_i, label_j;
  CoprimalityCertificate cert;
};

struct IndependenceCertificate {
  std::string schema = kCertificateSchema;
  std::string tool_version = kToolVersion;
  unsigned long c_max = 0;
  std::vector<MemberRecord> members;
  std::vector<PairwiseRecord> pairwise;
  std::vector<TargetRecord> targets;
  std::string conclusion;
};

struct CertificationFailure {
  enum Kind {
    EmptyFamily,
    DuplicateLabel,
    InconsistentHypotheses,
    IrreducibilityUnmet,
    CoprimalityUnmet,
    IndeterminateCase,
    AnisotropyUnmet,
    MissingRhoOne,
    RhoZeroUnmet,
  } kind = EmptyFamily;
  std::string detail;
};

struct CertifyOutcome {
  std::optional<IndependenceCertificate> certificate;
  std::optional<CertificationFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

/// Runs the full case analysis for the family at complexities c <= c_max;
/// returns either a complete certificate or the first unmet hypothesis in
/// the fixed order irreducibility -> coprimality -> anisotropy ->
/// rho-assertions.
CertifyOutcome certify_independence(const std::vector<KnotHypotheses>& family,
                                    unsigned long c_max);

/// Canonical JSON (sorted keys, schema "v1") including a SHA-256 digest of
/// the digest-free document.
std::string certificate_to_json(const IndependenceCertificate& cert);

/// Parses a certificate; throws std::invalid_argument on malformed input.
/// The recorded digest is kept for verify_certificate_json.
IndependenceCertificate certificate_from_json(const std::string& text);

struct VerificationResult {
  bool ok = false;
  std::string reason;  // first failed check when !ok
};

/// Re-executes every recorded gcd, equality, factorization, and anisotropy
/// check from scratch.
VerificationResult verify_certificate(const IndependenceCertificate& cert);

/// Digest check plus full semantic re-verification of the JSON document.
/// Throws std::invalid_argument on malformed input.
VerificationResult verify_certificate_json(const std::string& text);

}  // namespace knotconc

#endif
