#include "knotconc/certify.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "knotconc/factor.hpp"
#include "knotconc/seifert.hpp"

namespace knotconc {

namespace {

using nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

// --- enum <-> string ---

std::string kind_str(FiniteOrderEvidence::Kind k) {
  return k == FiniteOrderEvidence::OrderTwoTwist ? "order_two_twist"
                                                 : "asserted_external";
}
FiniteOrderEvidence::Kind finite_kind(const std::string& s) {
  if (s == "order_two_twist") return FiniteOrderEvidence::OrderTwoTwist;
  if (s == "asserted_external") return FiniteOrderEvidence::AssertedExternal;
  throw std::invalid_argument("bad finite-order evidence kind: " + s);
}
std::string kind_str(StrongIrredEvidence::Kind k) {
  return k == StrongIrredEvidence::BullockDavis ? "bullock_davis" : "direct";
}
StrongIrredEvidence::Kind irred_kind(const std::string& s) {
  if (s == "bullock_davis") return StrongIrredEvidence::BullockDavis;
  if (s == "direct") return StrongIrredEvidence::Direct;
  throw std::invalid_argument("bad strong-irreducibility evidence kind: " + s);
}
std::string case_str(LocalizationCase k) {
  switch (k) {
    case LocalizationCase::CaseA_rho0: return "A";
    case LocalizationCase::CaseB_rho1: return "B";
    default: return "indeterminate";
  }
}
LocalizationCase case_kind(const std::string& s) {
  if (s == "A") return LocalizationCase::CaseA_rho0;
  if (s == "B") return LocalizationCase::CaseB_rho1;
  if (s == "indeterminate") return LocalizationCase::Indeterminate;
  throw std::invalid_argument("bad localization case: " + s);
}
std::string verdict_str(AnisotropyCertificate::Verdict v) {
  switch (v) {
    case AnisotropyCertificate::Certified: return "certified";
    case AnisotropyCertificate::Refuted: return "refuted";
    default: return "unknown";
  }
}
AnisotropyCertificate::Verdict verdict_kind(const std::string& s) {
  if (s == "certified") return AnisotropyCertificate::Certified;
  if (s == "refuted") return AnisotropyCertificate::Refuted;
  if (s == "unknown") return AnisotropyCertificate::Unknown;
  throw std::invalid_argument("bad anisotropy verdict: " + s);
}

// --- JSON serialization ---

json to_json(const AnisotropyCertificate& a) {
  json j{{"verdict", verdict_str(a.verdict)}, {"method", a.method}};
  if (a.witness) j["witness"] = a.witness->to_string();
  return j;
}
AnisotropyCertificate anis_from_json(const json& j) {
  AnisotropyCertificate a;
  a.verdict = verdict_kind(j.at("verdict").get<std::string>());
  a.method = j.at("method").get<std::string>();
  if (j.contains("witness"))
    a.witness = LaurentPoly::parse(j.at("witness").get<std::string>());
  return a;
}

json to_json(const MemberRecord& m) {
  json fo{{"kind", kind_str(m.hyp.finite_order.kind)}};
  if (m.hyp.finite_order.kind == FiniteOrderEvidence::OrderTwoTwist) {
    fo["n"] = m.hyp.finite_order.n;
    fo["a"] = m.hyp.finite_order.a;
    fo["b"] = m.hyp.finite_order.b;
  } else {
    fo["citation"] = m.hyp.finite_order.citation;
  }
  json si{{"kind", kind_str(m.hyp.strong_irred.kind)}};
  if (m.hyp.strong_irred.kind == StrongIrredEvidence::BullockDavis)
    si["n"] = m.hyp.strong_irred.n;
  else
    si["c_checked"] = m.hyp.strong_irred.c_checked;
  return json{
      {"label", m.hyp.label},
      {"delta", m.hyp.delta.to_string()},
      {"complexity", m.hyp.complexity},
      {"finite_order", fo},
      {"strong_irred", si},
      {"rho_one",
       {{"n", m.hyp.rho_one.n},
        {"nonzero", m.hyp.rho_one.nonzero},
        {"source", m.hyp.rho_one.source}}},
      {"irreducibility_checked", m.irreducibility_checked},
      {"rho_zero",
       {{"vanishes", m.rho_zero_vanishes},
        {"justification", m.rho_zero_justification}}}};
}

MemberRecord member_from_json(const json& j) {
  MemberRecord m;
  m.hyp.label = j.at("label").get<std::string>();
  m.hyp.delta = LaurentPoly::parse(j.at("delta").get<std::string>());
  m.hyp.complexity = j.at("complexity").get<unsigned long>();
  const json& fo = j.at("finite_order");
  m.hyp.finite_order.kind = finite_kind(fo.at("kind").get<std::string>());
  if (m.hyp.finite_order.kind == FiniteOrderEvidence::OrderTwoTwist) {
    m.hyp.finite_order.n = fo.at("n").get<long>();
    m.hyp.finite_order.a = fo.at("a").get<long>();
    m.hyp.finite_order.b = fo.at("b").get<long>();
  } else {
    m.hyp.finite_order.citation = fo.at("citation").get<std::string>();
  }
  const json& si = j.at("strong_irred");
  m.hyp.strong_irred.kind = irred_kind(si.at("kind").get<std::string>());
  if (m.hyp.strong_irred.kind == StrongIrredEvidence::BullockDavis)
    m.hyp.strong_irred.n = si.at("n").get<long>();
  else
    m.hyp.strong_irred.c_checked = si.at("c_checked").get<unsigned long>();
  const json& r1 = j.at("rho_one");
  m.hyp.rho_one.n = r1.at("n").get<long>();
  m.hyp.rho_one.nonzero = r1.at("nonzero").get<bool>();
  m.hyp.rho_one.source = r1.at("source").get<std::string>();
  m.hyp.rho_one.asserted = true;
  m.irreducibility_checked =
      j.at("irreducibility_checked").get<std::vector<unsigned long>>();
  m.rho_zero_vanishes = j.at("rho_zero").at("vanishes").get<bool>();
  m.rho_zero_justification =
      j.at("rho_zero").at("justification").get<std::string>();
  return m;
}

json to_json(const IndependenceCertificate& c) {
  json members = json::array(), pairwise = json::array(),
       targets = json::array();
  for (const auto& m : c.members) members.push_back(to_json(m));
  for (const auto& p : c.pairwise) {
    json entries = json::array();
    for (const auto& e : p.cert.entries)
      entries.push_back(
          {{"c", e.c}, {"d", e.d}, {"gcd", e.g.to_string()}});
    pairwise.push_back({{"label_i", p.label_i},
                        {"label_j", p.label_j},
                        {"c_max", p.cert.c_max},
                        {"d_max", p.cert.d_max},
                        {"all_coprime", p.cert.all_coprime},
                        {"entries", entries}});
  }
  for (const auto& t : c.targets) {
    json cases = json::array();
    for (const auto& cs : t.cases)
      cases.push_back({{"member", cs.member_label},
                       {"case", case_str(cs.kind)},
                       {"gcd", cs.gcd_witness.to_string()},
                       {"anisotropy", to_json(cs.anisotropy)}});
    targets.push_back({{"target", t.target_label},
                       {"c", t.c},
                       {"p", t.p.to_string()},
                       {"cases", cases}});
  }
  return json{{"schema", c.schema},
              {"tool_version", c.tool_version},
              {"c_max", c.c_max},
              {"members", members},
              {"pairwise", pairwise},
              {"targets", targets},
              {"conclusion", c.conclusion}};
}

IndependenceCertificate cert_from_json(const json& j) {
  IndependenceCertificate c;
  c.schema = j.at("schema").get<std::string>();
  c.tool_version = j.at("tool_version").get<std::string>();
  c.c_max = j.at("c_max").get<unsigned long>();
  for (const auto& m : j.at("members")) c.members.push_back(member_from_json(m));
  for (const auto& p : j.at("pairwise")) {
    PairwiseRecord r;
    r.label_i = p.at("label_i").get<std::string>();
    r.label_j = p.at("label_j").get<std::string>();
    r.cert.c_max = p.at("c_max").get<unsigned long>();
    r.cert.d_max = p.at("d_max").get<unsigned long>();
    r.cert.all_coprime = p.at("all_coprime").get<bool>();
    for (const auto& e : p.at("entries")) {
      CoprimalityEntry ce;
      ce.c = e.at("c").get<unsigned long>();
      ce.d = e.at("d").get<unsigned long>();
      ce.g = LaurentPoly::parse(e.at("gcd").get<std::string>());
      r.cert.entries.push_back(std::move(ce));
    }
    c.pairwise.push_back(std::move(r));
  }
  for (const auto& t : j.at("targets")) {
    TargetRecord r;
    r.target_label = t.at("target").get<std::string>();
    r.c = t.at("c").get<unsigned long>();
    r.p = LaurentPoly::parse(t.at("p").get<std::string>());
    for (const auto& cs : t.at("cases")) {
      CaseRecord cr;
      cr.member_label = cs.at("member").get<std::string>();
      cr.kind = case_kind(cs.at("case").get<std::string>());
      cr.gcd_witness = LaurentPoly::parse(cs.at("gcd").get<std::string>());
      cr.anisotropy = anis_from_json(cs.at("anisotropy"));
      r.cases.push_back(std::move(cr));
    }
    c.targets.push_back(std::move(r));
  }
  c.conclusion = j.at("conclusion").get<std::string>();
  return c;
}

// --- hypothesis-level helpers ---

bool delta_consistent(const KnotHypotheses& h, std::string* why) {
  if (h.delta.is_zero() || h.delta.is_constant()) {
    *why = h.label + ": Alexander polynomial is degenerate";
    return false;
  }
  if (!h.delta.is_symmetric()) {
    *why = h.label + ": Alexander polynomial is not symmetric";
    return false;
  }
  Rational at_one = h.delta.normalize().evaluate(Rational(1));
  if (at_one != 1 && at_one != -1) {
    *why = h.label + ": |Delta(1)| != 1";
    return false;
  }
  if (h.complexity == 0) {
    *why = h.label + ": complexity must be positive";
    return false;
  }
  const auto& fo = h.finite_order;
  if (fo.kind == FiniteOrderEvidence::OrderTwoTwist) {
    if (fo.a <= 0 || fo.b <= 0 || fo.a * fo.a - fo.a + fo.b * fo.b != fo.n) {
      *why = h.label + ": order-two witness does not satisfy n = a^2 - a + b^2";
      return false;
    }
    ACClassification ac = classify_ac(fo.n);
    if (!ac.order_two) {
      *why = h.label + ": twist knot is not of order two in AC";
      return false;
    }
    LaurentPoly expect =
        twist_alexander(fo.n).inflate(h.complexity).normalize();
    if (h.delta.normalize() != expect) {
      *why = h.label + ": delta does not match the twist-knot polynomial";
      return false;
    }
  } else if (fo.citation.empty()) {
    *why = h.label + ": external finite-order evidence lacks a citation";
    return false;
  }
  return true;
}

// Multiplicity of the irreducible q in f.
unsigned multiplicity_in(const LaurentPoly& q, const LaurentPoly& f) {
  unsigned m = 0;
  LaurentPoly rest = f;
  while (divides(q, rest)) {
    rest = divide_exact(rest, q);
    ++m;
    if (rest.is_constant()) break;
  }
  return m;
}

std::string check_rho_zero(const KnotHypotheses& h, bool* vanishes) {
  if (h.finite_order.kind == FiniteOrderEvidence::AssertedExternal) {
    *vanishes = true;
    return "assumed from external finite-order evidence: " +
           h.finite_order.citation;
  }
  SignatureProfile prof =
      signature_profile(twist_seifert_matrix(h.finite_order.n));
  *vanishes = !prof.has_jumps() && prof.base_value == 0;
  std::ostringstream os;
  if (*vanishes) {
    os << "signature profile of the twist knot n=" << h.finite_order.n
       << " has no jumps and base value 0, so the zeroth-order signature "
          "integral is exactly 0; this is preserved by (c,1)-cabling";
  } else {
    os << "signature profile of the twist knot n=" << h.finite_order.n
       << " does not vanish";
  }
  return os.str();
}

PairedModule build_oracle(const KnotHypotheses& h, unsigned long c) {
  if (h.finite_order.kind != FiniteOrderEvidence::OrderTwoTwist)
    throw NonCyclicError("no Seifert presentation available for an oracle");
  return pairing_from_seifert(twist_seifert_matrix(h.finite_order.n),
                              h.complexity * c);
}

}  // namespace

KnotHypotheses twist_hypotheses(long n, const RhoOneTable& table) {
  KnotHypotheses h;
  std::ostringstream os;
  os << "K_" << n;
  h.label = os.str();
  h.delta = twist_alexander(n);
  h.complexity = 1;
  h.finite_order.kind = FiniteOrderEvidence::OrderTwoTwist;
  h.finite_order.n = n;
  ACClassification ac = classify_ac(n);
  if (ac.order_two_witness) {
    h.finite_order.a = ac.order_two_witness->first;
    h.finite_order.b = ac.order_two_witness->second;
  }
  h.strong_irred.kind = StrongIrredEvidence::BullockDavis;
  h.strong_irred.n = n;
  h.rho_one = table.status(n);
  return h;
}

KnotHypotheses cable_transfer(const KnotHypotheses& h, unsigned long c) {
  if (c == 0) throw std::invalid_argument("cable parameter must be positive");
  if (c == 1) return h;
  KnotHypotheses out = h;
  std::ostringstream os;
  os << h.label << "(" << c << ",1)";
  out.label = os.str();
  out.delta = h.delta.inflate(c).normalize();
  out.complexity = h.complexity * c;
  if (out.rho_one.asserted && out.rho_one.nonzero)
    out.rho_one.source +=
        "; transferred to the (" + std::to_string(c) +
        ",1)-cable (first-order signature at complexity 1 of the cable "
        "equals the complexity-c invariant of the companion)";
  return out;
}

CoprimalityCertificate strong_coprimality_bounded(const LaurentPoly& p,
                                                  const LaurentPoly& q,
                                                  unsigned long c_max,
                                                  unsigned long d_max) {
  if (p.is_zero() || q.is_zero() || p.is_constant() || q.is_constant())
    throw std::invalid_argument("coprimality inputs must be nonconstant");
  if (c_max == 0 || d_max == 0)
    throw std::invalid_argument("coprimality bounds must be positive");
  CoprimalityCertificate cert;
  cert.c_max = c_max;
  cert.d_max = d_max;
  cert.all_coprime = true;
  for (unsigned long c = 1; c <= c_max; ++c)
    for (unsigned long d = 1; d <= d_max; ++d) {
      CoprimalityEntry e;
      e.c = c;
      e.d = d;
      e.g = gcd(p.inflate(c), q.inflate(d));
      if (!e.g.is_constant()) cert.all_coprime = false;
      cert.entries.push_back(std::move(e));
    }
  return cert;
}

LocalizationResult localization_case(const LaurentPoly& delta, unsigned long c,
                                     const LaurentPoly& p) {
  if (delta.is_zero() || p.is_zero())
    throw std::invalid_argument("localization case inputs must be nonzero");
  if (c == 0) throw std::invalid_argument("complexity must be positive");
  LocalizationResult r;
  LaurentPoly dc = delta.inflate(c).normalize();
  r.gcd_witness = gcd(dc, p);
  if (r.gcd_witness.is_constant())
    r.kind = LocalizationCase::CaseA_rho0;
  else if (dc == p.normalize())
    r.kind = LocalizationCase::CaseB_rho1;
  else
    r.kind = LocalizationCase::Indeterminate;
  return r;
}

AnisotropyCertificate anisotropy_certificate(const LaurentPoly& delta,
                                             unsigned long c,
                                             const LaurentPoly& p,
                                             const PairedModule* oracle) {
  if (p.is_zero()) throw std::invalid_argument("p must be nonzero");
  if (delta.is_zero() || !delta.is_symmetric())
    throw std::invalid_argument("delta must be nonzero and symmetric");
  AnisotropyCertificate out;
  LaurentPoly dc = delta.inflate(c).normalize();
  if (gcd(dc, p).is_constant()) {
    out.verdict = AnisotropyCertificate::Certified;
    out.method = "coprime";
    return out;
  }
  // The remaining sufficient conditions all require every irreducible
  // factor of p to be symmetric.
  bool factors_symmetric = true;
  FactorList pf;
  if (!p.is_constant()) {
    pf = factor(p);
    for (const auto& [q, mult] : pf.factors) {
      (void)mult;
      if (!q.is_symmetric()) factors_symmetric = false;
    }
  }
  if (factors_symmetric) {
    if (dc.is_constant() || gcd(dc, dc.derivative()).is_constant()) {
      out.verdict = AnisotropyCertificate::Certified;
      out.method = "squarefree";
      return out;
    }
    bool mult_ok = true;
    for (const auto& [q, mult] : pf.factors) {
      (void)mult;
      if (multiplicity_in(q, dc) > 1) mult_ok = false;
    }
    if (mult_ok) {
      out.verdict = AnisotropyCertificate::Certified;
      out.method = "symmetric-factors";
      return out;
    }
  }
  if (oracle) {
    PairedModule local = localize(*oracle, p);
    auto found = find_isotropic(local);
    out.method = "oracle";
    if (found.empty()) {
      out.verdict = AnisotropyCertificate::Certified;
    } else {
      out.verdict = AnisotropyCertificate::Refuted;
      out.witness = found.front().sub.generator_divisor;
    }
    return out;
  }
  out.verdict = AnisotropyCertificate::Unknown;
  out.method = "none";
  return out;
}

CertifyOutcome certify_independence(const std::vector<KnotHypotheses>& family,
                                    unsigned long c_max) {
  CertifyOutcome out;
  auto fail = [&](CertificationFailure::Kind k, const std::string& d) {
    out.failure = CertificationFailure{k, d};
    return out;
  };
  if (family.empty())
    return fail(CertificationFailure::EmptyFamily, "family is empty");
  if (c_max == 0)
    return fail(CertificationFailure::EmptyFamily, "c_max must be positive");
  {
    std::set<std::string> labels;
    for (const auto& h : family)
      if (!labels.insert(h.label).second)
        return fail(CertificationFailure::DuplicateLabel,
                    "duplicate label: " + h.label);
  }
  for (const auto& h : family) {
    std::string why;
    if (!delta_consistent(h, &why))
      return fail(CertificationFailure::InconsistentHypotheses, why);
  }

  IndependenceCertificate cert;
  cert.c_max = c_max;

  // 1. Strong irreducibility: evidence plus direct machine checks c <= c_max.
  for (const auto& h : family) {
    MemberRecord rec;
    rec.hyp = h;
    if (h.strong_irred.kind == StrongIrredEvidence::BullockDavis) {
      auto si = strong_irreducibility(h.strong_irred.n);
      if (!si.criterion_holds) {
        std::string detail = "strong irreducibility: ";
        for (size_t i = 0; i < si.reasons.size(); ++i)
          detail += (i ? "; " : "") + si.reasons[i];
        return fail(CertificationFailure::IrreducibilityUnmet,
                    h.label + ": " + detail);
      }
    } else if (h.strong_irred.c_checked < c_max) {
      return fail(CertificationFailure::IrreducibilityUnmet,
                  h.label + ": direct evidence covers fewer complexities "
                            "than c_max");
    }
    for (unsigned long c = 1; c <= c_max; ++c) {
      if (!is_irreducible(h.delta.inflate(c)))
        return fail(CertificationFailure::IrreducibilityUnmet,
                    h.label + ": delta(t^" + std::to_string(c) +
                        ") is reducible");
      rec.irreducibility_checked.push_back(c);
    }
    cert.members.push_back(std::move(rec));
  }

  // 2. Pairwise bounded strong coprimality.
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      PairwiseRecord pr;
      pr.label_i = family[i].label;
      pr.label_j = family[j].label;
      pr.cert = strong_coprimality_bounded(family[i].delta, family[j].delta,
                                           c_max, c_max);
      if (!pr.cert.all_coprime)
        return fail(CertificationFailure::CoprimalityUnmet,
                    pr.label_i + " and " + pr.label_j +
                        " share a factor after inflation");
      cert.pairwise.push_back(std::move(pr));
    }

  // 3. Localization case analysis and anisotropy per target (j, c).
  for (size_t j = 0; j < family.size(); ++j) {
    for (unsigned long c = 1; c <= c_max; ++c) {
      TargetRecord tr;
      tr.target_label = family[j].label;
      tr.c = c;
      tr.p = family[j].delta.inflate(c).normalize();
      for (size_t i = 0; i < family.size(); ++i) {
        CaseRecord cr;
        cr.member_label = family[i].label;
        LocalizationResult lr = localization_case(family[i].delta, c, tr.p);
        cr.kind = lr.kind;
        cr.gcd_witness = lr.gcd_witness;
        if (lr.kind == LocalizationCase::Indeterminate)
          return fail(CertificationFailure::IndeterminateCase,
                      family[i].label + " vs " + tr.target_label +
                          " at c=" + std::to_string(c) +
                          ": gcd = " + lr.gcd_witness.to_string());
        if ((i == j) != (lr.kind == LocalizationCase::CaseB_rho1))
          return fail(CertificationFailure::CoprimalityUnmet,
                      family[i].label + " vs " + tr.target_label +
                          ": unexpected localization case");
        cr.anisotropy = anisotropy_certificate(family[i].delta, c, tr.p);
        if (cr.anisotropy.verdict == AnisotropyCertificate::Unknown &&
            family[i].finite_order.kind == FiniteOrderEvidence::OrderTwoTwist) {
          PairedModule oracle = build_oracle(family[i], c);
          cr.anisotropy =
              anisotropy_certificate(family[i].delta, c, tr.p, &oracle);
        }
        if (cr.anisotropy.verdict != AnisotropyCertificate::Certified) {
          std::string detail = family[i].label + " at (c=" +
                               std::to_string(c) + ", p=" + tr.p.to_string() +
                               ")";
          if (cr.anisotropy.witness)
            detail += "; isotropic witness " + cr.anisotropy.witness->to_string();
          return fail(CertificationFailure::AnisotropyUnmet, detail);
        }
        tr.cases.push_back(std::move(cr));
      }
      cert.targets.push_back(std::move(tr));
    }
  }

  // 4. rho-assertions.
  for (auto& rec : cert.members) {
    if (!rec.hyp.rho_one.asserted || !rec.hyp.rho_one.nonzero)
      return fail(CertificationFailure::MissingRhoOne,
                  rec.hyp.label + ": first-order signature status unasserted");
    rec.rho_zero_justification =
        check_rho_zero(rec.hyp, &rec.rho_zero_vanishes);
    if (!rec.rho_zero_vanishes)
      return fail(CertificationFailure::RhoZeroUnmet,
                  rec.hyp.label + ": " + rec.rho_zero_justification);
  }

  std::ostringstream concl;
  concl << "every hypothesis of the independence criterion holds for all "
           "complexities c <= "
        << c_max
        << "; any slice linear combination forces all coefficients to "
           "vanish, so the family is linearly independent in the rational "
           "concordance group";
  cert.conclusion = concl.str();
  out.certificate = std::move(cert);
  return out;
}

std::string certificate_to_json(const IndependenceCertificate& cert) {
  json doc = to_json(cert);
  doc["digest"] = sha256_hex(doc.dump());
  return doc.dump(2) + "\n";
}

IndependenceCertificate certificate_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") +
                                e.what());
  }
  try {
    return cert_from_json(doc);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") +
                                e.what());
  }
}

VerificationResult verify_certificate(const IndependenceCertificate& cert) {
  auto fail = [](const std::string& r) {
    return VerificationResult{false, r};
  };
  if (cert.schema != kCertificateSchema) return fail("unknown schema");
  if (cert.members.empty()) return fail("empty family");
  if (cert.c_max == 0) return fail("c_max must be positive");
  std::map<std::string, const MemberRecord*> by_label;
  for (const auto& m : cert.members)
    if (!by_label.emplace(m.hyp.label, &m).second)
      return fail("duplicate label: " + m.hyp.label);

  // Members: hypothesis consistency, evidence, irreducibility re-execution.
  for (const auto& m : cert.members) {
    std::string why;
    if (!delta_consistent(m.hyp, &why)) return fail(why);
    if (m.hyp.strong_irred.kind == StrongIrredEvidence::BullockDavis) {
      if (!strong_irreducibility(m.hyp.strong_irred.n).criterion_holds)
        return fail(m.hyp.label + ": Bullock-Davis criterion fails");
    } else if (m.hyp.strong_irred.c_checked < cert.c_max) {
      return fail(m.hyp.label + ": direct irreducibility evidence too short");
    }
    std::set<unsigned long> checked(m.irreducibility_checked.begin(),
                                    m.irreducibility_checked.end());
    for (unsigned long c = 1; c <= cert.c_max; ++c) {
      if (!checked.count(c))
        return fail(m.hyp.label + ": missing irreducibility record at c=" +
                    std::to_string(c));
    }
    for (unsigned long c : m.irreducibility_checked)
      if (!is_irreducible(m.hyp.delta.inflate(c)))
        return fail(m.hyp.label + ": recorded irreducibility at c=" +
                    std::to_string(c) + " fails re-execution");
    if (!m.hyp.rho_one.asserted || !m.hyp.rho_one.nonzero ||
        m.hyp.rho_one.source.empty())
      return fail(m.hyp.label + ": rho1 assertion missing");
    bool vanishes = false;
    check_rho_zero(m.hyp, &vanishes);
    if (!m.rho_zero_vanishes || !vanishes)
      return fail(m.hyp.label + ": zeroth-order signature does not vanish");
  }

  // Pairwise coprimality: coverage and re-execution.
  std::set<std::pair<std::string, std::string>> pairs_seen;
  for (const auto& p : cert.pairwise) {
    auto it_i = by_label.find(p.label_i), it_j = by_label.find(p.label_j);
    if (it_i == by_label.end() || it_j == by_label.end())
      return fail("pairwise record names unknown member");
    pairs_seen.insert({p.label_i, p.label_j});
    if (p.cert.c_max < cert.c_max || p.cert.d_max < cert.c_max)
      return fail("pairwise record bounds below c_max");
    if (!p.cert.all_coprime) return fail("pairwise record admits a common factor");
    std::set<std::pair<unsigned long, unsigned long>> cd_seen;
    for (const auto& e : p.cert.entries) {
      LaurentPoly g = gcd(it_i->second->hyp.delta.inflate(e.c),
                          it_j->second->hyp.delta.inflate(e.d));
      if (g != e.g.normalize() || !g.is_constant())
        return fail("pairwise gcd witness fails re-execution for " +
                    p.label_i + "/" + p.label_j);
      cd_seen.insert({e.c, e.d});
    }
    for (unsigned long c = 1; c <= p.cert.c_max; ++c)
      for (unsigned long d = 1; d <= p.cert.d_max; ++d)
        if (!cd_seen.count({c, d}))
          return fail("pairwise record misses an inflation pair");
  }
  for (const auto& [li, mi] : by_label)
    for (const auto& [lj, mj] : by_label) {
      (void)mi; (void)mj;
      if (li < lj && !pairs_seen.count({li, lj}) &&
          !pairs_seen.count({lj, li}))
        return fail("pairwise coverage incomplete: " + li + "/" + lj);
    }

  // Targets: coverage, case re-execution, anisotropy re-derivation.
  std::set<std::pair<std::string, unsigned long>> targets_seen;
  for (const auto& t : cert.targets) {
    auto it_t = by_label.find(t.target_label);
    if (it_t == by_label.end()) return fail("target names unknown member");
    if (t.c == 0 || t.c > cert.c_max) return fail("target complexity out of range");
    targets_seen.insert({t.target_label, t.c});
    if (t.p != it_t->second->hyp.delta.inflate(t.c).normalize())
      return fail("target polynomial does not match delta(t^c)");
    std::set<std::string> members_seen;
    for (const auto& cs : t.cases) {
      auto it_m = by_label.find(cs.member_label);
      if (it_m == by_label.end()) return fail("case names unknown member");
      members_seen.insert(cs.member_label);
      LocalizationResult lr =
          localization_case(it_m->second->hyp.delta, t.c, t.p);
      if (lr.kind != cs.kind || lr.gcd_witness != cs.gcd_witness.normalize())
        return fail("localization case fails re-execution for " +
                    cs.member_label + " vs " + t.target_label);
      bool expect_b = cs.member_label == t.target_label;
      if (expect_b != (lr.kind == LocalizationCase::CaseB_rho1))
        return fail("localization case has the wrong kind for " +
                    cs.member_label);
      if (cs.anisotropy.verdict != AnisotropyCertificate::Certified)
        return fail("anisotropy not certified for " + cs.member_label);
      AnisotropyCertificate re =
          anisotropy_certificate(it_m->second->hyp.delta, t.c, t.p);
      if (re.verdict != AnisotropyCertificate::Certified) {
        if (it_m->second->hyp.finite_order.kind !=
            FiniteOrderEvidence::OrderTwoTwist)
          return fail("anisotropy fails re-derivation for " + cs.member_label);
        PairedModule oracle = build_oracle(it_m->second->hyp, t.c);
        re = anisotropy_certificate(it_m->second->hyp.delta, t.c, t.p, &oracle);
        if (re.verdict != AnisotropyCertificate::Certified)
          return fail("anisotropy fails re-derivation for " + cs.member_label);
      }
    }
    for (const auto& [label, m] : by_label) {
      (void)m;
      if (!members_seen.count(label))
        return fail("target case coverage incomplete for " + label);
    }
  }
  for (const auto& [label, m] : by_label) {
    (void)m;
    for (unsigned long c = 1; c <= cert.c_max; ++c)
      if (!targets_seen.count({label, c}))
        return fail("target coverage incomplete: " + label + " at c=" +
                    std::to_string(c));
  }
  return VerificationResult{true, ""};
}

VerificationResult verify_certificate_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("digest") ||
      !doc.at("digest").is_string())
    throw std::invalid_argument("certificate lacks a digest field");
  std::string recorded = doc.at("digest").get<std::string>();
  json body = doc;
  body.erase("digest");
  if (sha256_hex(body.dump()) != recorded)
    return VerificationResult{false, "digest mismatch"};
  IndependenceCertificate cert = certificate_from_json(text);
  return verify_certificate(cert);
}

}  // namespace knotconc
