// Command-line front end: knot analysis reports, family enumeration,
// independence certificate generation/verification, and Blanchfield
// submodule exploration.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "knotconc/blanchfield.hpp"
#include "knotconc/certify.hpp"
#include "knotconc/factor.hpp"
#include "knotconc/seifert.hpp"
#include "knotconc/twist.hpp"

using json = nlohmann::json;
using namespace knotconc;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string rational_str(const Rational& r) { return r.get_str(); }

json profile_json(const SignatureProfile& prof) {
  json jumps = json::array();
  for (const auto& jp : prof.jumps) {
    AlgebraicReal z = jp.location;
    z.refine(Rational(1, 1000000));
    jumps.push_back({{"z", z.to_string()},
                     {"z_interval",
                      {rational_str(z.lo()), rational_str(z.hi())}},
                     {"value_left", jp.value_left},
                     {"value_right", jp.value_right}});
  }
  return json{{"jump_count", prof.jumps.size()},
              {"jumps", jumps},
              {"base_value", prof.base_value},
              {"sigma_at_minus_one", prof.sigma_at_minus_one}};
}

json rho_zero_json(const RhoZero& rho) {
  json terms = json::array();
  for (const auto& t : rho.terms) {
    AlgebraicReal z = t.z;
    z.refine(Rational(1, 1000000));
    terms.push_back({{"coeff", t.coeff}, {"z", z.to_string()}});
  }
  std::ostringstream sym;
  sym << rational_str(rho.constant);
  for (const auto& t : rho.terms)
    sym << " + " << t.coeff << "*arccos(z/2)/pi at z = " << [&] {
      AlgebraicReal z = t.z;
      z.refine(Rational(1, 1000000));
      return z.to_string();
    }();
  return json{{"constant", rational_str(rho.constant)},
              {"terms", terms},
              {"symbolic", sym.str()},
              {"decimal", rho.decimal},
              {"value", rho.value},
              {"error_bound", rho.error_bound},
              {"exactly_zero", rho.is_exactly_zero()}};
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
  }
}

void emit(const json& j, bool tsv) {
  if (!tsv) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  for (const auto& [k, v] : rows) std::cout << k << "\t" << v << "\n";
}

RhoOneTable load_table(const std::string& path) {
  if (path.empty()) return RhoOneTable::builtin();
  return RhoOneTable::load_file(path);
}

json analyze_report(const SeifertMatrix& V, const json& subject,
                    const std::string& input_hash) {
  LaurentPoly delta = alexander_poly(V);
  SignatureProfile prof = signature_profile(V);
  RhoZero rho = rho_zero(V);
  json rep{{"subject", subject},
           {"input_sha256", input_hash},
           {"tool_version", kToolVersion},
           {"alexander", delta.to_string()},
           {"alexander_irreducible",
            delta.is_constant() ? false : is_irreducible(delta)},
           {"genus", V.genus()},
           {"signature", signature(V)},
           {"signature_profile", profile_json(prof)},
           {"rho_zero", rho_zero_json(rho)}};
  return rep;
}

int cmd_analyze(long twist_n, const std::string& seifert_path,
                const std::string& table_path, bool tsv) {
  json rep;
  try {
    if (!seifert_path.empty()) {
      std::string text;
      try {
        text = read_file(seifert_path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      SeifertMatrix V = [&] {
        try {
          return SeifertMatrix::from_json(text);
        } catch (const std::invalid_argument&) {
          throw;
        } catch (const std::exception& e) {
          throw std::runtime_error(std::string("parse failure: ") + e.what());
        }
      }();
      rep = analyze_report(V, json{{"kind", "seifert"}, {"path", seifert_path}},
                           sha256_hex(text));
    } else {
      SeifertMatrix V = twist_seifert_matrix(twist_n);
      rep = analyze_report(V, json{{"kind", "twist"}, {"n", twist_n}},
                           sha256_hex("twist:" + std::to_string(twist_n)));
      ACClassification ac = classify_ac(twist_n);
      json acj{{"algebraically_slice", ac.algebraically_slice},
               {"order_two", ac.order_two},
               {"square", ac.square},
               {"perfect_power", ac.perfect_power}};
      if (ac.order_two_witness)
        acj["order_two_witness"] = {ac.order_two_witness->first,
                                    ac.order_two_witness->second};
      if (!ac.algebraically_slice && !ac.order_two)
        acj["note"] = "orders other than 1 and 2 are not classified by this tool";
      rep["ac_classification"] = acj;
      if (twist_n >= 2) {
        auto si = strong_irreducibility(twist_n);
        rep["strong_irreducibility"] = {{"criterion_holds", si.criterion_holds},
                                        {"reasons", si.reasons}};
      }
      RhoOneStatus r1 = load_table(table_path).status(twist_n);
      rep["rho_one"] = {{"n", r1.n},
                        {"asserted", r1.asserted},
                        {"nonzero", r1.nonzero},
                        {"source", r1.source}};
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid Seifert matrix: " << e.what() << "\n";
    return 3;
  }
  emit(rep, tsv);
  return 0;
}

int cmd_family(long k_max, bool tsv) {
  json rows = json::array();
  for (long k = 1; k <= k_max; k += 2) {
    DavisFamilyMember m = davis_family(k);
    rows.push_back({{"k", m.k},
                    {"n", m.n},
                    {"n_mod_3_is_1", m.n_mod_3_is_1},
                    {"two_adic_valuation_is_1", m.two_adic_valuation_is_1},
                    {"witness", {m.witness.first, m.witness.second}},
                    {"witness_valid", m.witness_valid},
                    {"order_two", m.order_two},
                    {"strongly_irreducible", m.strongly_irreducible},
                    {"all_checks_pass", m.all_checks_pass()}});
  }
  emit(rows, tsv);
  return 0;
}

int cmd_certify(const std::string& family_path, unsigned long c_max,
                const std::string& table_path, const std::string& out_path) {
  json spec;
  RhoOneTable table;
  try {
    spec = json::parse(read_file(family_path));
    table = load_table(table_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<KnotHypotheses> family;
  try {
    std::vector<unsigned long> cables{1};
    if (spec.contains("cables"))
      cables = spec.at("cables").get<std::vector<unsigned long>>();
    for (long n : spec.at("twists").get<std::vector<long>>())
      for (unsigned long c : cables)
        family.push_back(cable_transfer(twist_hypotheses(n, table), c));
  } catch (const std::exception& e) {
    std::cerr << "error: bad family spec: " << e.what() << "\n";
    return 2;
  }
  CertifyOutcome outcome = certify_independence(family, c_max);
  if (!outcome.ok()) {
    static const char* kind_names[] = {
        "empty family",        "duplicate label",     "inconsistent hypotheses",
        "strong irreducibility", "strong coprimality", "indeterminate localization case",
        "anisotropy",          "missing rho1 assertion", "zeroth-order signature"};
    std::cerr << "certification failed (" << kind_names[outcome.failure->kind]
              << "): " << outcome.failure->detail << "\n";
    return 1;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << certificate_to_json(*outcome.certificate);
  std::cout << "certificate written to " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& cert_path) {
  std::string text;
  try {
    text = read_file(cert_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    VerificationResult r = verify_certificate_json(text);
    if (r.ok) {
      std::cout << "certificate verified\n";
      return 0;
    }
    std::cerr << "certificate rejected: " << r.reason << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_blanchfield(long twist_n, unsigned long complexity,
                    const std::string& p_expr, bool tsv) {
  PairedModule m;
  try {
    m = pairing_from_seifert(twist_seifert_matrix(twist_n), complexity);
    if (!p_expr.empty()) m = localize(m, LaurentPoly::parse(p_expr));
  } catch (const NonCyclicError& e) {
    std::cerr << "error: non-cyclic case: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  json subs = json::array();
  for (const auto& s : submodules(m)) {
    bool iso = is_isotropic(m, s);
    json row{{"generator_divisor", s.generator_divisor.to_string()},
             {"isotropic", iso}};
    if (!m.is_zero_module()) {
      LaurentPoly perp = perp_divisor(m, s);
      row["perp_divisor"] = perp.to_string();
      row["lagrangian"] = iso && perp == s.generator_divisor;
    }
    subs.push_back(row);
  }
  json rep{{"subject", {{"kind", "twist"}, {"n", twist_n}}},
           {"complexity", complexity},
           {"zero_module", m.is_zero_module()},
           {"order", m.order.to_string()},
           {"pairing_b00", m.b00.to_string()},
           {"submodules", subs},
           {"tool_version", kToolVersion}};
  if (!p_expr.empty()) rep["localized_at"] = p_expr;
  emit(rep, tsv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact knot-concordance obstruction toolkit"};
  app.require_subcommand(1);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "tab-separated output (default: JSON)");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  std::string table_path;
  app.add_option("--rho1-table", table_path,
                 "path to the rho1 status table (default: built-in)");

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  long twist_n = -1;
  std::string seifert_path;
  auto* tw = analyze->add_option("--twist", twist_n, "twist parameter n >= 0");
  auto* sf =
      analyze->add_option("--seifert", seifert_path, "Seifert matrix JSON file");
  tw->excludes(sf);

  auto* family = app.add_subcommand("family", "enumerate the certified family");
  long k_max = 1;
  family->add_option("--kmax", k_max, "largest k (odd k <= kmax)")->required();

  auto* certify = app.add_subcommand("certify", "emit an independence certificate");
  std::string family_path, out_path = "certificate.json";
  unsigned long c_max = 3;
  certify->add_option("--family", family_path, "family spec JSON file")
      ->required();
  certify->add_option("--cmax", c_max, "largest certified complexity");
  certify->add_option("--output", out_path, "certificate output path");

  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  std::string cert_path;
  verify->add_option("certificate", cert_path, "certificate JSON file")
      ->required();

  auto* blanchfield =
      app.add_subcommand("blanchfield", "submodules and isotropy verdicts");
  long bl_twist = 0;
  unsigned long bl_c = 1;
  std::string p_expr;
  blanchfield->add_option("--twist", bl_twist, "twist parameter")->required();
  blanchfield->add_option("--complexity", bl_c, "complexity c >= 1");
  blanchfield->add_option("--p", p_expr, "localization polynomial");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    if (twist_n < 0 && seifert_path.empty()) {
      std::cerr << "error: analyze needs --twist or --seifert\n";
      return 2;
    }
    return cmd_analyze(twist_n, seifert_path, table_path, tsv);
  }
  if (family->parsed()) return cmd_family(k_max, tsv);
  if (certify->parsed())
    return cmd_certify(family_path, c_max, table_path, out_path);
  if (verify->parsed()) return cmd_verify(cert_path);
  if (blanchfield->parsed()) return cmd_blanchfield(bl_twist, bl_c, p_expr, tsv);
  return 2;
}
