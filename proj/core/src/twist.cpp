#include "knotconc/twist.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace knotconc {

namespace {

const char* kDavisSource = "Davis (2012), twist-knot rho1 computations";

bool is_pronic(long n, long* m_out = nullptr) {
  // n = m(m-1) for some integer m >= 0.
  for (long m = 0; m * (m - 1) <= n; ++m) {
    if (m * (m - 1) == n) {
      if (m_out) *m_out = m;
      return true;
    }
  }
  return false;
}

bool is_perfect_power(long n, long* base = nullptr, long* exp = nullptr) {
  // n = m^k with k > 1, n >= 2 expected.
  for (long m = 2; m * m <= n; ++m) {
    long acc = m * m;
    long k = 2;
    while (acc < n && acc <= n / m) {
      acc *= m;
      ++k;
    }
    if (acc == n) {
      if (base) *base = m;
      if (exp) *exp = k;
      return true;
    }
  }
  return false;
}

}  // namespace

SeifertMatrix twist_seifert_matrix(long n) {
  if (n < 0) throw std::invalid_argument("twist parameter must be >= 0");
  if (n == 0) return SeifertMatrix({});
  return SeifertMatrix({{Integer(-1), Integer(1)}, {Integer(0), Integer(n)}});
}

LaurentPoly twist_alexander(long n) {
  if (n < 0) throw std::invalid_argument("twist parameter must be >= 0");
  LaurentPoly p = LaurentPoly(Rational(n), 2) -
                  LaurentPoly(Rational(2 * n + 1), 1) + LaurentPoly(Rational(n), 0);
  return p.normalize();
}

ACClassification classify_ac(long n) {
  if (n < 0) throw std::invalid_argument("twist parameter must be >= 0");
  ACClassification out;
  out.algebraically_slice = is_pronic(n);
  {
    long r = 0;
    while (r * r < n) ++r;
    out.square = (r * r == n);
  }
  out.perfect_power = n >= 2 && is_perfect_power(n);
  if (!out.algebraically_slice) {
    long bound = 0;
    while (bound * bound < n) ++bound;  // ceil(sqrt(n))
    for (long a = 1; a <= bound + 1 && !out.order_two; ++a)
      for (long b = 1; b <= bound; ++b) {
        if (a * a - a + b * b == n) {
          out.order_two = true;
          out.order_two_witness = {a, b};
          break;
        }
      }
  }
  return out;
}

StrongIrreducibilityCertificate strong_irreducibility(long n) {
  if (n < 2)
    throw std::invalid_argument(
        "strong irreducibility criterion needs n >= 2");
  StrongIrreducibilityCertificate cert;
  long m = 0, base = 0, exp = 0;
  if (is_pronic(n, &m)) {
    std::ostringstream os;
    os << "n = " << m << "*" << (m - 1) << " is of the form m(m-1)";
    cert.reasons.push_back(os.str());
  }
  if (is_perfect_power(n, &base, &exp)) {
    std::ostringstream os;
    os << "n = " << base << "^" << exp << " is a perfect power";
    cert.reasons.push_back(os.str());
  }
  cert.criterion_holds = cert.reasons.empty();
  return cert;
}

DavisFamilyMember davis_family(long k) {
  if (k <= 0 || k % 2 == 0)
    throw std::invalid_argument("family parameter k must be odd and positive");
  DavisFamilyMember m;
  m.k = k;
  m.n = 36 * k * k - 6 * k + 4;
  m.n_mod_3_is_1 = (m.n % 3 == 1);
  long v = 0, t = m.n;
  while (t % 2 == 0) { t /= 2; ++v; }
  m.two_adic_valuation_is_1 = (v == 1);
  m.witness = {6 * k, 2};
  m.witness_valid =
      m.witness.first * m.witness.first - m.witness.first +
          m.witness.second * m.witness.second == m.n;
  ACClassification ac = classify_ac(m.n);
  m.order_two = ac.order_two;
  m.strongly_irreducible = strong_irreducibility(m.n).criterion_holds;
  return m;
}

RhoOneTable RhoOneTable::builtin() {
  RhoOneTable t;
  for (long k = 1; k <= 99; k += 2) {
    RhoOneStatus s;
    s.n = 36 * k * k - 6 * k + 4;
    s.asserted = true;
    s.nonzero = true;
    s.source = kDavisSource;
    t.entries_[s.n] = std::move(s);
  }
  return t;
}

RhoOneTable RhoOneTable::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_array())
    throw std::invalid_argument("rho1 table must be a JSON list");
  RhoOneTable t;
  for (const auto& e : j) {
    RhoOneStatus s;
    s.n = e.at("n").get<long>();
    s.nonzero = e.at("nonzero").get<bool>();
    s.source = e.at("source").get<std::string>();
    s.asserted = true;
    t.entries_[s.n] = std::move(s);
  }
  return t;
}

RhoOneTable RhoOneTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rho1 table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

RhoOneStatus RhoOneTable::status(long n) const {
  auto it = entries_.find(n);
  if (it != entries_.end()) return it->second;
  RhoOneStatus s;
  s.n = n;
  s.asserted = false;
  s.nonzero = false;
  s.source = "unasserted";
  return s;
}

}  // namespace knotconc
