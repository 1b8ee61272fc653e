#include <doctest.h>

#include <random>

#include "knotconc/factor.hpp"
#include "knotconc/twist.hpp"
#include "oracles.hpp"

using namespace knotconc;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

// Random irreducible-ish building block of degree <= 3 with coefficients in
// [-9, 9] (need not be irreducible; remultiplication is the property).
LaurentPoly random_block(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(1, 3), co(-9, 9);
  int d = deg(rng);
  LaurentPoly p;
  for (int i = 0; i < d; ++i) {
    int c = co(rng);
    if (c != 0) p = p + LaurentPoly(c, i);
  }
  int lead = co(rng);
  while (lead == 0) lead = co(rng);
  return p + LaurentPoly(lead, d);
}

std::vector<LaurentPoly> expand(const FactorList& fl) {
  std::vector<LaurentPoly> out;
  for (const auto& [f, m] : fl.factors)
    for (unsigned i = 0; i < m; ++i) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly::compare(a, b) < 0;
  });
  return out;
}

}  // namespace

TEST_CASE("squarefree decomposition") {
  // t is a unit of the Laurent ring, so t^2 is pure unit * shift
  FactorList f = squarefree_decomposition(P("1*t^2"));
  CHECK(f.factors.empty());
  CHECK(f.shift == 2);
  CHECK(f.remultiply() == P("1*t^2"));

  LaurentPoly p = P("1*t^1 + -1*t^0") * P("1*t^1 + -1*t^0") * P("1*t^1 + 1*t^0");
  FactorList g = squarefree_decomposition(p);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.remultiply() == p);

  FactorList h = squarefree_decomposition(P("1*t^2 + -3*t^1 + 1*t^0"));
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].second == 1);
  CHECK_THROWS(squarefree_decomposition(LaurentPoly()));
}

TEST_CASE("factor on known inputs") {
  FactorList f = factor(P("4*t^4 + -9*t^2 + 4*t^0"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == P("2*t^2 + -1*t^1 + -2*t^0"));
  CHECK(f.factors[1].first == P("2*t^2 + 1*t^1 + -2*t^0"));

  FactorList g = factor(P("1*t^2 + -3*t^1 + 1*t^0"));
  CHECK(g.factors.size() == 1);
  CHECK(g.factors[0].second == 1);

  FactorList h = factor(P("6*t^2 + -13*t^1 + 6*t^0"));
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].first == P("2*t^1 + -3*t^0"));
  CHECK(h.factors[1].first == P("3*t^1 + -2*t^0"));
  CHECK_THROWS(factor(LaurentPoly()));
}

TEST_CASE("factor handles cyclotomic-like and shifted inputs") {
  // t^4 + 1 is irreducible over Q but reducible mod every prime.
  CHECK(is_irreducible(P("1*t^4 + 1*t^0")));
  FactorList f = factor(P("1*t^4 + -1*t^0"));
  CHECK(f.factors.size() == 3);  // (t-1)(t+1)(t^2+1)
  FactorList g = factor(P("3*t^-2 + -3*t^4"));  // unit * t^-2 * (1 - t^6)
  CHECK(g.remultiply() == P("3*t^-2 + -3*t^4"));
  FactorList h = factor(LaurentPoly(Rational(7, 3)));
  CHECK(h.factors.empty());
  CHECK(h.remultiply() == LaurentPoly(Rational(7, 3)));
}

TEST_CASE("remultiplication on 500 random structured products") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> nf(1, 3), sh(-3, 3), un(1, 5);
    LaurentPoly p(Rational(un(rng), un(rng)), sh(rng));
    int k = nf(rng);
    for (int i = 0; i < k; ++i) p = p * random_block(rng);
    if (p.is_zero()) continue;
    FactorList f = factor(p);
    CHECK(f.remultiply() == p);
    for (const auto& [q, m] : f.factors) {
      CHECK(q == q.normalize());
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("factor agrees with Kronecker interpolation oracle") {
  std::vector<LaurentPoly> corpus = {
      P("4*t^4 + -9*t^2 + 4*t^0"),
      P("6*t^2 + -13*t^1 + 6*t^0"),
      P("1*t^2 + -3*t^1 + 1*t^0"),
      P("1*t^4 + 1*t^0"),
      P("1*t^6 + -1*t^0"),
      P("1*t^4 + -1*t^3 + -1*t^1 + 1*t^0"),
      twist_alexander(34),
      twist_alexander(34).inflate(2),
      twist_alexander(4).inflate(2),
      twist_alexander(9).inflate(2),
      twist_alexander(6) * twist_alexander(6),
      P("1*t^1 + -1*t^0") * P("1*t^2 + 1*t^1 + 1*t^0") * P("2*t^1 + 1*t^0"),
  };
  for (const auto& p : corpus) {
    CAPTURE(p.to_string());
    auto expected = oracles::kronecker_factor(p);
    auto got = expand(factor(p));
    CHECK(got == expected);
  }
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(P("1*t^2 + -3*t^1 + 1*t^0")));
  CHECK_FALSE(is_irreducible(P("4*t^4 + -9*t^2 + 4*t^0")));
  CHECK_FALSE(is_irreducible(P("1*t^2 + -1*t^0")));
  CHECK_THROWS(is_irreducible(LaurentPoly(3)));
  CHECK_THROWS(is_irreducible(LaurentPoly()));
}

TEST_CASE("inflation weakly commutes with factorization") {
  std::vector<LaurentPoly> corpus = {P("6*t^2 + -13*t^1 + 6*t^0"),
                                     P("1*t^2 + -3*t^1 + 1*t^0"),
                                     twist_alexander(4)};
  for (const auto& p : corpus)
    for (unsigned long c = 2; c <= 3; ++c) {
      FactorList base = factor(p);
      for (const auto& [q, m] : factor(p.inflate(c)).factors) {
        bool found = false;
        for (const auto& [b, bm] : base.factors)
          if (divides(q, b.inflate(c))) found = true;
        CHECK(found);
      }
    }
}

TEST_CASE("fox-milnor witnesses") {
  auto w1 = fox_milnor_test(LaurentPoly(1));
  REQUIRE(w1);
  CHECK(w1->normalize() == LaurentPoly(1));

  auto w6 = fox_milnor_test(P("6*t^2 + -13*t^1 + 6*t^0"));
  REQUIRE(w6);
  CHECK((*w6 * w6->conjugate()).normalize() == P("6*t^2 + -13*t^1 + 6*t^0"));
  CHECK(w6->normalize() == P("2*t^1 + -3*t^0"));

  LaurentPoly d4t2 = P("4*t^4 + -9*t^2 + 4*t^0");
  auto w4 = fox_milnor_test(d4t2);
  REQUIRE(w4);
  CHECK((*w4 * w4->conjugate()).normalize() == d4t2.normalize());
  CHECK(w4->normalize() == P("2*t^2 + -1*t^1 + -2*t^0"));

  CHECK_FALSE(fox_milnor_test(P("1*t^2 + -3*t^1 + 1*t^0")));
  CHECK_THROWS(fox_milnor_test(LaurentPoly()));
}

TEST_CASE("fox-milnor agrees with brute force on small spans") {
  std::vector<LaurentPoly> corpus = {
      P("6*t^2 + -13*t^1 + 6*t^0"), P("1*t^2 + -3*t^1 + 1*t^0"),
      P("4*t^4 + -9*t^2 + 4*t^0"),  twist_alexander(2),
      twist_alexander(6),           P("1*t^2 + -1*t^1 + 1*t^0"),
      P("1*t^4 + -3*t^3 + 1*t^2 + -3*t^1 + 1*t^0")};
  for (const auto& p : corpus) {
    CAPTURE(p.to_string());
    CHECK(fox_milnor_test(p).has_value() == oracles::fox_milnor_exists_brute(p));
  }
}
