#include <doctest.h>

#include "knotconc/algebraic.hpp"

using namespace knotconc;

TEST_CASE("sturm chain root counting") {
  // z^2 - 5: roots +-sqrt(5)
  ZPoly p{Integer(-5), Integer(0), Integer(1)};
  SturmChain s(p);
  CHECK(s.count_roots(Rational(-3), Rational(3)) == 2);
  CHECK(s.count_roots(Rational(0), Rational(3)) == 1);
  CHECK(s.count_roots(Rational(0), Rational(2)) == 0);
  CHECK(s.count_roots(Rational(2), Rational(3)) == 1);
}

TEST_CASE("isolate_roots finds and orders all roots") {
  // (z^2 - 2)(z^2 - 5) = z^4 - 7 z^2 + 10
  ZPoly p{Integer(10), Integer(0), Integer(-7), Integer(0), Integer(1)};
  auto roots = isolate_roots(p, Rational(-3), Rational(3));
  REQUIRE(roots.size() == 4);
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    AlgebraicReal a = roots[i], b = roots[i + 1];
    CHECK(a < b);
  }
  // middle two are +-sqrt(2), outer two +-sqrt(5)
  AlgebraicReal r = roots[2];
  r.refine(Rational(1, 1000000));
  CHECK(r.lo() > Rational(141, 100));
  CHECK(r.hi() < Rational(142, 100));
}

TEST_CASE("isolate_roots excludes endpoint roots") {
  // z^2 - 4 has roots exactly at the endpoints of (-2, 2)
  ZPoly p{Integer(-4), Integer(0), Integer(1)};
  CHECK(isolate_roots(p, Rational(-2), Rational(2)).empty());
  // but they are found in a slightly larger window
  CHECK(isolate_roots(p, Rational(-3), Rational(3)).size() == 2);
}

TEST_CASE("isolate_roots collapses repeated roots") {
  // (z - 1)^2 (z + 1)
  ZPoly p{Integer(1), Integer(-1), Integer(-1), Integer(1)};
  auto roots = isolate_roots(p, Rational(-2), Rational(2));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].compare(Rational(-1)) == 0);
  CHECK(roots[1].compare(Rational(1)) == 0);
}

TEST_CASE("algebraic real refinement and comparison") {
  ZPoly p{Integer(-2), Integer(0), Integer(1)};  // z^2 - 2
  auto roots = isolate_roots(p, Rational(0), Rational(2));
  REQUIRE(roots.size() == 1);
  AlgebraicReal r = roots[0];
  r.refine(Rational(1, Integer(1) << 60));
  CHECK(r.hi() - r.lo() <= Rational(1, Integer(1) << 60));
  CHECK(r.compare(Rational(1)) > 0);
  CHECK(r.compare(Rational(2)) < 0);
  CHECK(r.compare(Rational(141421356, 100000000)) > 0);
  CHECK(r.compare(Rational(141421357, 100000000)) < 0);

  AlgebraicReal q = AlgebraicReal::from_rational(Rational(3, 2));
  CHECK(q.is_exact());
  CHECK(q.compare(Rational(3, 2)) == 0);
  CHECK(r < q);
}
