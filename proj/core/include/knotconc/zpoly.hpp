#ifndef KNOTCONC_ZPOLY_HPP
#define KNOTCONC_ZPOLY_HPP

#include <gmpxx.h>

#include <vector>

#include "knotconc/laurent.hpp"

namespace knotconc {

/// Dense integer polynomial, coefficient of x^i at index i, no trailing
/// zeros (the zero polynomial is the empty vector).
using ZPoly = std::vector<Integer>;

namespace zpoly {

void trim(ZPoly& p);
inline bool is_zero(const ZPoly& p) { return p.empty(); }
inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }
inline const Integer& lc(const ZPoly& p) { return p.back(); }

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& s);
ZPoly derivative(const ZPoly& a);
Integer content(const ZPoly& a);
/// Content removed, leading coefficient positive.
ZPoly primitive(const ZPoly& a);
Rational evaluate(const ZPoly& a, const Rational& x);
Integer evaluate_int(const ZPoly& a, const Integer& x);

/// Conversion from a LaurentPoly whose normalize() has integer
/// coefficients; the argument is shifted to minimum exponent 0 first.
ZPoly from_laurent(const LaurentPoly& p);
LaurentPoly to_laurent(const ZPoly& p);

/// Squarefree part over Q, primitive with positive leading coefficient.
ZPoly squarefree_part(const ZPoly& p);

}  // namespace zpoly
}  // namespace knotconc

#endif
