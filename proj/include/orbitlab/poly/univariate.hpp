#pragma once

#include <vector>

#include "orbitlab/arith/integer.hpp"

namespace orbitlab::poly {

/// Dense univariate polynomial over Q, coefficient i of x^i, no trailing zeros.
using UPoly = std::vector<arith::Rational>;

void trim(UPoly& f);
int udegree(const UPoly& f);  // -1 for zero
UPoly uderivative(const UPoly& f);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
/// Quotient and remainder.
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
/// Monic gcd (zero if both zero).
UPoly ugcd(UPoly a, UPoly b);
/// f / gcd(f, f'), monic.
UPoly usquarefree(const UPoly& f);
arith::Rational ueval(const UPoly& f, const arith::Rational& x);
/// Distinct rational roots, ascending.
std::vector<arith::Rational> urational_roots(const UPoly& f);
/// Scales to integer coefficients with content 1 and positive leading coefficient.
std::vector<arith::Integer> uprimitive(const UPoly& f);

}  // namespace orbitlab::poly
