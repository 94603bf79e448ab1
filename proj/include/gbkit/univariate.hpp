#pragma once

#include <vector>

#include "gbkit/field.hpp"

namespace gbkit {

// Dense univariate polynomials over F_p, coefficients from degree 0 upwards,
// no trailing zeros. The zero polynomial is empty.
using UPoly = std::vector<Residue>;

void trim(UPoly& a);
Residue eval(const PrimeField& F, const UPoly& a, Residue x);
// Remainder of a modulo a nonzero b.
UPoly rem(const PrimeField& F, UPoly a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const PrimeField& F, UPoly a, UPoly b);
// Distinct roots in F_p by exhaustive evaluation, ascending. Requires a != 0.
std::vector<Residue> roots(const PrimeField& F, const UPoly& a);

}  // namespace gbkit
