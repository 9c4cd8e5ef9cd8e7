#pragma once

#include <vector>

#include "ratroot/rational.hpp"
#include "ratroot/unipoly.hpp"

namespace ratroot {

// Polynomial in a main variable t whose coefficients are polynomials in a
// second variable; element i is the coefficient of t^i, trailing zeros trimmed.
using BiPoly = std::vector<UniPoly>;

// Lift a univariate polynomial in t to constant-in-lambda coefficients.
BiPoly lift_to_bipoly(const UniPoly& in_t);

// lambda - g(t), viewed as a polynomial in t.
BiPoly lambda_minus(const UniPoly& g_of_t);

// Res_t(a, b) by the subresultant PRS. Throws InputError on zero input.
Rational resultant(const UniPoly& a, const UniPoly& b);

// Res_t(a, b) for coefficients in Q[lambda]; the result is a polynomial in
// lambda. Throws InputError on zero input.
UniPoly resultant(const BiPoly& a, const BiPoly& b);

}  // namespace ratroot
