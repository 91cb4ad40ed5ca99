#pragma once

#include <initializer_list>

#include "fredet/types.hpp"

namespace fredet {

// Dense polynomials as coefficient vectors, ascending powers of the variable.

Vec polyFrom(std::initializer_list<Complex> coeffs);

bool polyIsZero(const Vec& p);  // all coefficients exactly zero
int polyDegree(const Vec& p);   // -1 for the zero polynomial
Vec polyTrim(const Vec& p);     // drop the exactly-zero tail, keep >= 1 entry

Complex polyEval(const Vec& p, Complex z);  // Horner

Vec polyAdd(const Vec& a, const Vec& b);
Vec polyScale(const Vec& a, Complex c);
Vec polyMul(const Vec& a, const Vec& b);
Vec polyPow(const Vec& a, int k);
Vec polyShift(const Vec& a, int k);  // multiply by u^k

bool polyEqual(const Vec& a, const Vec& b);  // exact, after trimming

}  // namespace fredet
