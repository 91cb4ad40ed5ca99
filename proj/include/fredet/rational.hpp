#pragma once

#include <vector>

#include "fredet/poly.hpp"
#include "fredet/types.hpp"

namespace fredet {

// Ratio of two dense polynomials in u. No GCD reduction is attempted; degree
// growth is bounded by construction at the sizes used here. Additions merge
// equal or monomial denominators instead of forming the product, which keeps
// the common-denominator form of derived function families short.
struct RationalFunction {
  Vec num;  // ascending coefficients
  Vec den;

  RationalFunction() : num(Vec::Zero(1)), den(Vec::Ones(1)) {}
  RationalFunction(Vec n, Vec d);

  static RationalFunction fromPoly(Vec p) {
    return RationalFunction(std::move(p), Vec::Ones(1));
  }
  static RationalFunction constant(Complex c);
  static RationalFunction zero() { return {}; }

  bool isZero() const { return polyIsZero(num); }
  int numDegree() const { return polyDegree(num); }
  int denDegree() const { return polyDegree(den); }

  // Horner on both polynomials; PoleProximityError when |den(z)| <= 1e-12.
  Complex operator()(Complex z) const;
};

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(Complex c, const RationalFunction& a);
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);

// Weighted sum brought onto a common denominator by pairwise reduction.
// Zero weights keep their term's denominator in play, so families built with
// aligned weights end up over an identical denominator. Empty input is a
// DomainError.
RationalFunction linearCombination(const std::vector<Complex>& coeffs,
                                   const std::vector<RationalFunction>& terms);

}  // namespace fredet
