#pragma once

#include "fredet/poly.hpp"
#include "fredet/types.hpp"

namespace fredet {

// Truncated Laurent series in one complex variable v. Finitely many negative
// exponents, all of them stored; exponents above trunc() are unknown rather
// than zero, and reading one is an error. The coefficient at v^-1 is the
// residue at the origin, which is what every origin-centered contour
// integral in this project reduces to.
class LaurentSeries {
 public:
  // Truncation sentinel for series whose coefficients are known at every
  // exponent (monomials, principal parts, exact polynomials).
  static constexpr int kExact = 1 << 28;

  LaurentSeries() = default;  // canonical zero

  static LaurentSeries zero() { return {}; }
  static LaurentSeries polynomial(const Vec& ascending, int trunc);
  static LaurentSeries monomial(Complex c, int exponent, int trunc = kExact);
  static LaurentSeries one(int trunc = kExact) { return monomial(1.0, 0, trunc); }

  // Clips storage above trunc and trims exactly-zero edges.
  LaurentSeries(int min_exp, int trunc, Vec coeffs);

  bool isZero() const { return coeffs_.size() == 0; }
  int minExp() const { return min_exp_; }
  int topExp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  int trunc() const { return trunc_; }
  const Vec& coeffs() const { return coeffs_; }

  // Coefficient of v^k. Exponents below minExp() are exactly zero; reading
  // above trunc() throws TruncationError instead of silently returning zero.
  Complex coeff(int k) const;

  Complex constantTerm() const { return coeff(0); }
  Complex residue() const { return coeff(-1); }

 private:
  void normalize();

  int min_exp_ = 0;
  int trunc_ = kExact;
  Vec coeffs_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(Complex c, const LaurentSeries& a);

// Multiplicative inverse as a series: a * reciprocal(a) = 1 up to the
// result's truncation. Requires a nonzero lowest stored coefficient.
LaurentSeries reciprocal(const LaurentSeries& a);

// One link of a nested contour chain:
//   t  |->  ( w |-> \oint t(v)/(w - v) dv/(2 pi i) ),   |w| > |v|.
// Expanding 1/(w-v) geometrically copies the principal part of t into
// negative powers of w and discards the regular part.
LaurentSeries chainStep(const LaurentSeries& t);

}  // namespace fredet
