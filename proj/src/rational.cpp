#include "fredet/rational.hpp"

#include <cmath>
#include <sstream>

namespace fredet {

namespace {

constexpr double kDenFloor = 1e-12;

bool denUsable(const Vec& d) {
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (std::abs(d[i]) >= kDenFloor) return true;
  return false;
}

// c * u^k with c != 0, or false
bool isMonomialPoly(const Vec& p, int* power, Complex* scale) {
  int found = -1;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] != Complex(0)) {
      if (found >= 0) return false;
      found = static_cast<int>(i);
    }
  }
  if (found < 0) return false;
  if (power) *power = found;
  if (scale) *scale = p[found];
  return true;
}

// pairwise sum keeping the denominator structure; no zero shortcuts so that
// aligned folds stay over an identical denominator
RationalFunction addAligned(const RationalFunction& a, const RationalFunction& b) {
  if (polyEqual(a.den, b.den))
    return RationalFunction(polyAdd(a.num, b.num), a.den);
  int ka = 0, kb = 0;
  Complex ca, cb;
  if (isMonomialPoly(a.den, &ka, &ca) && isMonomialPoly(b.den, &kb, &cb)) {
    const int k = std::max(ka, kb);
    Vec num = polyAdd(polyShift(polyScale(a.num, Complex(1.0) / ca), k - ka),
                      polyShift(polyScale(b.num, Complex(1.0) / cb), k - kb));
    Vec den = Vec::Zero(k + 1);
    den[k] = 1.0;
    return RationalFunction(std::move(num), std::move(den));
  }
  return RationalFunction(polyAdd(polyMul(a.num, b.den), polyMul(b.num, a.den)),
                          polyMul(a.den, b.den));
}

std::string fmtComplex(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

RationalFunction::RationalFunction(Vec n, Vec d)
    : num(std::move(n)), den(std::move(d)) {
  if (num.size() == 0) num = Vec::Zero(1);
  if (!denUsable(den))
    throw InvariantError("rational function: denominator polynomial is numerically zero");
}

RationalFunction RationalFunction::constant(Complex c) {
  Vec n(1);
  n[0] = c;
  return RationalFunction(std::move(n), Vec::Ones(1));
}

Complex RationalFunction::operator()(Complex z) const {
  const Complex d = polyEval(den, z);
  if (std::abs(d) <= kDenFloor)
    throw PoleProximityError("rational function evaluated too close to a pole at z=" +
                                 fmtComplex(z),
                             z);
  return polyEval(num, z) / d;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(polyMul(a.num, b.num), polyMul(a.den, b.den));
}

RationalFunction operator*(Complex c, const RationalFunction& a) {
  return RationalFunction(polyScale(a.num, c), a.den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero() && polyEqual(a.den, Vec::Ones(1))) return b;
  if (b.isZero() && polyEqual(b.den, Vec::Ones(1))) return a;
  return addAligned(a, b);
}

RationalFunction linearCombination(const std::vector<Complex>& coeffs,
                                   const std::vector<RationalFunction>& terms) {
  if (coeffs.empty() || coeffs.size() != terms.size())
    throw DomainError("linearCombination: empty input or length mismatch");

  bool all_equal = true;
  for (size_t i = 1; i < terms.size() && all_equal; ++i)
    all_equal = polyEqual(terms[i].den, terms[0].den);
  if (all_equal) {
    Vec num = polyScale(terms[0].num, coeffs[0]);
    for (size_t i = 1; i < terms.size(); ++i)
      num = polyAdd(num, polyScale(terms[i].num, coeffs[i]));
    return RationalFunction(std::move(num), terms[0].den);
  }

  bool all_monomial = true;
  int kmax = 0;
  for (size_t i = 0; i < terms.size() && all_monomial; ++i) {
    int k = 0;
    all_monomial = isMonomialPoly(terms[i].den, &k, nullptr);
    kmax = std::max(kmax, k);
  }
  if (all_monomial) {
    Vec num = Vec::Zero(1);
    for (size_t i = 0; i < terms.size(); ++i) {
      int k = 0;
      Complex c;
      isMonomialPoly(terms[i].den, &k, &c);
      num = polyAdd(num, polyShift(polyScale(terms[i].num, coeffs[i] / c), kmax - k));
    }
    Vec den = Vec::Zero(kmax + 1);
    den[kmax] = 1.0;
    return RationalFunction(std::move(num), std::move(den));
  }

  RationalFunction acc(polyScale(terms[0].num, coeffs[0]), terms[0].den);
  for (size_t i = 1; i < terms.size(); ++i)
    acc = addAligned(acc, RationalFunction(polyScale(terms[i].num, coeffs[i]), terms[i].den));
  return acc;
}

}  // namespace fredet
