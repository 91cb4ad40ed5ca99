#include "fredet/poly.hpp"

namespace fredet {

Vec polyFrom(std::initializer_list<Complex> coeffs) {
  Vec p(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (const auto& c : coeffs) p[i++] = c;
  return p;
}

bool polyIsZero(const Vec& p) {
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] != Complex(0)) return false;
  return true;
}

int polyDegree(const Vec& p) {
  for (Eigen::Index i = p.size() - 1; i >= 0; --i)
    if (p[i] != Complex(0)) return static_cast<int>(i);
  return -1;
}

Vec polyTrim(const Vec& p) {
  const int d = polyDegree(p);
  if (d < 0) return Vec::Zero(1);
  return p.head(d + 1);
}

Complex polyEval(const Vec& p, Complex z) {
  if (p.size() == 0) return 0.0;
  Complex acc = p[p.size() - 1];
  for (Eigen::Index i = p.size() - 2; i >= 0; --i) acc = acc * z + p[i];
  return acc;
}

Vec polyAdd(const Vec& a, const Vec& b) {
  Vec out = Vec::Zero(std::max(a.size(), b.size()));
  out.head(a.size()) = a;
  out.head(b.size()) += b;
  return out;
}

Vec polyScale(const Vec& a, Complex c) { return a * c; }

Vec polyMul(const Vec& a, const Vec& b) {
  if (a.size() == 0 || b.size() == 0) return Vec::Zero(1);
  Vec out = Vec::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Vec polyPow(const Vec& a, int k) {
  if (k < 0) throw DomainError("polyPow: negative exponent");
  Vec out = Vec::Ones(1);
  for (int i = 0; i < k; ++i) out = polyMul(out, a);
  return out;
}

Vec polyShift(const Vec& a, int k) {
  if (k < 0) throw DomainError("polyShift: negative shift");
  if (k == 0) return a;
  Vec out = Vec::Zero(a.size() + k);
  out.tail(a.size()) = a;
  return out;
}

bool polyEqual(const Vec& a, const Vec& b) {
  const Vec ta = polyTrim(a), tb = polyTrim(b);
  if (ta.size() != tb.size()) return false;
  for (Eigen::Index i = 0; i < ta.size(); ++i)
    if (ta[i] != tb[i]) return false;
  return true;
}

}  // namespace fredet
