#include "fredet/series.hpp"

#include <algorithm>
#include <string>

namespace fredet {

namespace {

// addition on truncation exponents; kExact is sticky
int satAdd(int t, int d) {
  if (t >= LaurentSeries::kExact / 2) return LaurentSeries::kExact;
  return t + d;
}

}  // namespace

LaurentSeries::LaurentSeries(int min_exp, int trunc, Vec coeffs)
    : min_exp_(min_exp), trunc_(trunc), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentSeries LaurentSeries::polynomial(const Vec& ascending, int trunc) {
  return LaurentSeries(0, trunc, ascending);
}

LaurentSeries LaurentSeries::monomial(Complex c, int exponent, int trunc) {
  Vec v(1);
  v[0] = c;
  return LaurentSeries(exponent, trunc, std::move(v));
}

void LaurentSeries::normalize() {
  // drop storage above the truncation
  if (coeffs_.size() > 0 && trunc_ < kExact) {
    const long top = static_cast<long>(min_exp_) + coeffs_.size() - 1;
    if (top > trunc_) {
      const long keep = static_cast<long>(trunc_) - min_exp_ + 1;
      coeffs_ = (keep <= 0) ? Vec() : Vec(coeffs_.head(keep));
    }
  }
  // trim exactly-zero edges
  Eigen::Index lo = 0, hi = coeffs_.size();
  while (lo < hi && coeffs_[lo] == Complex(0)) ++lo;
  while (hi > lo && coeffs_[hi - 1] == Complex(0)) --hi;
  if (lo == hi) {
    // zero-valued: canonical zero when exact, else one stored zero so the
    // finite truncation is preserved
    if (trunc_ >= kExact) {
      coeffs_.resize(0);
      min_exp_ = 0;
      trunc_ = kExact;
    } else {
      min_exp_ = std::min(0, trunc_);
      coeffs_ = Vec::Zero(1);
    }
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) coeffs_ = Vec(coeffs_.segment(lo, hi - lo));
  min_exp_ += static_cast<int>(lo);
}

Complex LaurentSeries::coeff(int k) const {
  if (k > trunc_)
    throw TruncationError("coefficient of v^" + std::to_string(k) +
                          " requested beyond truncation " + std::to_string(trunc_));
  if (isZero()) return 0.0;
  if (k < min_exp_ || k > topExp()) return 0.0;
  return coeffs_[k - min_exp_];
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero() && b.isZero()) return LaurentSeries::zero();
  const int t = std::min(a.trunc(), b.trunc());
  if (a.isZero()) return LaurentSeries(b.minExp(), t, b.coeffs());
  if (b.isZero()) return LaurentSeries(a.minExp(), t, a.coeffs());
  const int lo = std::min(a.minExp(), b.minExp());
  const int hi = std::min(t, std::max(a.topExp(), b.topExp()));
  if (hi < lo) return LaurentSeries(lo, t, Vec());
  Vec out = Vec::Zero(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) out[k - lo] = a.coeff(k) + b.coeff(k);
  return LaurentSeries(lo, t, std::move(out));
}

LaurentSeries operator-(const LaurentSeries& a) { return Complex(-1.0) * a; }

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero() || b.isZero()) return LaurentSeries::zero();
  const int t = std::min(satAdd(a.trunc(), b.minExp()), satAdd(b.trunc(), a.minExp()));
  const int lo = a.minExp() + b.minExp();
  const int hi = std::min(t, a.topExp() + b.topExp());
  if (hi < lo) return LaurentSeries(lo, t, Vec());
  Vec out = Vec::Zero(hi - lo + 1);
  const Vec& ac = a.coeffs();
  const Vec& bc = b.coeffs();
  for (Eigen::Index i = 0; i < ac.size(); ++i) {
    for (Eigen::Index j = 0; j < bc.size(); ++j) {
      const int e = a.minExp() + static_cast<int>(i) + b.minExp() + static_cast<int>(j);
      if (e > hi) break;
      out[e - lo] += ac[i] * bc[j];
    }
  }
  return LaurentSeries(lo, t, std::move(out));
}

LaurentSeries operator*(Complex c, const LaurentSeries& a) {
  if (c == Complex(0) || a.isZero()) return LaurentSeries::zero();
  return LaurentSeries(a.minExp(), a.trunc(), c * a.coeffs());
}

LaurentSeries reciprocal(const LaurentSeries& a) {
  if (a.isZero()) throw SingularSeriesError("reciprocal of the zero series");
  const Complex lead = a.coeffs()[0];
  if (lead == Complex(0))
    throw SingularSeriesError("reciprocal: zero leading coefficient");
  const int m = a.minExp();
  if (a.trunc() >= LaurentSeries::kExact) {
    if (a.coeffs().size() == 1)
      return LaurentSeries::monomial(Complex(1.0) / lead, -m);
    throw TruncationError(
        "reciprocal of an exact multi-term series; give it a finite truncation");
  }
  const int K = a.trunc() - m;  // highest known shifted index
  Vec abar(K + 1);
  for (int k = 0; k <= K; ++k) abar[k] = a.coeff(m + k);
  Vec bbar(K + 1);
  bbar[0] = Complex(1.0) / lead;
  for (int k = 1; k <= K; ++k) {
    Complex s = 0.0;
    for (int j = 1; j <= k; ++j) s += abar[j] * bbar[k - j];
    bbar[k] = -s / lead;
  }
  return LaurentSeries(-m, a.trunc() - 2 * m, std::move(bbar));
}

LaurentSeries chainStep(const LaurentSeries& t) {
  if (t.isZero() || t.minExp() >= 0) return LaurentSeries::zero();
  const int hi = std::min(-1, t.topExp());
  const Eigen::Index len = hi - t.minExp() + 1;
  Vec out = t.coeffs().head(len);
  return LaurentSeries(t.minExp(), LaurentSeries::kExact, std::move(out));
}

}  // namespace fredet
