#pragma once

// Shared helpers and independent oracles for the test suites. Everything in
// here recomputes expected values through a route that does not touch the
// implementation path it is checking.

#include <cmath>
#include <map>
#include <vector>

#include "fredet/contour.hpp"
#include "fredet/kernel.hpp"
#include "fredet/poly.hpp"
#include "fredet/rng.hpp"
#include "fredet/series.hpp"
#include "fredet/types.hpp"

namespace testutil {

using fredet::Complex;
using fredet::LaurentSeries;
using fredet::Mat;
using fredet::Vec;

inline double cdist(Complex a, Complex b) { return std::abs(a - b); }

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// ---- series oracles ------------------------------------------------------

// exponent -> coefficient map of a series' stored range
inline std::map<int, Complex> coeffMap(const LaurentSeries& s) {
  std::map<int, Complex> m;
  for (int k = 0; !s.isZero() && k < s.coeffs().size(); ++k)
    m[s.minExp() + k] = s.coeffs()[k];
  return m;
}

// index-by-index sum over the union of stored exponents
inline std::map<int, Complex> naiveAdd(const LaurentSeries& a, const LaurentSeries& b) {
  std::map<int, Complex> out = coeffMap(a);
  for (const auto& [e, c] : coeffMap(b)) out[e] += c;
  return out;
}

// O(n^2) double-loop convolution over stored coefficients
inline std::map<int, Complex> naiveConvolve(const LaurentSeries& a,
                                            const LaurentSeries& b) {
  std::map<int, Complex> out;
  for (const auto& [ea, ca] : coeffMap(a))
    for (const auto& [eb, cb] : coeffMap(b)) out[ea + eb] += ca * cb;
  return out;
}

// ---- linear-algebra oracles ----------------------------------------------

// Laplace expansion along the first row
inline Complex cofactorDet(const Mat& M) {
  const int n = static_cast<int>(M.rows());
  if (n == 1) return M(0, 0);
  Complex det = 0.0;
  double sign = 1.0;
  for (int j = 0; j < n; ++j) {
    Mat minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = M(r, c);
    }
    det += sign * M(0, j) * cofactorDet(minor);
    sign = -sign;
  }
  return det;
}

// ---- rational-function oracle ---------------------------------------------

// plain monomial-power summation, no Horner
inline Complex naivePolyEval(const Vec& p, Complex z) {
  Complex acc = 0.0, pw = 1.0;
  for (Eigen::Index k = 0; k < p.size(); ++k, pw *= z) acc += p[k] * pw;
  return acc;
}

// ---- nested product-quadrature oracle for the chain factor ----------------

// T_ell(u) for ell = 2 or 3 by trapezoidal product quadrature over genuinely
// nested circles around the origin: pointwise complex arithmetic only, no
// series algebra. p holds the raw polynomial coefficient vectors.
inline Complex nestedQuadOracle(const fredet::BridgeH& H, const std::vector<Vec>& p,
                                int ell, Complex u, int m = 512) {
  const double radii[3] = {0.10, 0.05, 0.025};
  auto nodesOf = [&](double r) {
    std::vector<Complex> nodes(m);
    for (int a = 0; a < m; ++a) {
      const double th = 2.0 * fredet::kPi * a / m;
      nodes[a] = r * Complex(std::cos(th), std::sin(th));
    }
    return nodes;
  };
  // P_i(v) = p_i(v)/p_{i-1}(v), evaluated pointwise
  auto P = [&](int i, Complex v) {
    const Complex num = naivePolyEval(p[i], v);
    return i == 0 ? num : num / naivePolyEval(p[i - 1], v);
  };
  auto Hval = [&](Complex v, Complex uu) {
    Complex acc = 0.0, pw = 1.0;
    for (int d = 0; d <= H.degree(); ++d, pw *= v) acc += H.vcoeffs[d](uu) * pw;
    return acc;
  };

  const auto v1 = nodesOf(radii[0]);
  const auto v2 = nodesOf(radii[1]);
  const double invm = 1.0 / m;

  if (ell == 2) {
    Complex acc = 0.0;
    for (int a = 0; a < m; ++a) {
      const Complex va = v1[a];
      const Complex outer = Hval(va, u) / (va * P(0, va)) * (va * invm);
      for (int b = 0; b < m; ++b) {
        const Complex wb = v2[b];
        acc += outer / ((va - wb) * wb * P(1, wb)) * (wb * invm);
      }
    }
    return acc;
  }
  if (ell == 3) {
    const auto v3 = nodesOf(radii[2]);
    // the triple product sum, factored through the middle circle
    std::vector<Complex> inner(m, 0.0);
    for (int b = 0; b < m; ++b) {
      Complex s = 0.0;
      for (int c = 0; c < m; ++c) {
        const Complex xc = v3[c];
        s += (xc * invm) / ((v2[b] - xc) * xc * P(2, xc));
      }
      inner[b] = s;
    }
    Complex acc = 0.0;
    for (int a = 0; a < m; ++a) {
      const Complex va = v1[a];
      Complex mid = 0.0;
      for (int b = 0; b < m; ++b) {
        const Complex wb = v2[b];
        mid += (wb * invm) * inner[b] / ((va - wb) * wb * P(1, wb));
      }
      acc += (va * invm) * Hval(va, u) * mid / (va * P(0, va));
    }
    return acc;
  }
  throw fredet::DomainError("nestedQuadOracle: ell must be 2 or 3");
}

// ---- random data -----------------------------------------------------------

// polynomial with constant term exactly 1 and small higher coefficients
inline Vec randomUnitPoly(fredet::Xoshiro256StarStar& rng, int deg) {
  Vec c = Vec::Zero(deg + 1);
  c[0] = 1.0;
  for (int d = 1; d <= deg; ++d) c[d] = rng.inDisk(0.8 / deg);
  return c;
}

inline LaurentSeries randomSeries(fredet::Xoshiro256StarStar& rng, int min_exp,
                                  int len, int trunc, double lead_min = 0.0) {
  Vec c(len);
  for (int k = 0; k < len; ++k) c[k] = rng.inDisk(1.0);
  if (lead_min > 0.0) {
    while (std::abs(c[0]) < lead_min) c[0] = rng.inDisk(1.0);
  }
  return LaurentSeries(min_exp, trunc, c);
}

}  // namespace testutil
