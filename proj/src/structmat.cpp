#include "fredet/structmat.hpp"

#include <Eigen/LU>
#include <string>

namespace fredet {

namespace {

void requireUnitConstant(const std::vector<LaurentSeries>& s, const char* name) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].constantTerm() != Complex(1.0))
      throw InvariantError(std::string(name) + "[" + std::to_string(i + 1) +
                           "](0) must be exactly 1");
  }
}

}  // namespace

Mat buildA(const std::vector<LaurentSeries>& p, const std::vector<LaurentSeries>& f) {
  if (p.size() != f.size() || p.empty())
    throw DomainError("buildA: p and f must have equal positive length");
  requireUnitConstant(p, "p");
  requireUnitConstant(f, "f");
  const int n = static_cast<int>(p.size());
  Mat A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = (p[i] * f[j]).coeff(j - i);
  }
  return A;
}

Mat buildB(const std::vector<RationalFunction>& q,
           const std::vector<RationalFunction>& g, const QuadratureRule& rule) {
  if (q.size() != g.size() || q.empty())
    throw DomainError("buildB: q and g must have equal positive length");
  const int n = static_cast<int>(q.size());
  Mat B(n, n);
  Vec samples(rule.m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < rule.m; ++a) {
        const Complex u = rule.nodes[a];
        try {
          samples[a] = q[i](u) * g[j](u);
        } catch (const PoleProximityError& e) {
          throw PoleProximityError("B(" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + "): " + e.what(),
                                   e.at);
        }
      }
      B(i, j) = integrate(samples, rule);
    }
  }
  return B;
}

Mat buildS(const std::vector<LaurentSeries>& p) {
  if (p.empty()) throw DomainError("buildS: empty p");
  requireUnitConstant(p, "p");
  const int n = static_cast<int>(p.size());
  Mat S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S(i, j) = p[i].coeff(j - i);
  return S;
}

Mat buildR(const std::vector<LaurentSeries>& f) {
  if (f.empty()) throw DomainError("buildR: empty f");
  requireUnitConstant(f, "f");
  const int n = static_cast<int>(f.size());
  Mat R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = f[j].coeff(j - i);
  return R;
}

std::vector<LaurentSeries> chainFactors(const std::vector<LaurentSeries>& p) {
  requireUnitConstant(p, "p");
  const LaurentSeries v = LaurentSeries::monomial(1.0, 1);
  std::vector<LaurentSeries> factors;
  factors.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    const LaurentSeries P_i = (i == 0) ? p[0] : p[i] * reciprocal(p[i - 1]);
    factors.push_back(reciprocal(v * P_i));
  }
  return factors;
}

Mat buildW(const std::vector<LaurentSeries>& p) {
  if (p.empty()) throw DomainError("buildW: empty p");
  const int n = static_cast<int>(p.size());
  const auto factors = chainFactors(p);
  Mat W(n, n);
  for (int j = 0; j < n; ++j) {
    LaurentSeries t = factors[j];
    for (int l = j - 1; l >= 0; --l) t = chainStep(t) * factors[l];
    for (int i = 0; i < n; ++i) W(i, j) = t.coeff(-(i + 1));
  }
  return W;
}

std::vector<LaurentSeries> alphaPolynomials(const std::vector<LaurentSeries>& f) {
  const Mat Rinv = triInverse(buildR(f));
  const int n = static_cast<int>(f.size());
  std::vector<LaurentSeries> alphas;
  alphas.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec c(n);
    for (int k = 0; k < n; ++k) c[k] = Rinv(i, k);
    alphas.push_back(LaurentSeries::polynomial(c, LaurentSeries::kExact));
  }
  return alphas;
}

std::vector<Complex> expansionCoeffs(int ell, const LaurentSeries& p_ell,
                                     const std::vector<LaurentSeries>& f) {
  if (ell < 1 || ell > static_cast<int>(f.size()))
    throw DomainError("expansionCoeffs: ell out of range");
  if (p_ell.constantTerm() != Complex(1.0))
    throw InvariantError("expansionCoeffs: p_ell(0) must be exactly 1");
  requireUnitConstant(f, "f");
  const LaurentSeries L = reciprocal(LaurentSeries::monomial(1.0, ell) * p_ell);
  std::vector<Complex> c(ell + 1, Complex(0));  // 1-based
  for (int e = -ell; e <= -1; ++e) {
    const int j = -e;
    Complex rhs = L.coeff(e);
    for (int jj = j + 1; jj <= ell; ++jj) rhs -= c[jj] * f[jj - 1].coeff(e + jj);
    c[j] = rhs;  // leading coefficient of f_j / v^j is exactly 1
  }
  return std::vector<Complex>(c.begin() + 1, c.end());
}

Complex luDet(const Mat& M) {
  if (M.rows() != M.cols()) throw DomainError("luDet: matrix must be square");
  return Eigen::PartialPivLU<Mat>(M).determinant();
}

Mat triInverse(const Mat& T) {
  if (T.rows() != T.cols()) throw DomainError("triInverse: matrix must be square");
  const int n = static_cast<int>(T.rows());
  for (int i = 0; i < n; ++i) {
    if (std::abs(T(i, i) - Complex(1.0)) > 1e-12)
      throw DomainError("triInverse: diagonal entry " + std::to_string(i + 1) +
                        " is not 1");
    for (int j = 0; j < i; ++j) {
      if (std::abs(T(i, j)) > 1e-12)
        throw DomainError("triInverse: matrix is not upper triangular");
    }
  }
  Mat X = Mat::Identity(n, n);
  for (int j = 1; j < n; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      Complex s = 0.0;
      for (int k = i + 1; k <= j; ++k) s += T(i, k) * X(k, j);
      X(i, j) = -s;
    }
  }
  return X;
}

}  // namespace fredet
