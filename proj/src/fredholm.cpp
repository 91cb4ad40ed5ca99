#include "fredet/fredholm.hpp"

#include <cmath>
#include <string>

#include "fredet/structmat.hpp"

namespace fredet {

FredholmResult fredDetRank(const std::vector<RationalFunction>& q,
                           const std::vector<RationalFunction>& T,
                           const QuadratureRule& rule) {
  if (q.size() != T.size() || q.empty())
    throw DomainError("fredDetRank: q and T must have equal positive length");
  const int n = static_cast<int>(q.size());
  Mat G(n, n);
  Vec samples(rule.m);
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l < n; ++l) {
      for (int a = 0; a < rule.m; ++a) {
        const Complex u = rule.nodes[a];
        try {
          samples[a] = q[m](u) * T[l](u);
        } catch (const PoleProximityError& e) {
          throw PoleProximityError("G(" + std::to_string(m + 1) + "," +
                                       std::to_string(l + 1) + "): " + e.what(),
                                   e.at);
        }
      }
      G(m, l) = integrate(samples, rule);
    }
  }
  FredholmResult result;
  result.value = luDet(Mat::Identity(n, n) + G);
  result.method = FredholmMethod::rank;
  return result;
}

namespace {

Complex nystromDet(const KernelForm& form, const QuadratureRule& rule) {
  const int m = rule.m;
  Mat D = Mat::Identity(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      D(a, b) += kernelEval(form, rule.nodes[a], rule.nodes[b]) * rule.weights[b];
  return luDet(D);
}

}  // namespace

FredholmResult fredDetNystrom(const KernelForm& form, const QuadratureRule& rule) {
  FredholmResult result;
  result.method = FredholmMethod::nystrom;
  result.m_used = rule.m;
  result.value = nystromDet(form, rule);
  const Complex refined = nystromDet(form, makeRule(rule.circle, 2 * rule.m));
  result.stability_gap = std::abs(result.value - refined);
  return result;
}

}  // namespace fredet
