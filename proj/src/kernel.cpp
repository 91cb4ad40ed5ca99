#include "fredet/kernel.hpp"

#include <cmath>
#include <string>

#include "fredet/structmat.hpp"

namespace fredet {

namespace {

// Weighted sum dropping exactly-zero weights first. Used where the result is
// only ever evaluated pointwise: keeping structural zeros would drag
// canceling denominator factors into the product and cost precision.
// constructH and deriveG keep full width instead, so that derived families
// stay over one aligned denominator and can be recombined safely.
RationalFunction sparseCombination(const std::vector<Complex>& w,
                                   const std::vector<RationalFunction>& terms) {
  std::vector<Complex> wk;
  std::vector<RationalFunction> tk;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != Complex(0)) {
      wk.push_back(w[i]);
      tk.push_back(terms[i]);
    }
  }
  if (wk.empty()) return RationalFunction::zero();
  return linearCombination(wk, tk);
}

}  // namespace

BridgeH constructH(const std::vector<LaurentSeries>& f,
                   const std::vector<RationalFunction>& g) {
  if (f.size() != g.size() || f.empty())
    throw DomainError("constructH: f and g must have equal positive length");
  const int n = static_cast<int>(f.size());
  const auto alphas = alphaPolynomials(f);
  BridgeH H;
  H.vcoeffs.reserve(n);
  std::vector<Complex> w(n);
  for (int d = 0; d < n; ++d) {
    for (int m = 0; m < n; ++m) w[m] = alphas[m].coeff(d);
    H.vcoeffs.push_back(linearCombination(w, g));
  }
  return H;
}

std::vector<RationalFunction> deriveG(const BridgeH& H,
                                      const std::vector<LaurentSeries>& f) {
  if (H.vcoeffs.empty()) throw DomainError("deriveG: H has no coefficients");
  const int n = static_cast<int>(f.size());
  const int nd = static_cast<int>(H.vcoeffs.size());
  std::vector<RationalFunction> g;
  g.reserve(n);
  std::vector<Complex> w(nd);
  for (int i = 1; i <= n; ++i) {
    for (int d = 0; d < nd; ++d)
      w[d] = (d <= i - 1) ? f[i - 1].coeff(i - 1 - d) : Complex(0);
    g.push_back(linearCombination(w, H.vcoeffs));
  }
  return g;
}

RationalFunction tChain(int ell, const BridgeH& H,
                        const std::vector<LaurentSeries>& p) {
  if (ell < 1 || ell > static_cast<int>(p.size()))
    throw DomainError("tChain: ell out of range");
  const auto factors = chainFactors(p);
  LaurentSeries t = factors[ell - 1];
  for (int l = ell - 2; l >= 0; --l) t = chainStep(t) * factors[l];
  const int nd = static_cast<int>(H.vcoeffs.size());
  std::vector<Complex> w(nd);
  for (int d = 0; d < nd; ++d) w[d] = t.coeff(-d - 1);
  return sparseCombination(w, H.vcoeffs);
}

std::vector<RationalFunction> traceDecompose(int ell, const BridgeH& H,
                                             const std::vector<LaurentSeries>& p,
                                             const std::vector<LaurentSeries>& f) {
  if (ell < 1 || ell > static_cast<int>(p.size()))
    throw DomainError("traceDecompose: ell out of range");
  if (p.size() != f.size())
    throw DomainError("traceDecompose: p and f must have equal length");
  const auto factors = chainFactors(p);
  // chains[j] for j = ell..1 (1-based): the chain built from P_ell inward
  // down through P_j
  std::vector<LaurentSeries> chains(ell + 1);
  chains[ell] = factors[ell - 1];
  for (int j = ell - 1; j >= 1; --j)
    chains[j] = chainStep(chains[j + 1]) * factors[j - 1];

  const int nd = static_cast<int>(H.vcoeffs.size());
  std::vector<RationalFunction> parts(ell);
  std::vector<Complex> w(nd);

  // L_ell^(ell): residue of H(v,u) / (v^ell p_ell(v))
  const LaurentSeries Lrec =
      reciprocal(LaurentSeries::monomial(1.0, ell) * p[ell - 1]);
  for (int d = 0; d < nd; ++d) w[d] = Lrec.coeff(-d - 1);
  parts[ell - 1] = sparseCombination(w, H.vcoeffs);

  // L_ell^(i), i < ell: geometric expansion of the innermost pole pair gives
  // weights -[v^k] chains[i+1] against residues of H v^{k-i} / p_i
  for (int i = 1; i < ell; ++i) {
    const LaurentSeries rp = reciprocal(p[i - 1]);
    for (int d = 0; d < nd; ++d) {
      Complex s = 0.0;
      for (int k = 0; k <= i - 1; ++k)
        s += -chains[i + 1].coeff(k) * rp.coeff(i - k - d - 1);
      w[d] = s;
    }
    parts[i - 1] = sparseCombination(w, H.vcoeffs);
  }
  return parts;
}

bool allUnitSeries(const std::vector<LaurentSeries>& p) {
  for (const auto& s : p) {
    if (s.isZero() || s.minExp() != 0 || s.coeffs().size() != 1 ||
        s.coeffs()[0] != Complex(1.0))
      return false;
  }
  return true;
}

bool isMonomialBasisQ(const std::vector<RationalFunction>& q) {
  for (size_t l = 0; l < q.size(); ++l) {
    Vec mono = Vec::Zero(static_cast<Eigen::Index>(l) + 1);
    mono[static_cast<Eigen::Index>(l)] = 1.0;
    if (!polyEqual(q[l].num, mono) || !polyEqual(q[l].den, Vec::Ones(1)))
      return false;
  }
  return true;
}

KernelForm makeGeneralForm(const std::vector<RationalFunction>& q, const BridgeH& H,
                           const std::vector<LaurentSeries>& p) {
  if (q.size() != p.size() || q.empty())
    throw DomainError("makeGeneralForm: q and p must have equal positive length");
  KernelForm form;
  form.variant = KernelVariant::general;
  form.n = static_cast<int>(q.size());
  form.q = q;
  form.H = H;
  form.T.reserve(form.n);
  for (int l = 1; l <= form.n; ++l) form.T.push_back(tChain(l, H, p));
  return form;
}

KernelForm makeSimplifiedForm(const std::vector<RationalFunction>& q, const BridgeH& H,
                              const std::vector<LaurentSeries>& p) {
  if (!allUnitSeries(p))
    throw DomainError("makeSimplifiedForm: requires p_i = 1 for all i");
  KernelForm form;
  form.variant = KernelVariant::simplified_p1;
  form.n = static_cast<int>(q.size());
  form.q = q;
  form.H = H;
  form.T.reserve(form.n);
  for (int l = 1; l <= form.n; ++l)
    form.T.push_back(l - 1 <= H.degree() ? H.vcoeffs[l - 1]
                                         : RationalFunction::zero());
  return form;
}

KernelForm makeBllForm(const std::vector<RationalFunction>& q, const BridgeH& H,
                       const Circle& contour) {
  if (!isMonomialBasisQ(q))
    throw DomainError("makeBllForm: requires q_l(u) = u^{l-1}");
  double eps = 0.0;
  if (!contour.bllRegion(&eps))
    throw InvariantError(
        "makeBllForm: contour must avoid the origin and stay inside |u+1| < 1");
  KernelForm form;
  form.variant = KernelVariant::bll;
  form.n = static_cast<int>(q.size());
  form.H = H;
  form.bll_min_abs = eps;
  return form;
}

Complex kernelEval(const KernelForm& form, Complex u1, Complex u2) {
  switch (form.variant) {
    case KernelVariant::general:
    case KernelVariant::simplified_p1: {
      Complex acc = 0.0;
      for (int l = 0; l < form.n; ++l) acc += form.q[l](u1) * form.T[l](u2);
      return acc;
    }
    case KernelVariant::bll: {
      if (std::abs(u1) < form.bll_min_abs * (1.0 - 1e-9))
        throw InvariantError("bll kernel evaluated inside the excluded disk |u| < eps");
      // residue of u1^n H(v,u2) / (v^n (u1-v)) with 1/(u1-v) expanded as a
      // geometric series in v/u1, carried out in the series algebra
      const int n = form.n;
      const int nh = std::min(form.H.degree(), n - 1);
      Vec hvals = Vec::Zero(nh + 1);
      for (int d = 0; d <= nh; ++d) hvals[d] = form.H.vcoeffs[d](u2);
      const LaurentSeries Hs = LaurentSeries::polynomial(hvals, LaurentSeries::kExact);
      Vec geom(n);
      Complex inv = Complex(1.0) / u1;
      Complex w = inv;
      for (int j = 0; j < n; ++j, w *= inv) geom[j] = w;
      const LaurentSeries G = LaurentSeries::polynomial(geom, n - 1);
      return std::pow(u1, n) * (Hs * G).coeff(n - 1);
    }
  }
  throw DomainError("kernelEval: unknown variant");
}

}  // namespace fredet
