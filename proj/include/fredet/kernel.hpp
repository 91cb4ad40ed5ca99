#pragma once

#include <vector>

#include "fredet/contour.hpp"
#include "fredet/rational.hpp"
#include "fredet/series.hpp"
#include "fredet/types.hpp"

namespace fredet {

// Bridge function H(v,u): polynomial in v whose coefficients are rational
// functions of u on the contour. vcoeffs[d] is the coefficient of v^d.
// It links the f and g families through
//   [residue] f_i(v) v^{-i} H(v,u) = g_i(u)   for all i.
struct BridgeH {
  std::vector<RationalFunction> vcoeffs;

  int degree() const { return static_cast<int>(vcoeffs.size()) - 1; }
  Complex eval(int d, Complex u) const {
    return d <= degree() ? vcoeffs[d](u) : Complex(0);
  }
};

// Canonical bridge: H(v,u) = sum_m g_m(u) alpha_m(v) with the dual basis of
// f. Degree < n, and the bridge relation holds by orthogonality.
BridgeH constructH(const std::vector<LaurentSeries>& f,
                   const std::vector<RationalFunction>& g);

// The forward direction: g_i(u) = sum_{d<=i-1} vcoeffs[d](u) [v^{i-1-d}] f_i.
std::vector<RationalFunction> deriveG(const BridgeH& H,
                                      const std::vector<LaurentSeries>& f);

// The ell-fold nested contour factor
//   T_ell(u) = [residue] H(v_1,u) / ( prod (v_i - v_{i+1}) prod v_i P_i(v_i) )
// computed by chaining principal-part copies through reciprocal factors.
RationalFunction tChain(int ell, const BridgeH& H,
                        const std::vector<LaurentSeries>& p);

// Splitting of T_ell into L_ell^(1..ell) by shrinking the outer contour past
// the inner ones; the pieces must sum back to T_ell.
std::vector<RationalFunction> traceDecompose(int ell, const BridgeH& H,
                                             const std::vector<LaurentSeries>& p,
                                             const std::vector<LaurentSeries>& f);

enum class KernelVariant { general, simplified_p1, bll };

// A rank-n kernel K(u1,u2) on the contour in one of three equivalent forms:
//   general:        sum_l q_l(u1) T_l(u2)
//   simplified_p1:  the same with T_l = vcoeffs[l-1], valid when all p_i = 1
//   bll:            [residue] u1^n H(v,u2) / (v^n (u1 - v)), valid when
//                   additionally q_l(u) = u^{l-1} and the contour satisfies
//                   the bll region constraint.
struct KernelForm {
  KernelVariant variant = KernelVariant::general;
  int n = 0;
  std::vector<RationalFunction> q;
  std::vector<RationalFunction> T;
  BridgeH H;
  double bll_min_abs = 0.0;  // recorded epsilon = min |u| over the contour
};

KernelForm makeGeneralForm(const std::vector<RationalFunction>& q, const BridgeH& H,
                           const std::vector<LaurentSeries>& p);
KernelForm makeSimplifiedForm(const std::vector<RationalFunction>& q, const BridgeH& H,
                              const std::vector<LaurentSeries>& p);
KernelForm makeBllForm(const std::vector<RationalFunction>& q, const BridgeH& H,
                       const Circle& contour);

bool allUnitSeries(const std::vector<LaurentSeries>& p);        // every p_i == 1
bool isMonomialBasisQ(const std::vector<RationalFunction>& q);  // q_l == u^{l-1}

Complex kernelEval(const KernelForm& form, Complex u1, Complex u2);

}  // namespace fredet
