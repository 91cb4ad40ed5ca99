#pragma once

#include <vector>

#include "fredet/contour.hpp"
#include "fredet/rational.hpp"
#include "fredet/series.hpp"
#include "fredet/types.hpp"

namespace fredet {

// Builders for the structured matrices of the identity. Entries are residue
// reads from Laurent series or contour integrals over a quadrature rule.
// Matrix indices are 0-based; the i-th row corresponds to index i+1 in the
// usual 1-based notation.

// A(i,j) = [v^{j-i}] p_i(v) f_j(v); unit upper triangular.
Mat buildA(const std::vector<LaurentSeries>& p, const std::vector<LaurentSeries>& f);

// B(i,j) = integral of q_i(u) g_j(u) du/(2 pi i) over the rule.
Mat buildB(const std::vector<RationalFunction>& q,
           const std::vector<RationalFunction>& g, const QuadratureRule& rule);

// S(i,j) = [v^{j-i}] p_i(v); R(i,j) = [v^{j-i}] f_j(v). Unit upper triangular.
Mat buildS(const std::vector<LaurentSeries>& p);
Mat buildR(const std::vector<LaurentSeries>& f);

// Reciprocal chain factors 1/(v P_i(v)) with P_1 = p_1, P_i = p_i / p_{i-1}.
std::vector<LaurentSeries> chainFactors(const std::vector<LaurentSeries>& p);

// W(i,j) through the nested chain of series operations, never by numeric
// inversion, so S W = I stays a genuine cross-check of the chain algebra.
Mat buildW(const std::vector<LaurentSeries>& p);

// Dual basis alpha_i(v) = sum_k Rinv(i,k) v^{k-1}; satisfies
// [residue] alpha_i(v) f_j(v) / v^j = delta_ij.
std::vector<LaurentSeries> alphaPolynomials(const std::vector<LaurentSeries>& f);

// Coefficients c_{ell,1..ell} matching the principal part of 1/(v^ell p_ell)
// against sum_j c_{ell,j} f_j(v)/v^j at exponents -ell..-1.
std::vector<Complex> expansionCoeffs(int ell, const LaurentSeries& p_ell,
                                     const std::vector<LaurentSeries>& f);

// Determinant via partially pivoted LU; deterministic, singular gives 0.
Complex luDet(const Mat& M);

// Exact back-substitution inverse of a unit upper triangular matrix.
Mat triInverse(const Mat& T);

}  // namespace fredet
