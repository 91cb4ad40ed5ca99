#pragma once

#include <vector>

#include "fredet/contour.hpp"
#include "fredet/kernel.hpp"
#include "fredet/rational.hpp"
#include "fredet/types.hpp"

namespace fredet {

enum class FredholmMethod { rank, nystrom };

struct FredholmResult {
  Complex value;
  FredholmMethod method = FredholmMethod::rank;
  int m_used = 0;            // nystrom only
  double stability_gap = 0;  // |value(m) - value(2m)|, nystrom only
};

// det(I + K) through the finite-rank cycling det(I_n + G),
// G(m,l) = integral of q_m(u) T_l(u) du/(2 pi i).
FredholmResult fredDetRank(const std::vector<RationalFunction>& q,
                           const std::vector<RationalFunction>& T,
                           const QuadratureRule& rule);

// det(I + K) by Nystrom discretization on the rule's nodes, with an
// automatic repeat at 2m nodes recorded as the stability gap.
FredholmResult fredDetNystrom(const KernelForm& form, const QuadratureRule& rule);

}  // namespace fredet
