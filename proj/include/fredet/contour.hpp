#pragma once

#include "fredet/poly.hpp"
#include "fredet/types.hpp"

namespace fredet {

// Counterclockwise circle in the complex plane. The only contour kind
// supported: trapezoidal quadrature in the angle converges geometrically for
// integrands analytic in an annulus around it.
struct Circle {
  Complex center;
  double radius = 0.0;

  // Region constraint of the special-case kernel: the contour keeps a
  // positive distance to the origin and stays inside |u+1| < 1. On success
  // the recorded distance min|u| = |center| - radius is written to eps_out.
  bool bllRegion(double* eps_out = nullptr) const;
};

// Nodes and complex weights such that  integral_Gamma h(u) du/(2 pi i)
// is approximated by sum_a h(u_a) w_a. For the circle rule,
// u_a = center + r exp(2 pi i a/m) and w_a = (u_a - center)/m.
struct QuadratureRule {
  Circle circle;
  Vec nodes;
  Vec weights;
  int m = 0;
};

QuadratureRule makeRule(const Circle& c, int m);  // m < 8 is a ConfigError

// sum_a samples[a] * w_a; sample count must match the rule.
Complex integrate(const Vec& samples, const QuadratureRule& rule);

// Minimum of |den(u)| over a uniform probe of the circle, with its argmin.
// Used to reject inputs whose denominators vanish on or near the contour.
struct DenProbe {
  double min_abs;
  Complex at;
};
DenProbe probeDenominator(const Vec& den, const Circle& c, int samples = 4096);

}  // namespace fredet
