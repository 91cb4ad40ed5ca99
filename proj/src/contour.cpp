#include "fredet/contour.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fredet {

bool Circle::bllRegion(double* eps_out) const {
  const double eps = std::abs(center) - radius;
  const bool ok = eps > 0.0 && std::abs(center + Complex(1.0)) + radius < 1.0;
  if (ok && eps_out) *eps_out = eps;
  return ok;
}

QuadratureRule makeRule(const Circle& c, int m) {
  if (c.radius <= 0.0) throw ConfigError("contour: circle radius must be positive");
  if (m < 8) throw ConfigError("quadrature rule needs m >= 8 nodes, got " + std::to_string(m));
  QuadratureRule rule;
  rule.circle = c;
  rule.m = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int a = 0; a < m; ++a) {
    const double theta = 2.0 * kPi * a / m;
    const Complex offset = c.radius * Complex(std::cos(theta), std::sin(theta));
    rule.nodes[a] = c.center + offset;
    rule.weights[a] = offset / static_cast<double>(m);
  }
  return rule;
}

Complex integrate(const Vec& samples, const QuadratureRule& rule) {
  if (samples.size() != rule.nodes.size())
    throw DomainError("integrate: sample count " + std::to_string(samples.size()) +
                      " does not match rule with m = " + std::to_string(rule.m));
  return samples.cwiseProduct(rule.weights).sum();
}

DenProbe probeDenominator(const Vec& den, const Circle& c, int samples) {
  DenProbe probe{std::numeric_limits<double>::infinity(), Complex(0)};
  for (int a = 0; a < samples; ++a) {
    const double theta = 2.0 * kPi * a / samples;
    const Complex u = c.center + c.radius * Complex(std::cos(theta), std::sin(theta));
    const double v = std::abs(polyEval(den, u));
    if (v < probe.min_abs) {
      probe.min_abs = v;
      probe.at = u;
    }
  }
  return probe;
}

}  // namespace fredet
