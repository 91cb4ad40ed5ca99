#include <doctest.h>

#include "fredet/contour.hpp"
#include "testutil.hpp"

using namespace fredet;
using testutil::cdist;

TEST_SUITE("contour") {

TEST_CASE("rule nodes and weights follow the circle formula") {
  const Circle c{Complex(-1, 0), 0.5};
  const QuadratureRule rule = makeRule(c, 8);
  // the four axis points sit at even indices
  CHECK(cdist(rule.nodes[0], Complex(-0.5, 0)) <= 1e-15);
  CHECK(cdist(rule.nodes[2], Complex(-1.0, 0.5)) <= 1e-15);
  CHECK(cdist(rule.nodes[4], Complex(-1.5, 0)) <= 1e-15);
  CHECK(cdist(rule.nodes[6], Complex(-1.0, -0.5)) <= 1e-15);
  for (int a = 0; a < rule.m; ++a)
    CHECK(cdist(rule.weights[a], (rule.nodes[a] - c.center) / 8.0) <= 1e-16);
}

TEST_CASE("node count below eight is rejected") {
  CHECK_THROWS_AS(makeRule(Circle{Complex(-1, 0), 0.5}, 4), ConfigError);
  CHECK_THROWS_AS(makeRule(Circle{Complex(0, 0), -1.0}, 64), ConfigError);
}

TEST_CASE("closed-contour identities") {
  const Circle c{Complex(-1, 0), 0.5};
  for (int m : {8, 16, 64, 128}) {
    const QuadratureRule rule = makeRule(c, m);
    // weights sum to zero on a closed contour
    CHECK(std::abs(rule.weights.sum()) <= 1e-14);
    // residue of 1/(u - center) is exactly one
    Vec samples(m);
    for (int a = 0; a < m; ++a) samples[a] = 1.0 / (rule.nodes[a] - c.center);
    CHECK(cdist(integrate(samples, rule), 1.0) <= 1e-14);
  }
}

TEST_CASE("integration examples") {
  const Circle c{Complex(-1, 0), 0.5};
  const QuadratureRule rule = makeRule(c, 64);
  Vec ones = Vec::Ones(rule.m);
  CHECK(std::abs(integrate(ones, rule)) <= 1e-14);

  Vec simple(rule.m), dbl(rule.m);
  for (int a = 0; a < rule.m; ++a) {
    const Complex up1 = rule.nodes[a] + Complex(1.0);
    simple[a] = 1.0 / up1;
    dbl[a] = 1.0 / (up1 * up1);
  }
  CHECK(cdist(integrate(simple, rule), 1.0) <= 1e-12);
  CHECK(std::abs(integrate(dbl, rule)) <= 1e-12);
}

TEST_CASE("sample length must match the rule") {
  const QuadratureRule rule = makeRule(Circle{Complex(-1, 0), 0.5}, 16);
  CHECK_THROWS_AS(integrate(Vec::Ones(8), rule), DomainError);
}

TEST_CASE("spectral convergence probe") {
  const Circle c{Complex(-1, 0), 0.5};
  for (int m : {32, 64, 128}) {
    auto value = [&](int mm) {
      const QuadratureRule rule = makeRule(c, mm);
      Vec s(mm);
      for (int a = 0; a < mm; ++a) s[a] = 1.0 / (rule.nodes[a] + Complex(1.0));
      return integrate(s, rule);
    };
    CHECK(cdist(value(m), value(2 * m)) <= 1e-12);
  }
}

TEST_CASE("integration is linear in the samples") {
  Xoshiro256StarStar rng(77);
  const QuadratureRule rule = makeRule(Circle{Complex(-1, 0), 0.5}, 32);
  Vec a(rule.m), b(rule.m);
  for (int k = 0; k < rule.m; ++k) {
    a[k] = rng.inDisk(1.0);
    b[k] = rng.inDisk(1.0);
  }
  const Complex lam = rng.inDisk(2.0);
  CHECK(cdist(integrate(a + lam * b, rule),
              integrate(a, rule) + lam * integrate(b, rule)) <= 1e-14);
}

TEST_CASE("bll region flag") {
  double eps = 0.0;
  CHECK(Circle{Complex(-1, 0), 0.5}.bllRegion(&eps));
  CHECK(eps == doctest::Approx(0.5));
  CHECK(Circle{Complex(-0.2, 0), 0.1}.bllRegion(&eps));  // small circle near 0
  CHECK(eps == doctest::Approx(0.1));
  CHECK_FALSE(Circle{Complex(-1, 0), 1.5}.bllRegion());  // swallows the origin
  CHECK_FALSE(Circle{Complex(2, 0), 0.5}.bllRegion());   // outside |u+1| < 1
}

}  // TEST_SUITE
