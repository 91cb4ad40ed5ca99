#include <doctest.h>

#include "fredet/contour.hpp"
#include "fredet/rational.hpp"
#include "testutil.hpp"

using namespace fredet;
using testutil::cdist;

namespace {

RationalFunction rf(std::initializer_list<Complex> num,
                    std::initializer_list<Complex> den) {
  return RationalFunction(polyFrom(num), polyFrom(den));
}

RationalFunction randomRf(Xoshiro256StarStar& rng, int ndeg, int ddeg) {
  Vec num(ndeg + 1), den(ddeg + 1);
  for (int k = 0; k <= ndeg; ++k) num[k] = rng.inDisk(1.0);
  for (int k = 0; k <= ddeg; ++k) den[k] = rng.inDisk(1.0);
  den[ddeg] += 2.0;  // keep the top coefficient away from zero
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace

TEST_SUITE("funcs") {

TEST_CASE("evaluation basics") {
  CHECK(rf({1.0, 1.0}, {1.0})(Complex(0, 1)) == Complex(1, 1));
  CHECK(rf({1.0}, {1.0, 1.0})(Complex(0)) == Complex(1.0));
}

TEST_CASE("evaluation matches the monomial-sum oracle") {
  Xoshiro256StarStar rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = randomRf(rng, 4, 3);
    const Complex z = rng.inDisk(2.0);
    const Complex den = testutil::naivePolyEval(r.den, z);
    if (std::abs(den) < 1e-6) continue;
    const Complex expected = testutil::naivePolyEval(r.num, z) / den;
    CHECK(cdist(r(z), expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("near-pole evaluation raises and carries the point") {
  const auto r = rf({1.0}, {-1.0, 1.0});  // 1/(u-1)
  try {
    (void)r(Complex(1.0) + Complex(1e-14, 0));
    FAIL("expected PoleProximityError");
  } catch (const PoleProximityError& e) {
    CHECK(cdist(e.at, Complex(1.0)) <= 1e-10);
  }
}

TEST_CASE("denominator must be nonzero") {
  Vec num = Vec::Ones(1);
  CHECK_THROWS_AS(RationalFunction(num, Vec::Zero(2)), InvariantError);
}

TEST_CASE("linear combination basics") {
  const auto a = rf({1.0}, {0.0, 1.0});   // 1/u
  const auto b = rf({-1.0}, {0.0, 1.0});  // -1/u
  const auto zero = linearCombination({1.0, 1.0}, {a, b});
  CHECK(zero.isZero());

  const auto lin = linearCombination({2.0, 3.0},
                                     {rf({0.0, 1.0}, {1.0}), rf({1.0}, {1.0})});
  CHECK(lin(Complex(2.0)) == Complex(7.0));
  CHECK(lin.numDegree() == 1);

  CHECK_THROWS_AS(linearCombination({}, {}), DomainError);
}

TEST_CASE("linear combination matches pointwise sums") {
  Xoshiro256StarStar rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RationalFunction> terms = {randomRf(rng, 2, 1), randomRf(rng, 3, 2),
                                           randomRf(rng, 1, 1)};
    std::vector<Complex> coeffs = {rng.inDisk(2.0), rng.inDisk(2.0), rng.inDisk(2.0)};
    const auto combo = linearCombination(coeffs, terms);
    for (int k = 0; k < 32; ++k) {
      const Complex z = rng.inDisk(1.5);
      Complex expected = 0.0;
      bool usable = true;
      for (size_t i = 0; i < terms.size(); ++i) {
        if (std::abs(polyEval(terms[i].den, z)) < 1e-5) { usable = false; break; }
        expected += coeffs[i] * terms[i](z);
      }
      if (!usable || std::abs(polyEval(combo.den, z)) < 1e-5) continue;
      CHECK(cdist(combo(z), expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("linear combination at the quadrature nodes") {
  // the combination evaluates to the weighted sum at every node of the rule
  Xoshiro256StarStar rng(33);
  const QuadratureRule rule = makeRule(Circle{Complex(-1, 0), 0.5}, 64);
  std::vector<RationalFunction> terms;
  std::vector<Complex> coeffs;
  for (int i = 0; i < 4; ++i) {
    Vec den(2);
    den[0] = Complex(2.0) + rng.inDisk(0.5);  // poles well away from the contour
    den[1] = 1.0;
    Vec num(3);
    for (int k = 0; k < 3; ++k) num[k] = rng.inDisk(1.0);
    terms.emplace_back(std::move(num), std::move(den));
    coeffs.push_back(rng.inDisk(2.0));
  }
  const auto combo = linearCombination(coeffs, terms);
  for (int a = 0; a < rule.m; ++a) {
    Complex expected = 0.0;
    for (size_t i = 0; i < terms.size(); ++i)
      expected += coeffs[i] * terms[i](rule.nodes[a]);
    CHECK(cdist(combo(rule.nodes[a]), expected) <=
          1e-11 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("degrees never exceed the sums of input degrees") {
  Xoshiro256StarStar rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = randomRf(rng, 3, 2);
    const auto b = randomRf(rng, 2, 2);
    const auto prod = a * b;
    CHECK(prod.numDegree() <= a.numDegree() + b.numDegree());
    CHECK(prod.denDegree() <= a.denDegree() + b.denDegree());
    const auto sum = linearCombination({1.0, 1.0}, {a, b});
    CHECK(sum.denDegree() <= a.denDegree() + b.denDegree());
    CHECK(sum.numDegree() <=
          std::max(a.numDegree() + b.denDegree(), b.numDegree() + a.denDegree()));
  }
}

TEST_CASE("products") {
  const auto one = rf({0.0, 1.0}, {1.0}) * rf({1.0}, {0.0, 1.0});  // u * 1/u
  for (double x : {0.5, 2.0, -3.0}) CHECK(cdist(one(Complex(x)), 1.0) <= 1e-15);

  const auto z = rf({1.0, 2.0}, {1.0}) * RationalFunction::zero();
  CHECK(z.isZero());

  Xoshiro256StarStar rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = randomRf(rng, 2, 1);
    const auto b = randomRf(rng, 1, 2);
    const auto prod = a * b;
    for (int k = 0; k < 32; ++k) {
      const Complex x = rng.inDisk(1.5);
      if (std::abs(polyEval(prod.den, x)) < 1e-5) continue;
      const Complex expected = a(x) * b(x);
      CHECK(cdist(prod(x), expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("monomial denominators merge without degree blowup") {
  // u^-1 and u^-3 shapes combine over u^3, not u^4
  const auto a = rf({1.0}, {0.0, 1.0});
  const auto b = rf({2.0}, {0.0, 0.0, 0.0, 1.0});
  const auto sum = linearCombination({1.0, 1.0}, {a, b});
  CHECK(sum.denDegree() == 3);
  const Complex z(0.7, 0.2);
  CHECK(cdist(sum(z), a(z) + b(z)) <= 1e-14);
}

}  // TEST_SUITE
