#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fredet/contour.hpp"
#include "fredet/kernel.hpp"
#include "fredet/rational.hpp"
#include "fredet/series.hpp"
#include "fredet/types.hpp"

namespace fredet {

// One verification problem: the function data (p, f, q and at least one of
// H, g), the contour, and the seed it was generated from.
struct Instance {
  int n = 0;
  std::vector<Vec> p;  // polynomial coefficients, ascending, p_i(0) = 1
  std::vector<Vec> f;
  std::vector<RationalFunction> q;
  std::optional<std::vector<RationalFunction>> H;  // v-coefficients of H(v,u)
  std::optional<std::vector<RationalFunction>> g;
  Circle contour{Complex(-1.0, 0.0), 0.5};
  std::int64_t seed = 0;
};

// n + max input polynomial degree + 8 guard terms; with polynomial inputs
// every coefficient the pipeline reads is then exact.
int defaultTrunc(const Instance& inst);

std::vector<LaurentSeries> seriesP(const Instance& inst);
std::vector<LaurentSeries> seriesF(const Instance& inst);

// Throws InvariantError on any violated instance invariant: sizes, exact
// unit constant terms, H/g presence, denominators near the contour, and the
// bridge relation when both H and g are supplied.
void validateInstance(const Instance& inst, bool allow_large_n = false);

// Deterministic generators. Draw order is part of the format contract and is
// documented in the README.
Instance genRandom(int n, int deg, std::uint64_t seed);
Instance genTasep(const std::vector<int>& y);

// JSON round trip. Serialization is canonical: fixed key order, complex
// numbers as [re, im]; loading validates the instance.
std::string instanceToJson(const Instance& inst);
Instance instanceFromJson(const std::string& text);
void saveInstance(const Instance& inst, const std::string& path);
Instance loadInstance(const std::string& path);

}  // namespace fredet
