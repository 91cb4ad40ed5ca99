#include "fredet/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fredet/rng.hpp"

namespace fredet {

using ordered_json = nlohmann::ordered_json;

int defaultTrunc(const Instance& inst) {
  int maxdeg = 0;
  for (const auto& c : inst.p) maxdeg = std::max(maxdeg, polyDegree(c));
  for (const auto& c : inst.f) maxdeg = std::max(maxdeg, polyDegree(c));
  return inst.n + maxdeg + 8;
}

std::vector<LaurentSeries> seriesP(const Instance& inst) {
  const int t = defaultTrunc(inst);
  std::vector<LaurentSeries> out;
  out.reserve(inst.p.size());
  for (const auto& c : inst.p) out.push_back(LaurentSeries::polynomial(c, t));
  return out;
}

std::vector<LaurentSeries> seriesF(const Instance& inst) {
  const int t = defaultTrunc(inst);
  std::vector<LaurentSeries> out;
  out.reserve(inst.f.size());
  for (const auto& c : inst.f) out.push_back(LaurentSeries::polynomial(c, t));
  return out;
}

namespace {

std::string fmtComplex(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

void probeFamily(const std::vector<RationalFunction>& fam, const char* name,
                 const Circle& contour) {
  for (size_t i = 0; i < fam.size(); ++i) {
    const DenProbe probe = probeDenominator(fam[i].den, contour);
    if (probe.min_abs < 1e-8)
      throw InvariantError(std::string(name) + "[" + std::to_string(i + 1) +
                           "]: denominator vanishes near the contour node u=" +
                           fmtComplex(probe.at) + " (|den|=" +
                           std::to_string(probe.min_abs) + ")");
  }
}

}  // namespace

void validateInstance(const Instance& inst, bool allow_large_n) {
  if (inst.n < 1) throw InvariantError("instance: n must be >= 1");
  if (inst.n > 16 && !allow_large_n)
    throw InvariantError("instance: n > 16 needs the large-n override");
  if (static_cast<int>(inst.p.size()) != inst.n ||
      static_cast<int>(inst.f.size()) != inst.n ||
      static_cast<int>(inst.q.size()) != inst.n)
    throw InvariantError("instance: p, f, q must each have n entries");
  for (int i = 0; i < inst.n; ++i) {
    if (inst.p[i].size() == 0 || inst.p[i][0] != Complex(1.0))
      throw InvariantError("instance: p[" + std::to_string(i + 1) +
                           "](0) must be exactly 1");
    if (inst.f[i].size() == 0 || inst.f[i][0] != Complex(1.0))
      throw InvariantError("instance: f[" + std::to_string(i + 1) +
                           "](0) must be exactly 1");
  }
  if (!inst.H && !inst.g)
    throw InvariantError("instance: at least one of H, g must be present");
  if (inst.H && static_cast<int>(inst.H->size()) == 0)
    throw InvariantError("instance: H must have at least one v-coefficient");
  if (inst.g && static_cast<int>(inst.g->size()) != inst.n)
    throw InvariantError("instance: g must have n entries");
  if (inst.contour.radius <= 0.0)
    throw InvariantError("instance: contour radius must be positive");

  probeFamily(inst.q, "q", inst.contour);
  if (inst.g) probeFamily(*inst.g, "g", inst.contour);
  if (inst.H) probeFamily(*inst.H, "H", inst.contour);

  if (inst.H && inst.g) {
    // bridge relation must hold when both sides are supplied
    const BridgeH H{*inst.H};
    const auto gd = deriveG(H, seriesF(inst));
    const QuadratureRule rule = makeRule(inst.contour, 128);
    double gap = 0.0;
    for (int i = 0; i < inst.n; ++i)
      for (int a = 0; a < rule.m; ++a)
        gap = std::max(gap, std::abs(gd[i](rule.nodes[a]) - (*inst.g)[i](rule.nodes[a])));
    if (gap > 1e-10)
      throw InvariantError("instance: H and g are inconsistent, bridge residual " +
                           std::to_string(gap));
  }
}

Instance genRandom(int n, int deg, std::uint64_t seed) {
  if (n < 1 || n > 16) throw DomainError("genRandom: n must be in [1,16]");
  if (deg < 0 || deg > 6) throw DomainError("genRandom: deg must be in [0,6]");
  Xoshiro256StarStar rng(seed);
  Instance inst;
  inst.n = n;
  inst.contour = Circle{Complex(-1.0, 0.0), 0.5};
  inst.seed = static_cast<std::int64_t>(seed);

  auto drawUnitPoly = [&]() {
    Vec c = Vec::Zero(deg + 1);
    c[0] = 1.0;
    for (int d = 1; d <= deg; ++d) c[d] = rng.inDisk(0.8 / deg);
    return c;
  };
  // pole with at least 0.2 clearance from the contour circle; half of them
  // inside the contour so B has nonzero entries generically
  auto drawPole = [&]() {
    if (rng.next() & 1)
      return inst.contour.center + rng.inDisk(inst.contour.radius - 0.2);
    for (int attempt = 0; attempt < 32; ++attempt) {
      const Complex w = rng.inDisk(1.0);
      if (std::abs(w) >= inst.contour.radius + 0.2)
        return inst.contour.center + w;
    }
    throw DomainError("genRandom: could not place a pole outside the contour margin");
  };
  auto drawNum = [&]() {
    Vec num(3);
    for (int k = 0; k < 3; ++k) num[k] = rng.inDisk(1.0);
    return num;
  };
  auto linearDen = [](Complex z) {
    Vec den(2);
    den[0] = -z;
    den[1] = 1.0;
    return den;
  };

  for (int i = 0; i < n; ++i) inst.p.push_back(drawUnitPoly());
  for (int i = 0; i < n; ++i) inst.f.push_back(drawUnitPoly());
  for (int i = 0; i < n; ++i) {
    const Complex z = drawPole();
    inst.q.emplace_back(drawNum(), linearDen(z));
  }
  // one shared pole for the H coefficients keeps every family derived from
  // them over a degree-1 denominator
  const Complex zH = drawPole();
  std::vector<RationalFunction> hco;
  for (int d = 0; d < n; ++d) hco.emplace_back(drawNum(), linearDen(zH));
  inst.H = hco;
  inst.g = deriveG(BridgeH{hco}, seriesF(inst));
  return inst;
}

Instance genTasep(const std::vector<int>& y) {
  const int n = static_cast<int>(y.size());
  if (n < 1) throw DomainError("genTasep: y must be non-empty");
  for (int i = 1; i < n; ++i)
    if (y[i - 1] <= y[i])
      throw DomainError("genTasep: y must be strictly decreasing");
  for (int i = 0; i < n; ++i)
    if (y[i] + (i + 1) < 0)
      throw DomainError("genTasep: y_i + i must be >= 0 so f_i is a polynomial");

  Instance inst;
  inst.n = n;
  inst.contour = Circle{Complex(-1.0, 0.0), 0.5};
  const Vec onePlus = polyFrom({1.0, 1.0});
  std::vector<RationalFunction> g;
  for (int i = 0; i < n; ++i) {
    const int k = y[i] + (i + 1);
    inst.p.push_back(Vec::Ones(1));
    inst.f.push_back(polyPow(onePlus, k));
    Vec qnum = Vec::Zero(i + 1);
    qnum[i] = 1.0;  // q_i(u) = u^{i-1}, 1-based i
    inst.q.push_back(RationalFunction::fromPoly(std::move(qnum)));
    Vec gden = Vec::Zero(i + 2);
    gden[i + 1] = 1.0;  // u^i
    g.emplace_back(polyScale(polyPow(onePlus, k), -1.0), std::move(gden));
  }
  inst.g = g;
  inst.H = constructH(seriesF(inst), g).vcoeffs;
  return inst;
}

namespace {

ordered_json complexToJson(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json polyToJson(const Vec& p) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(complexToJson(p[i]));
  return arr;
}

ordered_json rationalToJson(const RationalFunction& r) {
  return ordered_json{{"num", polyToJson(r.num)}, {"den", polyToJson(r.den)}};
}

Complex complexFromJson(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": expected a complex number as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Vec polyFromJson(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError(where + ": expected a non-empty coefficient array");
  Vec p(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    p[static_cast<Eigen::Index>(i)] =
        complexFromJson(j[i], where + "[" + std::to_string(i) + "]");
  return p;
}

RationalFunction rationalFromJson(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParseError(where + ": expected an object with num and den");
  return RationalFunction(polyFromJson(j["num"], where + ".num"),
                          polyFromJson(j["den"], where + ".den"));
}

std::vector<RationalFunction> rationalListFromJson(const ordered_json& j,
                                                   const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<RationalFunction> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(rationalFromJson(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

std::string instanceToJson(const Instance& inst) {
  ordered_json j;
  j["n"] = inst.n;
  ordered_json p = ordered_json::array(), f = ordered_json::array(),
               q = ordered_json::array();
  for (const auto& c : inst.p) p.push_back(polyToJson(c));
  for (const auto& c : inst.f) f.push_back(polyToJson(c));
  for (const auto& r : inst.q) q.push_back(rationalToJson(r));
  j["p"] = p;
  j["f"] = f;
  j["q"] = q;
  if (inst.H) {
    ordered_json h = ordered_json::array();
    for (const auto& r : *inst.H) h.push_back(rationalToJson(r));
    j["H"] = h;
  }
  if (inst.g) {
    ordered_json g = ordered_json::array();
    for (const auto& r : *inst.g) g.push_back(rationalToJson(r));
    j["g"] = g;
  }
  j["contour"] = ordered_json{{"kind", "circle"},
                              {"center", complexToJson(inst.contour.center)},
                              {"radius", inst.contour.radius}};
  j["seed"] = inst.seed;
  return j.dump(2) + "\n";
}

Instance instanceFromJson(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  Instance inst;
  try {
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw ParseError("instance.n: missing or not an integer");
    inst.n = j["n"].get<int>();
    if (!j.contains("p") || !j["p"].is_array()) throw ParseError("instance.p: missing array");
    if (!j.contains("f") || !j["f"].is_array()) throw ParseError("instance.f: missing array");
    if (!j.contains("q") || !j["q"].is_array()) throw ParseError("instance.q: missing array");
    for (size_t i = 0; i < j["p"].size(); ++i)
      inst.p.push_back(polyFromJson(j["p"][i], "instance.p[" + std::to_string(i) + "]"));
    for (size_t i = 0; i < j["f"].size(); ++i)
      inst.f.push_back(polyFromJson(j["f"][i], "instance.f[" + std::to_string(i) + "]"));
    inst.q = rationalListFromJson(j["q"], "instance.q");
    if (j.contains("H")) inst.H = rationalListFromJson(j["H"], "instance.H");
    if (j.contains("g")) inst.g = rationalListFromJson(j["g"], "instance.g");
    if (!j.contains("contour") || !j["contour"].is_object())
      throw ParseError("instance.contour: missing object");
    const auto& jc = j["contour"];
    if (!jc.contains("kind") || jc["kind"] != "circle")
      throw ParseError("instance.contour.kind: only \"circle\" is supported");
    inst.contour.center = complexFromJson(jc["center"], "instance.contour.center");
    if (!jc.contains("radius") || !jc["radius"].is_number())
      throw ParseError("instance.contour.radius: missing number");
    inst.contour.radius = jc["radius"].get<double>();
    inst.seed = j.contains("seed") ? j["seed"].get<std::int64_t>() : 0;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  validateInstance(inst);
  return inst;
}

void saveInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  out << instanceToJson(inst);
}

Instance loadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instanceFromJson(buf.str());
}

}  // namespace fredet
