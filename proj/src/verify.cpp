#include "fredet/verify.hpp"

#include <chrono>
#include <cmath>

#include <json.hpp>

#include "fredet/fredholm.hpp"
#include "fredet/rng.hpp"
#include "fredet/structmat.hpp"

namespace fredet {

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double relDiff(Complex a, Complex ref) {
  return std::abs(a - ref) / std::max(1.0, std::abs(ref));
}

double maxAbs(const Mat& M) { return M.cwiseAbs().maxCoeff(); }

}  // namespace

VerificationReport verifyIdentity(const Instance& inst, const VerifyConfig& cfg) {
  validateInstance(inst, cfg.allow_large_n);
  if (cfg.nodes < 8) throw ConfigError("verify: nodes must be >= 8");

  VerificationReport rep;
  const int n = inst.n;

  auto t0 = Clock::now();
  const auto p = seriesP(inst);
  const auto f = seriesF(inst);
  const QuadratureRule rule = makeRule(inst.contour, cfg.nodes);

  // bridge data: construct the missing side
  BridgeH H;
  std::vector<RationalFunction> g;
  if (inst.H)
    H.vcoeffs = *inst.H;
  else
    H = constructH(f, *inst.g);
  if (inst.g)
    g = *inst.g;
  else
    g = deriveG(H, f);

  const Mat A = buildA(p, f);
  const Mat B = buildB(inst.q, g, rule);
  const Mat S = buildS(p);
  const Mat R = buildR(f);
  const Mat W = buildW(p);
  const auto alphas = alphaPolynomials(f);
  rep.timings_ms.emplace_back("build", msSince(t0));

  t0 = Clock::now();
  rep.det_finite = luDet(A + B);
  rep.timings_ms.emplace_back("finite", msSince(t0));

  t0 = Clock::now();
  std::vector<RationalFunction> T;
  T.reserve(n);
  for (int l = 1; l <= n; ++l) T.push_back(tChain(l, H, p));
  rep.det_rank = fredDetRank(inst.q, T, rule).value;
  rep.timings_ms.emplace_back("rank", msSince(t0));

  t0 = Clock::now();
  const KernelForm general = makeGeneralForm(inst.q, H, p);
  const FredholmResult nys = fredDetNystrom(general, rule);
  rep.det_nystrom = nys.value;
  rep.stability_gap = nys.stability_gap;
  rep.nystrom_m = nys.m_used;
  rep.timings_ms.emplace_back("nystrom", msSince(t0));

  t0 = Clock::now();
  rep.rel_diff_rank = relDiff(rep.det_rank, rep.det_finite);
  rep.rel_diff_nystrom = relDiff(rep.det_nystrom, rep.det_finite);
  rep.lemma_gap = maxAbs(S * W - Mat::Identity(n, n));
  rep.sr_gap = maxAbs(S * R - A);

  // orthogonality through series residues, independent of the matrix route
  double ortho = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex val = (alphas[i] * f[j]).coeff(j);
      ortho = std::max(ortho, std::abs(val - (i == j ? Complex(1.0) : Complex(0.0))));
    }
  }
  rep.ortho_gap = ortho;

  // bridge relation residual at the nodes
  {
    const auto gd = deriveG(H, f);
    double gap = 0.0;
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < rule.m; ++a)
        gap = std::max(gap, std::abs(gd[i](rule.nodes[a]) - g[i](rule.nodes[a])));
    rep.bridge_gap = gap;
  }

  // trace-class decomposition, every ell
  {
    double dmax = 0.0, lmax = 0.0;
    rep.decomp_by_ell.assign(n, 0.0);
    for (int ell = 1; ell <= n; ++ell) {
      const auto parts = traceDecompose(ell, H, p, f);
      const auto cs = expansionCoeffs(ell, p[ell - 1], f);
      double dgap = 0.0;
      for (int a = 0; a < rule.m; ++a) {
        const Complex u = rule.nodes[a];
        Complex sum = 0.0;
        for (const auto& part : parts) sum += part(u);
        dgap = std::max(dgap, std::abs(sum - T[ell - 1](u)));
        Complex rhs = 0.0;
        for (int jj = 1; jj <= ell; ++jj) rhs += cs[jj - 1] * g[jj - 1](u);
        lmax = std::max(lmax, std::abs(parts[ell - 1](u) - rhs));
      }
      rep.decomp_by_ell[ell - 1] = dgap;
      dmax = std::max(dmax, dgap);
    }
    rep.decomp_gap = dmax;
    rep.lell_gap = lmax;
  }

  // kernel variants, whenever their preconditions hold
  {
    const bool p_is_one = allUnitSeries(p);
    const bool bll_ok = p_is_one && isMonomialBasisQ(inst.q) && inst.contour.bllRegion();
    if (cfg.require_bll && !bll_ok)
      throw ConfigError(
          "bll check requested, but the instance does not satisfy p = 1, "
          "q_l = u^{l-1} and the contour region constraint");
    if (p_is_one) {
      std::vector<KernelForm> forms;
      forms.push_back(makeSimplifiedForm(inst.q, H, p));
      if (bll_ok) forms.push_back(makeBllForm(inst.q, H, inst.contour));
      double gap = 0.0;
      for (int a = 0; a < rule.m; ++a) {
        for (int b = 0; b < rule.m; ++b) {
          const Complex base = kernelEval(general, rule.nodes[a], rule.nodes[b]);
          Complex prev = base;
          for (const auto& form : forms) {
            const Complex val = kernelEval(form, rule.nodes[a], rule.nodes[b]);
            gap = std::max(gap, std::abs(val - base));
            gap = std::max(gap, std::abs(val - prev));
            prev = val;
          }
        }
      }
      rep.variant_gap = gap;
    }
  }
  rep.timings_ms.emplace_back("checks", msSince(t0));

  rep.stability_flagged = rep.stability_gap > cfg.tol_stability;
  rep.passed = rep.rel_diff_rank <= cfg.tol_identity &&
               rep.rel_diff_nystrom <= cfg.tol_identity &&
               rep.lemma_gap <= cfg.tol_lemma && rep.sr_gap <= cfg.tol_sr &&
               rep.ortho_gap <= cfg.tol_ortho && rep.bridge_gap <= cfg.tol_bridge &&
               rep.decomp_gap <= cfg.tol_decomp && rep.lell_gap <= cfg.tol_lell &&
               (!rep.variant_gap || *rep.variant_gap <= cfg.tol_variant) &&
               !rep.stability_flagged;
  return rep;
}

std::string reportToJson(const VerificationReport& rep) {
  using ordered_json = nlohmann::ordered_json;
  auto cplx = [](Complex z) { return ordered_json::array({z.real(), z.imag()}); };
  ordered_json j;
  j["det_finite"] = cplx(rep.det_finite);
  j["det_rank"] = cplx(rep.det_rank);
  j["det_nystrom"] = cplx(rep.det_nystrom);
  j["rel_diff_rank"] = rep.rel_diff_rank;
  j["rel_diff_nystrom"] = rep.rel_diff_nystrom;
  j["lemma_gap"] = rep.lemma_gap;
  j["sr_gap"] = rep.sr_gap;
  j["ortho_gap"] = rep.ortho_gap;
  j["bridge_gap"] = rep.bridge_gap;
  j["decomp_gap"] = rep.decomp_gap;
  j["lell_gap"] = rep.lell_gap;
  if (rep.variant_gap)
    j["variant_gap"] = *rep.variant_gap;
  else
    j["variant_gap"] = nullptr;
  j["stability_gap"] = rep.stability_gap;
  j["nystrom_m"] = rep.nystrom_m;
  j["passed"] = rep.passed;
  j["stability_flagged"] = rep.stability_flagged;
  ordered_json t;
  for (const auto& [name, ms] : rep.timings_ms) t[name] = ms;
  j["timings_ms"] = t;
  return j.dump(2) + "\n";
}

std::vector<SuiteItem> runSuite(int count, int n_max, std::uint64_t seed,
                                int deg_max, const VerifyConfig& cfg) {
  if (count < 1) throw ConfigError("suite: count must be >= 1");
  if (n_max < 1 || n_max > 16) throw ConfigError("suite: n_max must be in [1,16]");
  if (deg_max < 0 || deg_max > 6) throw ConfigError("suite: deg_max must be in [0,6]");
  Xoshiro256StarStar rng(seed);
  std::vector<SuiteItem> items;
  items.reserve(count);
  for (int k = 0; k < count; ++k) {
    const int n = 1 + static_cast<int>(rng.below(n_max));
    const int deg = static_cast<int>(rng.below(deg_max + 1));
    const std::uint64_t iseed = rng.next();
    Instance inst = genRandom(n, deg, iseed);
    VerificationReport rep = verifyIdentity(inst, cfg);
    items.push_back(SuiteItem{std::move(inst), std::move(rep)});
  }
  return items;
}

}  // namespace fredet
