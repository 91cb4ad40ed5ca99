#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fredet/instance.hpp"
#include "fredet/types.hpp"

namespace fredet {

struct VerifyConfig {
  int nodes = 128;
  double tol_identity = 1e-8;    // relative, against max(1, |det_finite|)
  double tol_lemma = 1e-10;      // ||S W - I||_max
  double tol_sr = 1e-12;         // ||S R - A||_max
  double tol_ortho = 1e-12;      // dual-basis orthogonality
  double tol_bridge = 1e-10;     // bridge relation residual at the nodes
  double tol_decomp = 1e-9;      // sum_i L_ell^(i) = L_ell at the nodes
  double tol_lell = 1e-10;       // L_ell^(ell) = sum_j c_{ell,j} g_j
  double tol_variant = 1e-10;    // kernel variants, pairwise at node pairs
  double tol_stability = 1e-9;   // |nystrom(m) - nystrom(2m)|
  bool require_bll = false;      // error out if the bll variant cannot run
  bool allow_large_n = false;
};

struct VerificationReport {
  Complex det_finite;
  Complex det_rank;
  Complex det_nystrom;
  double rel_diff_rank = 0.0;
  double rel_diff_nystrom = 0.0;
  double lemma_gap = 0.0;
  double sr_gap = 0.0;
  double ortho_gap = 0.0;
  double bridge_gap = 0.0;
  double decomp_gap = 0.0;
  double lell_gap = 0.0;
  std::optional<double> variant_gap;  // absent when no variant applies
  double stability_gap = 0.0;
  int nystrom_m = 0;
  bool passed = false;
  bool stability_flagged = false;
  std::vector<std::pair<std::string, double>> timings_ms;
  // per-ell decomposition residuals, for diagnostics
  std::vector<double> decomp_by_ell;
};

// Builds every structured object of the instance, evaluates the determinant
// along the three routes, and fills every identity gap. Kernel variants are
// compared whenever their preconditions hold.
VerificationReport verifyIdentity(const Instance& inst, const VerifyConfig& cfg = {});

// Canonical JSON (fixed key order; byte-identical for identical inputs
// modulo the timings block).
std::string reportToJson(const VerificationReport& report);

struct SuiteItem {
  Instance inst;
  VerificationReport report;
};

// Batch verification over generated instances; n and deg are drawn per
// instance from the suite seed.
std::vector<SuiteItem> runSuite(int count, int n_max, std::uint64_t seed,
                                int deg_max = 4, const VerifyConfig& cfg = {});

}  // namespace fredet
