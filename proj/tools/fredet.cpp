// Command-line front end: instance generation, single-instance verification,
// batch suites, and a timing benchmark.
//
// Exit codes: 0 pass, 1 identity failure, 2 input/invariant error,
// 3 numerical-stability flag.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fredet/instance.hpp"
#include "fredet/verify.hpp"

namespace {

using namespace fredet;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitStabilityFlag = 3;

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("--y: cannot parse '" + item + "' as an integer");
    }
  }
  if (out.empty()) throw ParseError("--y: empty list");
  return out;
}

void printSummary(const VerificationReport& rep) {
  std::cout << "det_finite  = " << rep.det_finite << "\n"
            << "det_rank    = " << rep.det_rank
            << "   (rel diff " << rep.rel_diff_rank << ")\n"
            << "det_nystrom = " << rep.det_nystrom
            << "   (rel diff " << rep.rel_diff_nystrom << ", m = "
            << rep.nystrom_m << ", stability gap " << rep.stability_gap << ")\n"
            << "gaps: lemma " << rep.lemma_gap << ", SR " << rep.sr_gap
            << ", ortho " << rep.ortho_gap << ", bridge " << rep.bridge_gap
            << ", decomp " << rep.decomp_gap << ", lell " << rep.lell_gap;
  if (rep.variant_gap) std::cout << ", variants " << *rep.variant_gap;
  std::cout << "\n" << (rep.passed ? "PASS" : "FAIL") << "\n";
}

int reportExitCode(const VerificationReport& rep, const VerifyConfig& cfg) {
  if (rep.passed) return kExitPass;
  // stability-only failures get their own code
  const bool identity_ok =
      rep.rel_diff_rank <= cfg.tol_identity &&
      rep.rel_diff_nystrom <= cfg.tol_identity && rep.lemma_gap <= cfg.tol_lemma &&
      rep.sr_gap <= cfg.tol_sr && rep.ortho_gap <= cfg.tol_ortho &&
      rep.bridge_gap <= cfg.tol_bridge && rep.decomp_gap <= cfg.tol_decomp &&
      rep.lell_gap <= cfg.tol_lell &&
      (!rep.variant_gap || *rep.variant_gap <= cfg.tol_variant);
  return (identity_ok && rep.stability_flagged) ? kExitStabilityFlag
                                                : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fredet: numerical verification of the determinant identity "
               "det(A+B) = det(I+K) for contour-integral matrices"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);

  int gr_n = 4, gr_deg = 2;
  std::uint64_t gr_seed = 1;
  std::string gr_out = "instance.json";
  auto* gen_random = gen->add_subcommand("random", "random polynomial/rational instance");
  gen_random->add_option("--n", gr_n, "matrix size (1..16)");
  gen_random->add_option("--deg", gr_deg, "degree of p_i and f_i (0..6)");
  gen_random->add_option("--seed", gr_seed, "generator seed");
  gen_random->add_option("-o,--output", gr_out, "output path");

  std::string gt_y;
  std::string gt_out = "instance.json";
  auto* gen_tasep = gen->add_subcommand("tasep", "TASEP-style instance from integers y");
  gen_tasep->add_option("--y", gt_y, "strictly decreasing integers, e.g. 3,1,0,-2")
      ->required();
  gen_tasep->add_option("-o,--output", gt_out, "output path");

  // verify
  std::string v_input, v_report;
  VerifyConfig v_cfg;
  bool v_check_bll = false, v_check_trace = false, v_allow_large = false;
  auto* verify = app.add_subcommand("verify", "verify one instance file");
  verify->add_option("--input", v_input, "instance JSON")->required();
  verify->add_option("--nodes", v_cfg.nodes, "quadrature nodes (default 128)");
  verify->add_option("--tol", v_cfg.tol_identity, "identity tolerance (default 1e-8)");
  verify->add_option("--report", v_report, "write the report JSON here");
  verify->add_flag("--check-bll", v_check_bll,
                   "require the bll kernel variant to apply and print its deviation");
  verify->add_flag("--check-trace", v_check_trace,
                   "print the per-ell decomposition residuals");
  verify->add_flag("--allow-large-n", v_allow_large, "lift the n <= 16 cap");

  // suite
  int s_count = 50, s_nmax = 8, s_degmax = 4;
  std::uint64_t s_seed = 7;
  VerifyConfig s_cfg;
  auto* suite = app.add_subcommand("suite", "batch verification of generated instances");
  suite->add_option("--count", s_count, "number of instances");
  suite->add_option("--n-max", s_nmax, "maximum n");
  suite->add_option("--deg-max", s_degmax, "maximum polynomial degree");
  suite->add_option("--seed", s_seed, "suite seed");
  suite->add_option("--nodes", s_cfg.nodes, "quadrature nodes");
  suite->add_option("--tol", s_cfg.tol_identity, "identity tolerance");

  // bench
  int b_nmax = 12;
  auto* bench = app.add_subcommand("bench", "timing CSV per n to standard output");
  bench->add_option("--n-max", b_nmax, "largest n to time");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_random->parsed()) {
      const Instance inst = genRandom(gr_n, gr_deg, gr_seed);
      validateInstance(inst);
      saveInstance(inst, gr_out);
      std::cout << "wrote " << gr_out << " (n=" << inst.n << ", deg=" << gr_deg
                << ", seed=" << gr_seed << ")\n";
      return kExitPass;
    }
    if (gen_tasep->parsed()) {
      const Instance inst = genTasep(parseIntList(gt_y));
      validateInstance(inst);
      saveInstance(inst, gt_out);
      std::cout << "wrote " << gt_out << " (n=" << inst.n << ")\n";
      return kExitPass;
    }
    if (verify->parsed()) {
      v_cfg.require_bll = v_check_bll;
      v_cfg.allow_large_n = v_allow_large;
      const Instance inst = loadInstance(v_input);
      const VerificationReport rep = verifyIdentity(inst, v_cfg);
      printSummary(rep);
      if (v_check_trace) {
        for (size_t ell = 0; ell < rep.decomp_by_ell.size(); ++ell)
          std::cout << "decomp ell=" << ell + 1 << ": " << rep.decomp_by_ell[ell]
                    << "\n";
      }
      if (v_check_bll && rep.variant_gap)
        std::cout << "kernel variant deviation: " << *rep.variant_gap << "\n";
      if (!v_report.empty()) {
        std::ofstream out(v_report);
        if (!out) throw DomainError("cannot open " + v_report + " for writing");
        out << reportToJson(rep);
      }
      return reportExitCode(rep, v_cfg);
    }
    if (suite->parsed()) {
      const auto items = runSuite(s_count, s_nmax, s_seed, s_degmax, s_cfg);
      bool any_fail = false, any_flag = false;
      for (size_t k = 0; k < items.size(); ++k) {
        const auto& it = items[k];
        std::cout << "instance " << k + 1 << "/" << items.size() << ": n=" << it.inst.n
                  << " seed=" << it.inst.seed
                  << " rel_rank=" << it.report.rel_diff_rank
                  << " rel_nystrom=" << it.report.rel_diff_nystrom << " "
                  << (it.report.passed ? "PASS" : "FAIL") << "\n";
        const int code = reportExitCode(it.report, s_cfg);
        any_fail |= code == kExitIdentityFailure;
        any_flag |= code == kExitStabilityFlag;
      }
      std::cout << (any_fail || any_flag ? "suite: FAIL" : "suite: PASS") << " ("
                << items.size() << " instances)\n";
      return any_fail ? kExitIdentityFailure
                      : (any_flag ? kExitStabilityFlag : kExitPass);
    }
    if (bench->parsed()) {
      std::cout << "n,build_ms,finite_ms,rank_ms,nystrom_ms,checks_ms,total_ms\n";
      for (int n = 1; n <= b_nmax; ++n) {
        const Instance inst = genRandom(n, 3, 1000 + static_cast<std::uint64_t>(n));
        VerifyConfig cfg;
        cfg.allow_large_n = true;
        const VerificationReport rep = verifyIdentity(inst, cfg);
        double total = 0.0;
        std::cout << n;
        for (const auto& [name, ms] : rep.timings_ms) {
          std::cout << "," << ms;
          total += ms;
        }
        std::cout << "," << total << "\n";
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
