// Command-line front end: seeded verification suites plus one-off evaluators
// for kernels, L-factors, functional-equation constants, coordinate
// transforms, and the orthogonal-fixed pairing.
//
// Exit codes: 0 success / all checks pass; 1 verification failures;
// 2 usage or domain error (message on stderr).

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glpair/kernel.hpp"
#include "glpair/matgroup.hpp"
#include "glpair/params.hpp"
#include "glpair/quad.hpp"
#include "glpair/scalars.hpp"
#include "glpair/util.hpp"
#include "glpair/verify.hpp"

namespace {

using cplx = std::complex<double>;
using glpair::matgroup::Mat;
using glpair::params::PairParams;
using glpair::params::SpectralParams;
namespace util = glpair::util;
namespace scalars = glpair::scalars;
namespace verify = glpair::verify;

std::vector<scalars::Parity> to_bits(const std::vector<int>& v, const char* what) {
  std::vector<scalars::Parity> out;
  out.reserve(v.size());
  for (int b : v) {
    if (b != 0 && b != 1)
      throw std::invalid_argument(std::string(what) + ": entries must be 0 or 1");
    out.push_back(static_cast<scalars::Parity>(b));
  }
  return out;
}

PairParams make_pair_params(int n, const std::string& lambda, const std::string& nu,
                            const std::string& xi, const std::string& eta) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  PairParams p;
  p.lambda = util::parse_complex_list(lambda);
  p.nu = util::parse_complex_list(nu);
  p.xi = to_bits(util::parse_int_list(xi), "--xi");
  p.eta = to_bits(util::parse_int_list(eta), "--eta");
  if (static_cast<int>(p.lambda.size()) != n + 1)
    throw std::invalid_argument("--lambda must list n+1 complex numbers");
  if (static_cast<int>(p.nu.size()) != n)
    throw std::invalid_argument("--nu must list n complex numbers");
  if (static_cast<int>(p.xi.size()) != n + 1)
    throw std::invalid_argument("--xi must list n+1 bits");
  if (static_cast<int>(p.eta.size()) != n) throw std::invalid_argument("--eta must list n bits");
  return p;
}

std::string join_complex(const std::vector<cplx>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += util::format_complex(v[k]);
  }
  return s;
}

std::string join_bits(const std::vector<scalars::Parity>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(static_cast<int>(v[k]));
  }
  return s;
}

/// Largest rank a suite supports (the jet-based and nested-quadrature suites
/// are capped; everything else runs at any rank).
int max_rank(const std::string& suite) {
  if (suite == "spherical") return 2;
  if (suite == "bs-identities" || suite == "ftilde" || suite == "ks-composition") return 3;
  return 1 << 20;
}

int run_verify(const std::string& suite, int n, int trials, std::uint64_t seed,
               double tol, const std::string& report_path, const std::string& format) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = verify::suite_names();
  } else {
    const std::string canon = verify::canonical_suite_name(suite);
    if (canon.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    suites = {canon};
  }
  std::vector<verify::SuiteReport> reports;
  bool all_pass = true;
  for (const std::string& s : suites) {
    const int n_eff = std::min(n, max_rank(s));
    verify::SuiteConfig cfg = verify::default_config(s, n_eff);
    if (trials > 0) cfg.trials = trials;
    if (tol > 0.0) cfg.tol = tol;
    cfg.seed = seed;
    const verify::SuiteReport rep = verify::run_suite(cfg);
    all_pass = all_pass && rep.pass();
    std::printf("%-34s n=%d trials=%d seed=%llu tol=%s %s max_rel_err=%s runtime=%lldms\n",
                rep.suite.c_str(), rep.n, rep.trials,
                static_cast<unsigned long long>(rep.seed),
                util::format_real(rep.tol).c_str(), rep.pass() ? "PASS" : "FAIL",
                util::format_real(rep.max_rel_err).c_str(),
                static_cast<long long>(rep.runtime_ms));
    for (const auto& f : rep.failures)
      std::printf("  trial %d rel_err=%s lhs=%s rhs=%s\n    inputs: %s\n", f.trial,
                  util::format_real(f.rel_err).c_str(),
                  util::format_complex(f.lhs).c_str(),
                  util::format_complex(f.rhs).c_str(), f.inputs.c_str());
    reports.push_back(rep);
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot open report file '" + report_path + "'");
    if (format == "md") {
      for (const auto& rep : reports) out << rep.to_markdown() << "\n";
    } else {
      if (reports.size() == 1) {
        out << reports[0].to_json().dump(2) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(rep.to_json());
        out << arr.dump(2) << "\n";
      }
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minor-kernel calculus on GL(n+1)/GL(n) pairs: evaluators and "
               "seeded verification suites"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "run a named suite (or all)");
  std::string v_suite = "all";
  int v_n = 2;
  int v_trials = 0;      // 0: per-suite default
  std::uint64_t v_seed = 1;
  double v_tol = 0.0;    // 0: per-suite default
  std::string v_report, v_format = "json";
  cmd_verify->add_option("--suite", v_suite, "suite name or 'all'");
  cmd_verify->add_option("--n", v_n, "rank of the smaller group")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--trials", v_trials, "number of sampled trials");
  cmd_verify->add_option("--seed", v_seed, "seed; reports are reproducible bit-for-bit");
  cmd_verify->add_option("--tol", v_tol, "relative tolerance for the suite's main checks");
  cmd_verify->add_option("--report", v_report, "write the structured report to this path");
  cmd_verify->add_option("--format", v_format, "report format")
      ->check(CLI::IsMember({"json", "md"}));

  // ---- eval kernel / lfactor / constant ----
  auto* cmd_eval = app.add_subcommand("eval", "evaluate one object");
  cmd_eval->require_subcommand(1);

  auto* cmd_kernel = cmd_eval->add_subcommand("kernel", "kernel value at a matrix");
  int k_n = 1;
  std::string k_g, k_lambda, k_nu, k_xi, k_eta, k_norm = "none";
  cmd_kernel->add_option("--n", k_n, "rank")->required();
  cmd_kernel->add_option("--g", k_g, "matrix entries, row-major csv");
  cmd_kernel->add_option("--lambda", k_lambda, "n+1 complex values a+bi, csv")->required();
  cmd_kernel->add_option("--nu", k_nu, "n complex values, csv")->required();
  cmd_kernel->add_option("--xi", k_xi, "n+1 parity bits, csv")->required();
  cmd_kernel->add_option("--eta", k_eta, "n parity bits, csv")->required();
  cmd_kernel->add_option("--normalized", k_norm, "normalization to divide out")
      ->check(CLI::IsMember({"none", "bb", "bf"}));

  auto* cmd_lfactor = cmd_eval->add_subcommand("lfactor", "archimedean L-factor");
  std::string lf_s = "1", lf_mu = "0";
  int lf_eps = 0;
  cmd_lfactor->add_option("--s", lf_s, "argument, complex a+bi")->required();
  cmd_lfactor->add_option("--mu", lf_mu, "character exponent, complex")->required();
  cmd_lfactor->add_option("--eps", lf_eps, "character parity bit")
      ->required()
      ->check(CLI::Range(0, 1));

  auto* cmd_constant = cmd_eval->add_subcommand("constant", "functional-equation constant");
  std::string c_kind;
  int c_i = 1, c_n = 1;
  std::string c_lambda, c_nu, c_xi, c_eta;
  cmd_constant->add_option("--kind", c_kind, "c|d|ctilde|bplus|bminus")
      ->required()
      ->check(CLI::IsMember({"c", "d", "ctilde", "bplus", "bminus"}));
  cmd_constant->add_option("--i", c_i, "step or chain index")->required();
  cmd_constant->add_option("--n", c_n, "rank")->required();
  cmd_constant->add_option("--lambda", c_lambda)->required();
  cmd_constant->add_option("--nu", c_nu)->required();
  cmd_constant->add_option("--xi", c_xi)->required();
  cmd_constant->add_option("--eta", c_eta)->required();

  // ---- transform ----
  auto* cmd_transform =
      app.add_subcommand("transform", "convert between parameter coordinates");
  std::string t_dir;
  int t_n = 1;
  std::string t_lambda, t_nu, t_xi, t_eta, t_s, t_t, t_delta, t_eps;
  cmd_transform->add_option("--direction", t_dir, "ps2spec or spec2ps")
      ->required()
      ->check(CLI::IsMember({"ps2spec", "spec2ps"}));
  cmd_transform->add_option("--n", t_n, "rank")->required();
  cmd_transform->add_option("--lambda", t_lambda);
  cmd_transform->add_option("--nu", t_nu);
  cmd_transform->add_option("--xi", t_xi);
  cmd_transform->add_option("--eta", t_eta);
  cmd_transform->add_option("--s", t_s);
  cmd_transform->add_option("--t", t_t);
  cmd_transform->add_option("--delta", t_delta);
  cmd_transform->add_option("--eps", t_eps);

  // ---- spherical ----
  auto* cmd_spherical =
      app.add_subcommand("spherical", "orthogonal-fixed pairing value");
  int s_n = 1;
  std::string s_lambda, s_nu;
  double s_tol = 3e-5;
  cmd_spherical->add_option("--n", s_n, "rank, 1 or 2")->required();
  cmd_spherical->add_option("--lambda", s_lambda)->required();
  cmd_spherical->add_option("--nu", s_nu)->required();
  cmd_spherical->add_option("--tol", s_tol, "quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_verify->parsed())
      return run_verify(v_suite, v_n, v_trials, v_seed, v_tol, v_report, v_format);

    if (cmd_kernel->parsed()) {
      const PairParams p = make_pair_params(k_n, k_lambda, k_nu, k_xi, k_eta);
      const int m = k_n + 1;
      Mat<double> g(m, m);
      if (k_g.empty()) {
        g = glpair::matgroup::base_point<double>(m);
      } else {
        std::size_t idx = 0;
        for (const cplx& z : util::parse_complex_list(k_g)) {
          if (z.imag() != 0.0)
            throw std::invalid_argument("--g entries must be real");
          if (idx >= g.a.size()) throw std::invalid_argument("--g: too many entries");
          g.a[idx++] = z.real();
        }
        if (idx != g.a.size())
          throw std::invalid_argument("--g must list (n+1)^2 entries row-major");
      }
      const auto norm = k_norm == "none" ? glpair::kernel::Normalization::none
                        : k_norm == "bb" ? glpair::kernel::Normalization::bb
                                         : glpair::kernel::Normalization::bf;
      const glpair::kernel::KernelValue kv = glpair::kernel::eval_kernel(p, g, norm);
      std::printf("%s\n", util::format_complex(kv.value).c_str());
      if (kv.normalizer_pole)
        std::fprintf(stderr, "note: normalizer pole; value is the exact-zero limit\n");
      return 0;
    }

    if (cmd_lfactor->parsed()) {
      const scalars::RealCharacter chi{static_cast<scalars::Parity>(lf_eps),
                                       util::parse_complex(lf_mu)};
      const cplx s = util::parse_complex(lf_s);
      if (scalars::l_factor_is_pole(s, chi)) {
        std::fprintf(stderr, "error: L-factor pole at this argument\n");
        return 2;
      }
      std::printf("%s\n", util::format_complex(scalars::l_factor(s, chi)).c_str());
      return 0;
    }

    if (cmd_constant->parsed()) {
      const PairParams p = make_pair_params(c_n, c_lambda, c_nu, c_xi, c_eta);
      glpair::kernel::ConstantValue cv;
      if (c_kind == "c")
        cv = glpair::kernel::functional_constant_c(p, c_i);
      else if (c_kind == "d")
        cv = glpair::kernel::functional_constant_d(p, c_i);
      else if (c_kind == "ctilde")
        cv = glpair::kernel::functional_constant_ctilde(p, c_i);
      else
        cv = glpair::kernel::functional_constant_b(p, c_i, c_kind == "bplus");
      if (cv.pole) {
        std::fprintf(stderr, "error: constant has a pole at these parameters\n");
        return 2;
      }
      std::printf("%s\n", util::format_complex(cv.value).c_str());
      return 0;
    }

    if (cmd_transform->parsed()) {
      if (t_dir == "ps2spec") {
        if (t_lambda.empty() || t_nu.empty() || t_xi.empty() || t_eta.empty())
          throw std::invalid_argument(
              "ps2spec requires --lambda --nu --xi --eta");
        const PairParams p = make_pair_params(t_n, t_lambda, t_nu, t_xi, t_eta);
        const SpectralParams sp = glpair::params::to_spectral(p);
        std::printf("s=%s\nt=%s\ndelta=%s\neps=%s\n", join_complex(sp.s).c_str(),
                    join_complex(sp.t).c_str(), join_bits(sp.delta).c_str(),
                    join_bits(sp.eps).c_str());
      } else {
        if (t_s.empty() || t_t.empty() || t_delta.empty() || t_eps.empty())
          throw std::invalid_argument("spec2ps requires --s --t --delta --eps");
        SpectralParams sp;
        sp.s = util::parse_complex_list(t_s);
        sp.t = util::parse_complex_list(t_t);
        sp.delta = to_bits(util::parse_int_list(t_delta), "--delta");
        sp.eps = to_bits(util::parse_int_list(t_eps), "--eps");
        if (static_cast<int>(sp.s.size()) != t_n + 1 ||
            static_cast<int>(sp.t.size()) != t_n ||
            static_cast<int>(sp.delta.size()) != t_n + 1 ||
            static_cast<int>(sp.eps.size()) != t_n)
          throw std::invalid_argument(
              "spec2ps sizes: --s/--delta need n+1 entries, --t/--eps need n");
        const PairParams p = glpair::params::from_spectral(sp);
        std::printf("lambda=%s\nnu=%s\nxi=%s\neta=%s\n", join_complex(p.lambda).c_str(),
                    join_complex(p.nu).c_str(), join_bits(p.xi).c_str(),
                    join_bits(p.eta).c_str());
      }
      return 0;
    }

    if (cmd_spherical->parsed()) {
      const std::vector<cplx> lambda = util::parse_complex_list(s_lambda);
      const std::vector<cplx> nu = util::parse_complex_list(s_nu);
      const glpair::quad::QuadResult r =
          glpair::quad::spherical_pairing(s_n, lambda, nu, s_tol);
      std::printf("%s\n", util::format_complex(r.value).c_str());
      if (!r.converged)
        std::fprintf(stderr,
                     "note: refinement estimate above tolerance; compare runs at two "
                     "tolerances to bound the error\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
