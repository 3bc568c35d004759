#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fglab/error.hpp"
#include "golden.hpp"

#ifndef FGLAB_GOLDEN_DIR
#define FGLAB_GOLDEN_DIR "data/golden"
#endif

namespace {

using fglab::cli::Config;
using fglab::cli::Report;

struct Flags {
  int bound = 12;
  int precision = 64;
  std::string mode = "paper-box";
  std::string nki = "paper";
  std::string format = "text";
  std::string out;
};

Config make_config(const Flags& f) {
  using fglab::cli::UsageError;
  if (f.bound < 2) throw UsageError("--bound must be at least 2");
  if (f.precision < 16) throw UsageError("--precision must be at least 16");
  Config cfg;
  cfg.bound = f.bound;
  cfg.precision = f.precision;
  try {
    cfg.mode = fglab::parse_cpn_mode(f.mode);
    cfg.nki = fglab::parse_nki_mode(f.nki);
  } catch (const fglab::Error& e) {
    throw UsageError(e.what());
  }
  cfg.format = fglab::cli::parse_format(f.format);
  cfg.out = f.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal group laws, Adams operations and 2-adic cannibalistic classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--bound", flags.bound, "Truncation bound for series")->capture_default_str();
  app.add_option("--precision", flags.precision, "2-adic precision in bits")->capture_default_str();
  app.add_option("--mode", flags.mode, "CP^n substitution: paper-box or residue-exact")->capture_default_str();
  app.add_option("--nki", flags.nki, "n_k^i choice: paper or extended-gcd")->capture_default_str();
  app.add_option("--format", flags.format, "text, csv or json")->capture_default_str();
  app.add_option("--out", flags.out, "Write output to a file");

  std::function<Report(const Config&)> action;

  auto* series = app.add_subcommand("series", "Power series utilities")->require_subcommand(1);
  {
    auto* c = series->add_subcommand("inverse", "Coefficients of the compositional inverse");
    static int n = 4;
    static std::string method = "recursive";
    c->add_option("--n", n)->capture_default_str();
    c->add_option("--method", method, "recursive or residue")->capture_default_str();
    c->callback([&] { action = [](const Config& cfg) { return fglab::cli::series_inverse(cfg, n, method); }; });
  }

  auto* fgl = app.add_subcommand("fgl", "Formal group laws")->require_subcommand(1);
  {
    static int n = 4;
    static std::string law = "multiplicative";
    static std::string expr;
    auto* twist = fgl->add_subcommand("twist", "Twisted multiplicative law coefficients");
    twist->add_option("--n", n, "Number of b_i")->capture_default_str();
    twist->callback([&] { action = [](const Config& cfg) { return fglab::cli::fgl_twist_images(cfg, n); }; });
    auto* check = fgl->add_subcommand("check", "Axiom check of the twisted law");
    check->add_option("--n", n)->capture_default_str();
    check->callback([&] { action = [](const Config& cfg) { return fglab::cli::fgl_check_twisted(cfg, n); }; });
    auto* log = fgl->add_subcommand("log", "Logarithm of a law");
    log->add_option("--law", law, "multiplicative or todd")->capture_default_str();
    log->callback([&] { action = [](const Config& cfg) { return fglab::cli::fgl_log_of(cfg, law); }; });
    fgl->add_subcommand("todd", "The Todd law")->callback([&] { action = fglab::cli::fgl_todd; });
    auto* cpn = fgl->add_subcommand("cpn", "[CP^n] in the a_ij");
    cpn->add_option("--n", n)->required();
    cpn->callback([&] { action = [](const Config& cfg) { return fglab::cli::fgl_cpn(cfg, n); }; });
    auto* mis = fgl->add_subcommand("miscenko", "Image of a bordism class under the twisted law");
    mis->add_option("--expr", expr, "e.g. \"1/4*K3SQ + 12*N\"")->required();
    mis->add_option("--n", n)->capture_default_str();
    mis->callback([&] { action = [](const Config& cfg) { return fglab::cli::fgl_miscenko(cfg, expr, n); }; });
  }

  auto* chern = app.add_subcommand("chern", "Chern numbers and SU constraints")->require_subcommand(1);
  {
    static int dim = 4;
    static std::string space, monomial, numbers;
    for (const char* name : {"system", "reduce", "nullspace"}) {
      auto* c = chern->add_subcommand(name);
      c->add_option("--dim", dim)->capture_default_str();
      std::string which = name;
      c->callback([&, which] {
        action = [which](const Config& cfg) {
          if (which == "system") return fglab::cli::chern_system(cfg, dim);
          if (which == "reduce") return fglab::cli::chern_reduce(cfg, dim);
          return fglab::cli::chern_nullspace(cfg, dim);
        };
      });
    }
    auto* num = chern->add_subcommand("number", "A Chern number of a product of projective spaces");
    num->add_option("--space", space, "e.g. CP1xCP3")->required();
    num->add_option("--monomial", monomial, "e.g. c1^2*c2")->required();
    num->callback([&] { action = [](const Config& cfg) { return fglab::cli::chern_number_of(cfg, space, monomial); }; });
    auto* todd = chern->add_subcommand("todd", "T4 from a space or from Chern numbers");
    todd->add_option("--space", space);
    todd->add_option("--numbers", numbers, "c1^4,c1*c3,c1^2*c2,c2^2,c4");
    todd->callback([&] { action = [](const Config& cfg) { return fglab::cli::chern_todd(cfg, space, numbers); }; });
  }

  auto* adams = app.add_subcommand("adams", "Adams operations")->require_subcommand(1);
  {
    static int k = 3, i = 1, n = 10, j = 1, max_k = 6;
    static bool mod2 = false, at_v1 = false;
    auto* beta = adams->add_subcommand("beta", "psi^(1/k) beta_i");
    beta->add_option("--k", k)->capture_default_str();
    beta->add_option("--i", i)->required();
    beta->callback([&] { action = [](const Config& cfg) { return fglab::cli::adams_beta(cfg, k, i); }; });
    auto* matrix = adams->add_subcommand("matrix", "Matrix of psi^(1/k) on beta_0..beta_n");
    matrix->add_option("--k", k)->capture_default_str();
    matrix->add_option("--n", n)->capture_default_str();
    matrix->add_flag("--mod2", mod2);
    matrix->callback([&] { action = [](const Config& cfg) { return fglab::cli::adams_matrix(cfg, k, n, mod2); }; });
    auto* power = adams->add_subcommand("power", "(3x - 3x^2 + x^3)^j");
    power->add_option("--j", j)->required();
    power->callback([&] { action = [](const Config& cfg) { return fglab::cli::adams_power(cfg, j); }; });
    auto* nki = adams->add_subcommand("nki", "Integers n_k^i");
    nki->add_option("--k", k)->required();
    nki->callback([&] { action = [](const Config& cfg) { return fglab::cli::adams_nki(cfg, k); }; });
    auto* rel = adams->add_subcommand("relations", "Relations among the a_ij");
    rel->add_option("--n", n)->capture_default_str();
    rel->add_flag("--v1", at_v1, "Specialize to v = 1");
    rel->callback([&] { action = [](const Config& cfg) { return fglab::cli::adams_relations(cfg, n, at_v1); }; });
    auto* psi = adams->add_subcommand("psi", "psi^(1/3) on d_2..d_k");
    psi->add_option("--max-k", max_k)->capture_default_str();
    psi->add_flag("--mod2", mod2);
    psi->callback([&] { action = [](const Config& cfg) { return fglab::cli::adams_psi(cfg, max_k, mod2); }; });
  }

  auto* cannibal = app.add_subcommand("cannibal", "The class theta^3 and the Thom-level operation")
                       ->require_subcommand(1);
  {
    static int n = 12, max_k = 6, max_weight = 20, target = 8, k = 3;
    static bool mod2 = false;
    static std::string z;
    auto* seq = cannibal->add_subcommand("sequence", "The sequence t_k");
    seq->add_option("--n", n)->capture_default_str();
    seq->callback([&] { action = [](const Config& cfg) { return fglab::cli::cannibal_sequence(cfg, n); }; });
    cannibal->add_subcommand("table", "c_mn up to --bound")->callback([&] { action = fglab::cli::cannibal_table; });
    auto* thom = cannibal->add_subcommand("thom", "Thom-level psi on d_2..d_k");
    thom->add_option("--max-k", max_k)->capture_default_str();
    thom->add_flag("--mod2", mod2);
    thom->callback([&] { action = [](const Config& cfg) { return fglab::cli::cannibal_thom(cfg, max_k, mod2); }; });
    auto* sph = cannibal->add_subcommand("spherical", "Classes fixed by psi mod 2");
    sph->add_option("--max-weight", max_weight)->capture_default_str();
    sph->callback([&] { action = [](const Config& cfg) { return fglab::cli::cannibal_spherical(cfg, max_weight); }; });
    auto* lift = cannibal->add_subcommand("lift", "2-adic lift of a fixed class");
    lift->add_option("--z", z)->required();
    lift->add_option("--target", target)->capture_default_str();
    lift->callback([&] { action = [](const Config& cfg) { return fglab::cli::cannibal_lift(cfg, z, target); }; });
    auto* virt = cannibal->add_subcommand("virtual", "theta^k of the universal virtual class");
    virt->add_option("--k", k)->capture_default_str();
    virt->callback([&] { action = [](const Config& cfg) { return fglab::cli::cannibal_virtual(cfg, k); }; });
  }

  auto* mahler = app.add_subcommand("mahler", "Mahler bases and dilation")->require_subcommand(1);
  {
    static std::string poly, kstr = "3";
    static int n = -1, i = 1, k = 3;
    static long kl = 3;
    auto* ex = mahler->add_subcommand("expand", "Expansion in the binomial basis");
    ex->add_option("--poly", poly, "Polynomial in T")->required();
    ex->add_option("--n", n, "Number of terms (default: degree)");
    ex->callback([&] { action = [](const Config& cfg) { return fglab::cli::mahler_expand_poly(cfg, poly, n); }; });
    auto* dil = mahler->add_subcommand("dilate", "C(kT, i) in the binomial basis");
    dil->add_option("--k", kstr, "Integer or p/q with q odd")->capture_default_str();
    dil->add_option("--i", i)->required();
    dil->callback([&] { action = [](const Config& cfg) { return fglab::cli::mahler_dilate(cfg, kstr, i); }; });
    auto* mat = mahler->add_subcommand("matrix", "Dilation matrix");
    mat->add_option("--k", kl)->capture_default_str();
    mat->add_option("--n", n)->required();
    mat->callback([&] { action = [](const Config& cfg) { return fglab::cli::mahler_matrix(cfg, kl, n); }; });
    auto* chk = mahler->add_subcommand("check", "Dilation against the Adams matrix");
    chk->add_option("--n", n)->required();
    chk->add_option("--k", k)->capture_default_str();
    chk->callback([&] { action = [](const Config& cfg) { return fglab::cli::mahler_check(cfg, n, k); }; });
  }

  {
    static std::string u;
    auto* as = app.add_subcommand("artin-schreier", "b = -log(u)/log(81) and its shift");
    as->add_option("--u", u, "Integer or p/q with q odd, congruent to 1 mod 16")->required();
    as->callback([&] { action = [](const Config& cfg) { return fglab::cli::artin_schreier(cfg, u); }; });
  }

  {
    static std::string dir = FGLAB_GOLDEN_DIR;
    static bool update = false;
    auto* rp = app.add_subcommand("reproduce-paper", "Recompute every golden table and compare");
    rp->add_option("--data", dir, "Directory with index.csv")->capture_default_str();
    rp->add_flag("--update", update, "Rewrite the reproduced column");
    rp->callback([&] { action = [](const Config& cfg) { return fglab::cli::reproduce_tables(cfg, dir, update); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Config cfg = make_config(flags);
    Report report = action(cfg);
    if (cfg.out.empty()) {
      fglab::cli::write_report(std::cout, report, cfg.format);
    } else {
      std::ofstream os(cfg.out);
      if (!os) throw fglab::cli::UsageError("cannot write " + cfg.out);
      fglab::cli::write_report(os, report, cfg.format);
    }
    return report.status;
  } catch (const fglab::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const fglab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
