// Command-line front end: single-point checks, CSV grid sweeps, tables.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "neoclassical/errors.hpp"
#include "neoclassical/identities.hpp"
#include "neoclassical/special_functions.hpp"
#include "neoclassical/sweep.hpp"

namespace nc = neoclassical;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

struct GridFlags {
  std::string alpha = "0.5";
  std::string n = "1";
  std::string lambda = "1";
  double gamma = 0.0;
  double tol = 1e-8;
  std::string mode = "neo3";
  std::string function = "binomial";
  std::string out = "-";
  unsigned parallel = 1;
};

void add_grid_flags(CLI::App* cmd, GridFlags& g, bool with_mode) {
  cmd->add_option("--alpha", g.alpha, "alpha values: list 'a,b' or range 'start:stop:step'");
  cmd->add_option("--n", g.n, "n values (positive integers)");
  cmd->add_option("--tol", g.tol, "relative tolerance");
  cmd->add_option("--out", g.out, "CSV path, '-' for stdout");
  cmd->add_option("--parallel", g.parallel, "worker threads (0 = hardware concurrency)");
  if (with_mode) {
    cmd->add_option("--lambda", g.lambda, "lambda values in (0, 1]");
    cmd->add_option("--gamma", g.gamma, "offset for the taylor_t*A modes");
    cmd->add_option("--mode", g.mode,
                    "neo3 neo3A osler taylor_t1 taylor_t2 taylor_t3 taylor_t1A taylor_t2A "
                    "taylor_t3A inequality r_scan");
    cmd->add_option("--function", g.function, "taylor modes: binomial ((1+z)^n) or exp");
  }
}

nc::SweepGrid make_grid(const GridFlags& g) {
  nc::SweepGrid grid;
  grid.alpha_values = nc::parse_real_list(g.alpha);
  grid.n_values = nc::parse_int_list(g.n);
  grid.lambda_values = nc::parse_real_list(g.lambda);
  grid.gamma = g.gamma;
  grid.tol = g.tol;
  grid.mode = nc::parse_mode(g.mode);
  grid.function = nc::parse_function(g.function);
  grid.validate();
  return grid;
}

int run_grid(const GridFlags& g) {
  const nc::SweepGrid grid = make_grid(g);
  const unsigned threads = g.parallel == 0 ? std::thread::hardware_concurrency() : g.parallel;
  const nc::SweepSummary s = nc::run_sweep(grid, g.out, threads);
  std::fprintf(stderr, "%zu rows, %zu passed, %zu failed, worst rel_err %.3g\n", s.total,
               s.passed, s.failed, s.worst_rel_err);
  return s.failed == 0 ? 0 : kExitFailed;
}

int run_verify(const GridFlags& g) {
  const nc::SweepMode mode = nc::parse_mode(g.mode);
  const auto alphas = nc::parse_real_list(g.alpha);
  const auto ns = nc::parse_int_list(g.n);
  const auto lambdas = nc::parse_real_list(g.lambda);
  if (alphas.size() != 1 || ns.size() != 1 || lambdas.size() != 1) {
    throw nc::PreconditionError("verify takes a single alpha, n and lambda");
  }
  nc::SweepGrid grid{alphas, ns, lambdas, g.gamma, g.tol, mode, nc::parse_function(g.function)};
  grid.validate();
  const nc::SweepRow r = nc::evaluate_point(mode, alphas[0], ns[0], lambdas[0], g.gamma, g.tol,
                                            grid.function);
  std::printf("mode        %s\n", nc::to_string(r.mode));
  std::printf("alpha       %.17g\n", r.alpha);
  std::printf("n           %d\n", r.n);
  std::printf("lambda      %.17g\n", r.lambda);
  std::printf("gamma       %.17g\n", r.gamma);
  std::printf("lhs         %.17g\n", r.lhs);
  std::printf("rhs         %.17g\n", r.rhs);
  std::printf("residual_R  %.17g\n", r.residual_R);
  std::printf("abs_err     %.3e\n", r.abs_err);
  std::printf("rel_err     %.3e\n", r.rel_err);
  std::printf("tol         %.3e\n", r.tol);
  for (const auto& [key, value] : r.pieces) std::printf("  %-22s %.17g\n", key.c_str(), value);
  std::printf("status      %s\n", r.status.c_str());
  return r.passed ? 0 : kExitFailed;
}

int run_binom(const std::string& alpha_text, int n, int extra, const std::optional<double>& w,
              const std::optional<double>& z) {
  if (w || z) {
    if (!w || !z) throw nc::PreconditionError("binom needs both --w and --z");
    std::printf("%.17g\n", nc::gen_binom(*w, *z));
    return 0;
  }
  const auto alphas = nc::parse_real_list(alpha_text);
  if (n < 1 || extra < 0) throw nc::PreconditionError("binom needs n >= 1 and extra >= 0");
  std::printf("alpha,n,j,w,z,binom\n");
  for (double a : alphas) {
    if (!(a > 0.0)) throw nc::PreconditionError("alpha must be positive");
    for (int j = -extra; j <= n + extra; ++j) {
      const double w_val = a * n;
      const double z_val = a * j;
      std::printf("%.17g,%d,%d,%.17g,%.17g,%.17g\n", a, n, j, w_val, z_val,
                  nc::gen_binom(w_val, z_val));
    }
  }
  return 0;
}

int run_kalpha(double alpha) {
  const nc::RootSetKAlpha set = nc::roots_k_alpha(alpha);
  std::printf("k,angle,re,im\n");
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::printf("%d,%.17g,%.17g,%.17g\n", set.k[i], set.angles[i], set.roots[i].real(),
                set.roots[i].imag());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for the neo-classical inequality and fractional Taylor identities"};
  app.require_subcommand(1);

  GridFlags verify_flags;
  verify_flags.tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "check one point and print a report");
  add_grid_flags(verify, verify_flags, true);

  GridFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "check a grid and write CSV");
  add_grid_flags(sweep, sweep_flags, true);

  GridFlags osler_flags;
  osler_flags.tol = 1e-6;
  auto* osler = app.add_subcommand("osler", "bilateral binomial sums against 2^(alpha n)");
  add_grid_flags(osler, osler_flags, false);

  std::string binom_alpha = "0.5";
  int binom_n = 2;
  int binom_extra = 3;
  std::optional<double> binom_w;
  std::optional<double> binom_z;
  auto* binom = app.add_subcommand("binom", "table of binom(alpha n, alpha j)");
  binom->add_option("--alpha", binom_alpha, "alpha values");
  binom->add_option("--n", binom_n, "n");
  binom->add_option("--extra", binom_extra, "j runs from -extra to n + extra");
  binom->add_option("--w", binom_w, "single value: upper argument");
  binom->add_option("--z", binom_z, "single value: lower argument");

  double kalpha_alpha = 2.5;
  auto* kalpha = app.add_subcommand("kalpha", "list K_alpha, the principal roots of w^alpha = 1");
  kalpha->add_option("--alpha", kalpha_alpha, "alpha > 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*verify) return run_verify(verify_flags);
    if (*sweep) return run_grid(sweep_flags);
    if (*osler) {
      osler_flags.mode = "osler";
      return run_grid(osler_flags);
    }
    if (*binom) return run_binom(binom_alpha, binom_n, binom_extra, binom_w, binom_z);
    if (*kalpha) return run_kalpha(kalpha_alpha);
  } catch (const std::logic_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
