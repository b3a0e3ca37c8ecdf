#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ballspec/errors.hpp"
#include "ballspec/iofmt.hpp"
#include "commands.hpp"

namespace {

using namespace ballspec::cli;

struct Common {
  RunConfig cfg;
  std::string config_path;
  std::vector<int> grid;
  std::vector<CLI::Option*> radius;
};

void add_common(CLI::App* sub, Common& c) {
  c.radius.push_back(sub->add_option("--radius", c.cfg.radius, "Ball radius R"));
  sub->add_option("--n-max", c.cfg.n_max, "Largest angular degree n");
  sub->add_option("--m-max", c.cfg.m_max, "Largest radial index m");
  sub->add_option("--grid", c.grid, "Quadrature counts N_r N_theta N_phi")->expected(3);
  sub->add_option("--seed", c.cfg.seed, "Seed for sampled checks");
  sub->add_option("--fd-samples", c.cfg.fd_samples, "Interior points for FD residuals");
  sub->add_option("--fd-step", c.cfg.fd_step, "FD step as a fraction of R");
  sub->add_option("--format", c.cfg.format, "Output format: csv, json, text or vtk");
  sub->add_option("--out", c.cfg.out, "Output path (default stdout)");
  sub->add_option("--config", c.config_path, "YAML run configuration; its values override flags");
}

// Config-file values take precedence over command-line flags.
void finalize(Common& c) {
  if (!c.grid.empty()) c.cfg.grid = {c.grid[0], c.grid[1], c.grid[2]};
  for (auto* opt : c.radius) c.cfg.radius_given = c.cfg.radius_given || opt->count() > 0;
  if (c.config_path.empty()) return;
  const auto f = ballspec::read_run_config_file(c.config_path);
  auto& cfg = c.cfg;
  if (f.radius) {
    cfg.radius = *f.radius;
    cfg.radius_given = true;
  }
  if (f.n_max) cfg.n_max = *f.n_max;
  if (f.m_max) cfg.m_max = *f.m_max;
  if (f.grid) cfg.grid = *f.grid;
  if (f.lambda) cfg.lambda = *f.lambda;
  if (f.nu2) cfg.nu2 = *f.nu2;
  if (f.seed) cfg.seed = *f.seed;
  if (f.fd_samples) cfg.fd_samples = *f.fd_samples;
  if (f.fd_step) cfg.fd_step = *f.fd_step;
  if (f.format) cfg.format = *f.format;
  if (f.out) cfg.out = *f.out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for rot and grad div in a ball"};
  app.require_subcommand(1);

  Common common;
  EigsArgs eigs;
  SolveArgs solve;
  VerifyArgs verify;
  double lambda = 0.0;
  double nu2 = 0.0;

  auto* eigs_cmd = app.add_subcommand("eigs", "Eigenvalue tables with multiplicities");
  add_common(eigs_cmd, common);
  eigs_cmd->add_option("--family", eigs.family, "curl, curl_plus, curl_minus or graddiv");

  auto* solve1_cmd = app.add_subcommand("solve1", "Solve rot u + lambda u = f");
  add_common(solve1_cmd, common);
  auto* lambda_opt = solve1_cmd->add_option("--lambda", lambda, "Spectral parameter lambda");

  auto* solve2_cmd = app.add_subcommand("solve2", "Solve grad div w + nu^2 w = f");
  add_common(solve2_cmd, common);
  auto* nu2_opt = solve2_cmd->add_option("--nu2", nu2, "Spectral parameter nu^2");

  auto* decompose_cmd = app.add_subcommand("decompose", "Helmholtz-Weyl split of a field");
  add_common(decompose_cmd, common);

  for (auto* sub : {solve1_cmd, solve2_cmd, decompose_cmd}) {
    sub->add_option("--field", solve.field, "Field spec (YAML)")->required();
    sub->add_option("--coefficients", solve.coefficients_out, "Write coefficients (JSON) here");
  }
  for (auto* sub : {solve1_cmd, solve2_cmd}) {
    sub->add_option("--max-residual", solve.max_residual, "Exit 4 when the FD residual exceeds this");
  }

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--suite", verify.suite,
                         "all, specfun, harmonics, grid, eigen, ortho, parseval, solver, identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (lambda_opt->count() > 0) common.cfg.lambda = lambda;
    if (nu2_opt->count() > 0) common.cfg.nu2 = nu2;
    finalize(common);

    std::ostringstream buffer;
    int code = kOk;
    if (eigs_cmd->parsed()) code = cmd_eigs(common.cfg, eigs, buffer, std::cerr);
    if (solve1_cmd->parsed()) code = cmd_solve(1, common.cfg, solve, buffer, std::cerr);
    if (solve2_cmd->parsed()) code = cmd_solve(2, common.cfg, solve, buffer, std::cerr);
    if (decompose_cmd->parsed()) code = cmd_decompose(common.cfg, solve, buffer, std::cerr);
    if (verify_cmd->parsed()) code = cmd_verify(common.cfg, verify, buffer, std::cerr);

    if (common.cfg.out.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(common.cfg.out, std::ios::binary | std::ios::trunc);
      if (!file) throw ConfigError("cannot write " + common.cfg.out);
      file << buffer.str();
    }
    return code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ballspec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ballspec::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ballspec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ballspec::MismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ballspec::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kConfigError;
}
