#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace ballspec::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNotSolvable = 3,
  kVerificationFailed = 4,
};

/// Thrown for invalid user input; mapped to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double radius = 1.0;
  int n_max = 4;
  int m_max = 3;
  std::array<int, 3> grid{32, 24, 48};
  std::optional<double> lambda;
  std::optional<double> nu2;
  std::uint64_t seed = 20240917;
  int fd_samples = 200;
  double fd_step = 1e-4;
  std::string format;
  std::string out;
  bool radius_given = false;
};

struct EigsArgs {
  std::string family = "curl";
};

struct SolveArgs {
  std::string field;
  std::string coefficients_out;
  std::optional<double> max_residual;
};

struct VerifyArgs {
  std::string suite = "all";
};

/// Each returns an exit code; output goes to `out`, diagnostics to `log`.
int cmd_eigs(const RunConfig& cfg, const EigsArgs& args, std::ostream& out, std::ostream& log);
int cmd_solve(int problem, const RunConfig& cfg, const SolveArgs& args, std::ostream& out,
              std::ostream& log);
int cmd_decompose(const RunConfig& cfg, const SolveArgs& args, std::ostream& out, std::ostream& log);
int cmd_verify(const RunConfig& cfg, const VerifyArgs& args, std::ostream& out, std::ostream& log);

}  // namespace ballspec::cli
