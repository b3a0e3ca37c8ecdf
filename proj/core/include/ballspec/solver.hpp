#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballspec/ballgrid.hpp"
#include "ballspec/spectral.hpp"

namespace ballspec {

/// Problem 1: rot u + lambda u = f.  Problem 2: grad div w + nu^2 w = f.
/// Both with n.u = 0 on the sphere.
enum class Problem { curl, graddiv };

std::string_view to_string(Problem p);

/// Right-hand side. Mode combinations are solved exactly on their span;
/// analytic fields are projected on the context grid.
class SourceField {
 public:
  static SourceField from_modes(SpectralCoefficients c);
  static SourceField from_evaluator(PointEvaluator f, std::string label);

  bool is_modes() const { return modes_.has_value(); }
  const std::optional<SpectralCoefficients>& modes() const { return modes_; }
  const PointEvaluator& evaluator() const { return evaluator_; }
  const std::string& label() const { return label_; }

 private:
  SourceField() = default;
  std::optional<SpectralCoefficients> modes_;
  PointEvaluator evaluator_;
  std::string label_;
};

/// Basis over all three families plus the quadrature grid used to project
/// analytic sources.
struct SolverContext {
  BasisPtr basis;
  GridPtr grid;
};

SolverContext make_context(double radius, int n_max, int m_max, int n_r, int n_theta, int n_phi,
                           const ZeroTableSource& zeros = {});

/// f = f_A + f_V + remainder.
struct Decomposition {
  SpectralCoefficients graddiv;
  SpectralCoefficients curl;
  /// ||f||^2
  double energy = 0.0;
  /// ||f||^2 - sum c_j^2 (0 for mode combinations).
  double span_defect = 0.0;
  bool grid_covers_basis = true;

  double graddiv_energy() const { return graddiv.norm() * graddiv.norm(); }
  double curl_energy() const { return curl.norm() * curl.norm(); }
};

Decomposition helmholtz_decompose(const FieldSamples& f, BasisPtr basis);
Decomposition helmholtz_decompose(const SourceField& f, const SolverContext& ctx);

struct SolveOptions {
  std::size_t residual_samples = 200;
  /// FD step as a fraction of R.
  double relative_step = 1e-4;
  std::uint64_t seed = 20240917;
  bool compute_residual = true;
};

struct SolutionDiagnostics {
  /// L2 norm of f (coefficients, or quadrature for analytic sources).
  double source_norm = 0.0;
  /// span_defect / ||f||^2 of the source (0 for mode combinations).
  double relative_span_defect = 0.0;
  /// ||(L + s) u - f|| / ||f|| over the resolved coefficients.
  double coefficient_residual = 0.0;
  /// Relative pointwise FD residual; absent when not computed.
  std::optional<double> fd_residual;
  std::size_t fd_samples = 0;
  double fd_step = 0.0;
  /// Orders 0..2 of f and u on the curl (W) and graddiv (A) scales.
  std::vector<SobolevDiagnostics> source_classes;
  std::vector<SobolevDiagnostics> solution_classes;
};

/// u(x) = passthrough * f(x) + sum_j correction_j q_j(x).
struct Solution {
  Problem problem = Problem::curl;
  double parameter = 0.0;
  bool solvable = true;
  std::optional<FredholmReport> fredholm;
  /// Fourier coefficients of u over the context basis.
  std::optional<SpectralCoefficients> coefficients;
  std::optional<SpectralCoefficients> correction;
  double passthrough = 0.0;
  PointEvaluator source;
  SolutionDiagnostics diagnostics;

  /// Evaluator of u; throws ResonanceError when the problem is non-solvable.
  PointEvaluator evaluator() const;
};

/// Throws DomainError for lambda = 0 and MismatchError when a mode source
/// lives on a different basis than the context.
Solution solve_problem1(const SourceField& f, double lambda, const SolverContext& ctx,
                        const SolveOptions& options = {});
/// Throws DomainError for nu2 <= 0.
Solution solve_problem2(const SourceField& f, double nu2, const SolverContext& ctx,
                        const SolveOptions& options = {});

/// max over seeded interior points |L u + s u - f| / ((|s| + 1) ||f||_inf),
/// L by finite differences with one Richardson step (h, h/2), points
/// restricted to |x| <= R - 3h. When f vanishes at every sample point the
/// absolute residual is returned.
double residual(const Solution& solution, const PointEvaluator& f, Problem problem,
                double radius, std::size_t samples, double h, std::uint64_t seed);

}  // namespace ballspec
