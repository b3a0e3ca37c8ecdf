#include "ballspec/solver.hpp"

#include <algorithm>
#include <cmath>

#include "ballspec/calculus.hpp"
#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

constexpr ModeFamily kGraddivOnly[] = {ModeFamily::graddiv};

std::vector<SobolevDiagnostics> classes_of(const SpectralCoefficients& c) {
  std::vector<SobolevDiagnostics> out;
  for (auto scale : {SobolevScale::curl_w, SobolevScale::graddiv_a}) {
    for (int k = 0; k <= 2; ++k) out.push_back(sobolev_norm(c, k, scale));
  }
  return out;
}

// Relative coefficient residual of (L + s) u = f: curl modes multiply by
// (s + lambda_j) under Problem 1, graddiv modes by (s - nu_j^2) under Problem 2,
// everything else by s.
double coefficient_residual(const SpectralCoefficients& u, const SpectralCoefficients& f,
                            Problem problem, double s) {
  double num = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const auto& mode = u.basis().mode(j);
    const bool active = problem == Problem::curl ? is_curl(mode.family)
                                                 : mode.family == ModeFamily::graddiv;
    const double factor = active ? s + mode.eigenvalue : s;
    const double r = factor * u[j] - f[j];
    num += r * r;
  }
  const double den = f.norm();
  return den > 0.0 ? std::sqrt(num) / den : std::sqrt(num);
}

Solution solve(const SourceField& f, double s, Problem problem, const SolverContext& ctx,
               const SolveOptions& options) {
  const auto split = helmholtz_decompose(f, ctx);
  const auto& active = problem == Problem::curl ? split.curl : split.graddiv;
  const auto& passive = problem == Problem::curl ? split.graddiv : split.curl;

  Solution sol;
  sol.problem = problem;
  sol.parameter = s;
  sol.source = f.evaluator();
  auto& diag = sol.diagnostics;
  diag.source_norm = std::sqrt(split.energy);
  diag.relative_span_defect = split.energy > 0.0 ? split.span_defect / split.energy : 0.0;

  auto resolved = problem == Problem::curl ? resolvent_curl(active, s)
                                           : resolvent_graddiv(active, s);
  sol.fredholm = resolved.fredholm;
  if (!resolved.solution) {
    sol.solvable = false;
    return sol;
  }
  const SpectralCoefficients u_active = *resolved.solution;
  const SpectralCoefficients u_passive = (1.0 / s) * passive;
  const SpectralCoefficients u = u_active + u_passive;
  const SpectralCoefficients f_all = split.curl + split.graddiv;

  sol.coefficients = u;
  if (f.is_modes()) {
    sol.passthrough = 0.0;
    sol.correction = u;
  } else {
    sol.passthrough = 1.0 / s;
    sol.correction = u_active - (1.0 / s) * active;
  }
  diag.coefficient_residual = coefficient_residual(u, f_all, problem, s);
  diag.source_classes = classes_of(f_all);
  diag.solution_classes = classes_of(u);
  if (options.compute_residual) {
    const double h = options.relative_step * ctx.basis->radius();
    diag.fd_step = h;
    diag.fd_samples = options.residual_samples;
    diag.fd_residual = residual(sol, f.evaluator(), problem, ctx.basis->radius(),
                                options.residual_samples, h, options.seed);
  }
  return sol;
}

}  // namespace

std::string_view to_string(Problem p) { return p == Problem::curl ? "problem1" : "problem2"; }

SourceField SourceField::from_modes(SpectralCoefficients c) {
  SourceField out;
  out.evaluator_ = synthesis_evaluator(c);
  out.modes_ = std::move(c);
  out.label_ = "modes";
  return out;
}

SourceField SourceField::from_evaluator(PointEvaluator f, std::string label) {
  if (!f) throw DomainError("source field: empty evaluator");
  SourceField out;
  out.evaluator_ = std::move(f);
  out.label_ = std::move(label);
  return out;
}

SolverContext make_context(double radius, int n_max, int m_max, int n_r, int n_theta, int n_phi,
                           const ZeroTableSource& zeros) {
  SolverContext ctx;
  ctx.basis = make_basis(kAllFamilies, n_max, m_max, radius, zeros);
  ctx.grid = build_grid(radius, n_r, n_theta, n_phi);
  return ctx;
}

Decomposition helmholtz_decompose(const FieldSamples& f, BasisPtr basis) {
  const auto c = project(f, basis);
  Decomposition out{c.restricted(kGraddivOnly), c.restricted(kCurlFamilies)};
  out.energy = inner_product(f, f);
  out.span_defect = parseval_defect(f, c);
  out.grid_covers_basis = grid_covers_basis(f.grid(), *basis);
  return out;
}

Decomposition helmholtz_decompose(const SourceField& f, const SolverContext& ctx) {
  if (!ctx.basis) throw DomainError("solver: context has no basis");
  if (f.is_modes()) {
    const auto& c = *f.modes();
    if (c.basis_ptr() != ctx.basis) throw MismatchError("solver: source basis differs from context");
    Decomposition out{c.restricted(kGraddivOnly), c.restricted(kCurlFamilies)};
    out.energy = c.norm() * c.norm();
    out.span_defect = 0.0;
    return out;
  }
  if (!ctx.grid) throw DomainError("solver: analytic source needs a grid");
  return helmholtz_decompose(FieldSamples::sample(ctx.grid, f.evaluator()), ctx.basis);
}

PointEvaluator Solution::evaluator() const {
  if (!solvable || !correction) throw ResonanceError("solution: problem is not solvable");
  const double a = passthrough;
  const PointEvaluator f = source;
  const PointEvaluator series = synthesis_evaluator(*correction);
  if (a == 0.0) return series;
  return [a, f, series](const Vec3& x) { return a * f(x) + series(x); };
}

Solution solve_problem1(const SourceField& f, double lambda, const SolverContext& ctx,
                        const SolveOptions& options) {
  if (!std::isfinite(lambda)) throw DomainError("problem 1: lambda must be finite");
  if (lambda == 0.0) {
    throw DomainError("problem 1: lambda = 0 is an eigenvalue of rot of infinite multiplicity");
  }
  return solve(f, lambda, Problem::curl, ctx, options);
}

Solution solve_problem2(const SourceField& f, double nu2, const SolverContext& ctx,
                        const SolveOptions& options) {
  if (!std::isfinite(nu2) || nu2 == 0.0) {
    throw DomainError("problem 2: nu^2 = 0 is an eigenvalue of grad div of infinite multiplicity");
  }
  if (nu2 < 0.0) throw DomainError("problem 2: nu^2 must be positive");
  return solve(f, nu2, Problem::graddiv, ctx, options);
}

double residual(const Solution& solution, const PointEvaluator& f, Problem problem, double radius,
                std::size_t samples, double h, std::uint64_t seed) {
  if (!(h > 0.0) || !(radius > 3.0 * h)) throw DomainError("residual: invalid step");
  const auto u = solution.evaluator();
  const double s = solution.parameter;
  const StencilDomain domain{radius};
  const auto points = seeded_interior_points(radius - 3.0 * h, samples, seed);
  double worst = 0.0;
  double f_inf = 0.0;
  for (const auto& x : points) {
    const Vec3 fx = f(x);
    const Vec3 lu = fd_extrapolated(
        [&](double step) {
          return problem == Problem::curl ? fd_curl(u, x, step, domain)
                                          : fd_graddiv(u, x, step, domain);
        },
        h);
    worst = std::max(worst, max_abs(lu + s * u(x) - fx));
    f_inf = std::max(f_inf, max_abs(fx));
  }
  if (f_inf == 0.0) return worst;
  return worst / ((std::fabs(s) + 1.0) * f_inf);
}

}  // namespace ballspec
