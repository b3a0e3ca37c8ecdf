#include "ballspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "ballspec/ballgrid.hpp"
#include "ballspec/calculus.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/harmonics.hpp"
#include "ballspec/presets.hpp"
#include "ballspec/solver.hpp"
#include "ballspec/spectral.hpp"
#include "ballspec/specfun.hpp"

namespace ballspec {
namespace {

using std::numbers::pi;

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  // Passes when value <= tolerance.
  void at_most(std::string name, double value, double tolerance, std::string detail = {}) {
    report_.checks.push_back(
        {suite_, std::move(name), value <= tolerance, value, tolerance, std::move(detail)});
  }
  // Passes when value >= tolerance.
  void at_least(std::string name, double value, double tolerance, std::string detail = {}) {
    report_.checks.push_back(
        {suite_, std::move(name), value >= tolerance, value, tolerance, std::move(detail)});
  }
  void holds(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({suite_, std::move(name), ok, ok ? 1.0 : 0.0, 1.0, std::move(detail)});
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()() { return 2.0 * static_cast<double>(rng_() >> 11) * 0x1.0p-53 - 1.0; }

 private:
  std::mt19937_64 rng_;
};

// Context shared by the grid-dependent suites, built on first use.
struct Workspace {
  const VerifyConfig& config;
  BasisPtr basis;
  GridPtr grid;

  const BasisPtr& full_basis() {
    if (!basis) basis = make_basis(kAllFamilies, config.n_max, config.m_max, config.radius, config.zeros);
    return basis;
  }
  const GridPtr& quad_grid() {
    if (!grid) grid = build_grid(config.radius, config.grid[0], config.grid[1], config.grid[2]);
    return grid;
  }
};

SpectralCoefficients random_coefficients(const BasisPtr& basis, Uniform& u,
                                         std::span<const ModeFamily> families) {
  SpectralCoefficients c(basis);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto f = basis->mode(j).family;
    if (std::find(families.begin(), families.end(), f) != families.end()) c[j] = u();
  }
  return c;
}

void suite_specfun(Recorder& rec) {
  constexpr int kN = 8;
  constexpr int kM = 8;
  for (auto family : {ZeroFamily::curl, ZeroFamily::graddiv}) {
    const auto table = build_zero_table(family, kN, kM, 1.0);
    double worst = 0.0;
    for (const auto& e : table.entries) worst = std::max(worst, e.residual);
    rec.at_most(fmt::format("{}_zero_residual", to_string(family)), worst, kZeroResidualBound,
                "max |f(zero)| over n<=8, m<=8");
  }

  const auto rho0 = psi_zeros(0, kM);
  double d = 0.0;
  for (int m = 1; m <= kM; ++m) d = std::max(d, std::fabs(rho0[m - 1] - m * pi));
  rec.at_most("psi0_zeros_are_multiples_of_pi", d, 1e-13);

  const auto alpha0 = graddiv_zeros(0, kM);
  const auto rho1 = curl_zeros(1, kM);
  d = 0.0;
  for (int m = 0; m < kM; ++m) d = std::max(d, std::fabs(alpha0[m] - rho1[m]));
  rec.at_most("alpha0_equals_rho1", d, 1e-13);

  bool interlaced = true;
  for (int n = 1; n <= kN; ++n) {
    const auto lo = psi_zeros(n - 1, kM + 1);
    const auto hi = psi_zeros(n, kM);
    for (int m = 0; m < kM; ++m) interlaced = interlaced && lo[m] < hi[m] && hi[m] < lo[m + 1];
  }
  rec.holds("curl_zeros_interlace", interlaced);

  // Closed forms of psi_1 and psi_2.
  double rel = 0.0;
  for (double z = 3.0; z <= 60.0; z += 0.37) {
    const double s = std::sin(z);
    const double c = std::cos(z);
    const double p1 = s / (z * z) - c / z;
    const double p2 = (3.0 / (z * z) - 1.0) * s / z - 3.0 * c / (z * z);
    rel = std::max(rel, std::fabs(psi(1, z) - p1) / std::max(std::fabs(p1), 1e-3));
    rel = std::max(rel, std::fabs(psi(2, z) - p2) / std::max(std::fabs(p2), 1e-3));
  }
  rec.at_most("psi_closed_forms", rel, 1e-13);
}

void suite_harmonics(Recorder& rec, std::uint64_t seed) {
  Uniform u(seed);
  double add = 0.0;
  double grad = 0.0;
  for (int s = 0; s < 25; ++s) {
    const double theta = 0.5 * pi * (u() + 1.0) * 0.98 + 0.01;
    const double phi = pi * (u() + 1.0) * 0.999;
    for (int n = 0; n <= 12; ++n) {
      double sum = 0.0;
      double gsum = 0.0;
      for (int k = -n; k <= n; ++k) {
        const double y = real_sph_harm({n, k}, theta, phi);
        const auto g = sph_harm_surface_grad({n, k}, theta, phi);
        sum += y * y;
        gsum += g.e_theta * g.e_theta + g.e_phi * g.e_phi;
      }
      const double expect = (2.0 * n + 1.0) / (4.0 * pi);
      add = std::max(add, std::fabs(sum - expect) / expect);
      if (n > 0) grad = std::max(grad, std::fabs(gsum - n * (n + 1.0) * expect) / (n * (n + 1.0) * expect));
    }
  }
  rec.at_most("addition_theorem", add, 1e-12, "n <= 12, 25 seeded directions");
  rec.at_most("surface_gradient_sum_rule", grad, 1e-12);

  const auto grid = build_grid(1.0, 4, 16, 32);
  double gram = 0.0;
  for (int a = 0; a <= 6 * 7; ++a) {
    for (int b = a; b < 49; ++b) {
      const int na = static_cast<int>(std::sqrt(a));
      const int nb = static_cast<int>(std::sqrt(b));
      const AngularIndex ia{na, a - na * na - na};
      const AngularIndex ib{nb, b - nb * nb - nb};
      double sum = 0.0;
      const auto ct = grid->cos_theta_nodes();
      const auto wt = grid->cos_theta_weights();
      const auto ph = grid->phi_nodes();
      for (std::size_t i = 0; i < ct.size(); ++i) {
        const double theta = std::acos(ct[i]);
        for (double p : ph) {
          sum += wt[i] * (2.0 * pi / static_cast<double>(ph.size())) * real_sph_harm(ia, theta, p) *
                 real_sph_harm(ib, theta, p);
        }
      }
      gram = std::max(gram, std::fabs(sum - (a == b ? 1.0 : 0.0)));
    }
  }
  rec.at_most("sphere_orthonormality", gram, 1e-13, "n <= 6");
}

void suite_grid(Recorder& rec, Workspace& ws) {
  const auto& grid = *ws.quad_grid();
  const double r = ws.config.radius;
  const double vol = integrate(grid, [](const Vec3&) { return 1.0; });
  rec.at_most("volume", std::fabs(vol - 4.0 * pi * r * r * r / 3.0) / (4.0 * pi * r * r * r / 3.0),
              1e-13);
  const double x2 = integrate(grid, [](const Vec3& x) { return x.x * x.x; });
  const double x2_exact = 4.0 * pi * std::pow(r, 5) / 15.0;
  rec.at_most("second_moment", std::fabs(x2 - x2_exact) / x2_exact, 1e-13);
  const double x4y2 = integrate(grid, [](const Vec3& x) { return std::pow(x.x, 4) * x.y * x.y; });
  const double x4y2_exact = 4.0 * pi * std::pow(r, 9) / 315.0;
  rec.at_most("sixth_moment", std::fabs(x4y2 - x4y2_exact) / x4y2_exact, 1e-12);
  rec.at_least("angular_exactness", grid.angular_exactness(), 2.0 * ws.config.n_max,
               "must cover 2 n_max");
}

void suite_eigen(Recorder& rec, Workspace& ws) {
  const auto& basis = *ws.full_basis();
  const double r = basis.radius();
  const double h = ws.config.fd_step * r;
  const StencilDomain domain{r};
  const auto points = seeded_interior_points(r - 3.0 * h, ws.config.fd_samples, ws.config.seed);

  double curl_rel = 0.0, graddiv_rel = 0.0, div_rel = 0.0, rot_rel = 0.0;
  std::string curl_at, graddiv_at;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& mode = basis.mode(i);
    const PointEvaluator q = [&basis, i](const Vec3& x) { return basis.evaluate(i, x); };
    double q_inf = 0.0, rel_err = 0.0, cross_err = 0.0;
    for (const auto& x : points) {
      const Vec3 qx = q(x);
      q_inf = std::max(q_inf, max_abs(qx));
      if (is_curl(mode.family)) {
        rel_err = std::max(rel_err, max_abs(fd_curl(q, x, h, domain) - mode.eigenvalue * qx));
        cross_err = std::max(cross_err, std::fabs(fd_div(q, x, h, domain)));
      } else {
        rel_err = std::max(rel_err, max_abs(fd_graddiv(q, x, h, domain) - mode.eigenvalue * qx));
        cross_err = std::max(cross_err, max_abs(fd_curl(q, x, h, domain)));
      }
    }
    const double scale = std::fabs(mode.eigenvalue) * q_inf;
    const double cross_scale = mode.wavenumber() * q_inf;
    const auto label = fmt::format("{}(n={},m={},k={})", to_string(mode.family), mode.n, mode.m, mode.k);
    if (is_curl(mode.family)) {
      if (rel_err / scale > curl_rel) {
        curl_rel = rel_err / scale;
        curl_at = label;
      }
      div_rel = std::max(div_rel, cross_err / cross_scale);
    } else {
      if (rel_err / scale > graddiv_rel) {
        graddiv_rel = rel_err / scale;
        graddiv_at = label;
      }
      rot_rel = std::max(rot_rel, cross_err / cross_scale);
    }
  }
  rec.at_most("curl_eigen_relation", curl_rel, 1e-5, "worst " + curl_at);
  rec.at_most("graddiv_eigen_relation", graddiv_rel, 1e-4, "worst " + graddiv_at);
  rec.at_most("curl_modes_divergence_free", div_rel, 1e-6);
  rec.at_most("graddiv_modes_curl_free", rot_rel, 1e-6);

  // Normal trace on a seeded set of sphere points.
  std::vector<Vec3> surface;
  for (const auto& p : seeded_interior_points(1.0, 64, ws.config.seed + 1)) {
    if (norm(p) > 0.1) surface.push_back((r / norm(p)) * p);
  }
  double trace = 0.0;
  for (const auto& mode : basis.modes()) {
    for (double v : normal_trace(mode, basis, surface)) trace = std::max(trace, std::fabs(v));
  }
  rec.at_most("normal_trace_vanishes", trace, 1e-12);

  bool multiplicity = true;
  for (const auto& mode : basis.modes()) {
    if (mode.k != -mode.n) continue;
    for (int k = -mode.n; k <= mode.n; ++k) {
      const auto idx = basis.find(mode.family, mode.n, mode.m, k);
      multiplicity = multiplicity && idx && basis.mode(*idx).eigenvalue == mode.eigenvalue;
    }
  }
  rec.holds("multiplicity_2n_plus_1", multiplicity);
}

void suite_ortho(Recorder& rec, Workspace& ws) {
  const auto g = gram_matrix(*ws.full_basis(), *ws.quad_grid());
  std::size_t i = 0, j = 0;
  const double dev = g.identity_deviation(&i, &j);
  const auto& mi = ws.full_basis()->mode(i);
  const auto& mj = ws.full_basis()->mode(j);
  rec.at_most("gram_identity_deviation", dev, 1e-8,
              fmt::format("{} modes, worst ({} {},{},{}) x ({} {},{},{})", g.size,
                          to_string(mi.family), mi.n, mi.m, mi.k, to_string(mj.family), mj.n,
                          mj.m, mj.k));
}

void suite_parseval(Recorder& rec, Workspace& ws) {
  const auto& basis = ws.full_basis();
  const auto& grid = ws.quad_grid();
  Uniform u(ws.config.seed + 2);
  const auto c = random_coefficients(basis, u, kAllFamilies);
  const auto f = FieldSamples::sample(grid, synthesis_evaluator(c));
  const double energy = inner_product(f, f);
  const double defect = parseval_defect(f, project(f, basis));
  rec.at_most("span_defect", std::fabs(defect) / energy, 1e-8, "relative to ||f||^2");

  const Preset preset{PresetKind::toroidal_exp, {0.3, -0.5, 0.8}};
  const auto field = FieldSamples::sample(grid, preset_evaluator(preset, ws.config.radius));
  std::vector<double> defects;
  for (int n : {2, 4, 6}) {
    const auto b = make_basis(kCurlFamilies, n, ws.config.m_max, ws.config.radius, ws.config.zeros);
    defects.push_back(parseval_defect(field, project(field, b)));
  }
  rec.holds("defect_decreases_with_n_max", defects[0] > defects[1] && defects[1] > defects[2],
            fmt::format("{:.6e} > {:.6e} > {:.6e}", defects[0], defects[1], defects[2]));
}

void suite_solver(Recorder& rec, Workspace& ws) {
  SolverContext ctx{ws.full_basis(), ws.quad_grid()};
  const auto& basis = ctx.basis;
  const double r = ws.config.radius;
  SolveOptions opts;
  opts.residual_samples = ws.config.fd_samples;
  opts.relative_step = ws.config.fd_step;
  opts.seed = ws.config.seed;

  Uniform u(ws.config.seed + 3);
  const auto f = SourceField::from_modes(random_coefficients(basis, u, kAllFamilies));

  const auto s1 = solve_problem1(f, 1.0 / r, ctx, opts);
  rec.at_most("problem1_l2_residual", s1.diagnostics.coefficient_residual, 1e-8);
  rec.at_most("problem1_fd_residual", s1.diagnostics.fd_residual.value_or(INFINITY), 1e-6);
  const auto s2 = solve_problem2(f, 1.0 / (r * r), ctx, opts);
  rec.at_most("problem2_l2_residual", s2.diagnostics.coefficient_residual, 1e-8);
  rec.at_most("problem2_fd_residual", s2.diagnostics.fd_residual.value_or(INFINITY), 1e-6);

  const auto lowest = *basis->find(ModeFamily::curl_minus, 1, 1, 0);
  SpectralCoefficients resonant(basis);
  resonant[lowest] = 1.0;
  const double lambda1 = -basis->mode(lowest).eigenvalue;
  const auto fr = solve_problem1(SourceField::from_modes(resonant), lambda1, ctx, opts);
  rec.holds("problem1_fredholm_rejection",
            !fr.solvable && fr.fredholm && fr.fredholm->kernel_dimension() == 3,
            fmt::format("kernel dimension {}", fr.fredholm ? fr.fredholm->kernel_dimension() : 0));

  const auto g01 = *basis->find(ModeFamily::graddiv, 0, 1, 0);
  SpectralCoefficients resonant2(basis);
  resonant2[g01] = 1.0;
  const auto fr2 = solve_problem2(SourceField::from_modes(resonant2), -basis->mode(g01).eigenvalue,
                                  ctx, opts);
  rec.holds("problem2_fredholm_rejection",
            !fr2.solvable && fr2.fredholm && fr2.fredholm->kernel_dimension() == 1,
            fmt::format("kernel dimension {}", fr2.fredholm ? fr2.fredholm->kernel_dimension() : 0));

  const auto constant = SourceField::from_evaluator(
      preset_evaluator({PresetKind::constant, {0.0, 0.0, 1.0}}, r), "constant");
  const auto sc = solve_problem1(constant, 2.0, ctx, opts);
  rec.at_most("constant_source_fd_residual", sc.diagnostics.fd_residual.value_or(INFINITY), 1e-10);
}

void suite_identities(Recorder& rec, Workspace& ws) {
  const auto& basis = ws.full_basis();
  Uniform u(ws.config.seed + 4);

  // Sum lambda^{2k} c^2 against ||S^k c||^2 on three-mode combinations.
  double coef = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    SpectralCoefficients c(basis);
    for (int t = 0; t < 3; ++t) {
      std::size_t j;
      do {
        j = static_cast<std::size_t>((u() + 1.0) * 0.5 * static_cast<double>(basis->size()));
      } while (j >= basis->size() || !is_curl(basis->mode(j).family));
      c[j] = u();
    }
    for (int k = 1; k <= 2; ++k) {
      double weighted = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        weighted += std::pow(basis->mode(j).eigenvalue, 2 * k) * c[j] * c[j];
      }
      auto s = c;
      for (int p = 0; p < k; ++p) s = apply_S(s);
      const double iterated = s.norm() * s.norm();
      coef = std::max(coef, std::fabs(weighted - iterated) / iterated);
    }
  }
  rec.at_most("rot_power_coefficient_identity", coef, 1e-10, "k = 1, 2");

  // Symmetry of S.
  double sym = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_coefficients(basis, u, kCurlFamilies);
    const auto g = random_coefficients(basis, u, kCurlFamilies);
    const double a = dot(apply_S(f), g);
    const double b = dot(f, apply_S(g));
    sym = std::max(sym, std::fabs(a - b) / (apply_S(f).norm() * g.norm()));
  }
  rec.at_most("S_symmetric_coefficients", sym, 1e-12);

  {
    const auto f = random_coefficients(basis, u, kCurlFamilies);
    const auto g = random_coefficients(basis, u, kCurlFamilies);
    const auto& grid = ws.quad_grid();
    const auto sf = FieldSamples::sample(grid, synthesis_evaluator(apply_S(f)));
    const auto gs = FieldSamples::sample(grid, synthesis_evaluator(g));
    const double field = inner_product(sf, gs);
    const double coeff = dot(f, apply_S(g));
    rec.at_most("S_symmetric_fields", std::fabs(field - coeff) / (apply_S(f).norm() * g.norm()), 1e-8);
  }

  // Mapping bounds on seeded random vectors.
  double worst_slack = INFINITY;
  double attained = 0.0;
  auto wnorm = [](const SpectralCoefficients& c, int order, SobolevScale scale) {
    return std::sqrt(sobolev_norm(c, order, scale).weighted_sum);
  };
  for (double lambda : {0.5, -1.5, 3.0}) {
    for (int m = 0; m <= 2; ++m) {
      const auto bc = operator_bound_constants(lambda, *basis, m);
      auto forward = [&](const SpectralCoefficients& c) {
        auto out = apply_S(c) + lambda * c;
        return out;
      };
      auto inverse = [&](const SpectralCoefficients& c) { return *resolvent_curl(c, lambda).solution; };
      for (int t = 0; t < 50; ++t) {
        const auto c = random_coefficients(basis, u, kCurlFamilies);
        const double fwd = bc.c * wnorm(c, m + 1, SobolevScale::curl_w) -
                           wnorm(forward(c), m, SobolevScale::curl_w);
        const double inv = bc.C * wnorm(c, m, SobolevScale::curl_w) -
                           wnorm(inverse(c), m + 1, SobolevScale::curl_w);
        worst_slack = std::min({worst_slack, fwd, inv});
      }
      SpectralCoefficients ec(basis);
      ec[bc.argmax_c] = 1.0;
      attained = std::max(attained, std::fabs(wnorm(forward(ec), m, SobolevScale::curl_w) /
                                                  wnorm(ec, m + 1, SobolevScale::curl_w) -
                                              bc.c) /
                                        bc.c);
      SpectralCoefficients eC(basis);
      eC[bc.argmax_C] = 1.0;
      attained = std::max(attained, std::fabs(wnorm(inverse(eC), m + 1, SobolevScale::curl_w) /
                                                  wnorm(eC, m, SobolevScale::curl_w) -
                                              bc.C) /
                                        bc.C);
    }
  }
  rec.at_least("curl_bound_slack", worst_slack, 0.0, "50 vectors per (lambda, m)");
  rec.at_most("curl_bound_attained", attained, 1e-12);

  // Compactness proxy: 1/|lambda_j| in index order decreases to 0.
  bool monotone = true;
  double prev = INFINITY;
  for (const auto& mode : basis->modes()) {
    if (mode.family != ModeFamily::curl_plus) continue;
    const double inv = 1.0 / std::fabs(mode.eigenvalue);
    monotone = monotone && inv <= prev;
    prev = inv;
  }
  rec.holds("S_inverse_eigenvalues_decrease", monotone);

  // Vector identities on a polynomial field.
  const Vec3 a{0.3, -0.7, 0.2};
  const PointEvaluator poly = [a](const Vec3& x) {
    return Vec3{x.x * x.y * x.z + a.x * x.y * x.y, x.x * x.x * x.z - a.y * x.z * x.z * x.x,
                x.y * x.y * x.y + a.z * x.x * x.y * x.z};
  };
  const double h = ws.config.fd_step * ws.config.radius;
  double lap = 0.0, divrot = 0.0;
  for (const auto& x : seeded_interior_points(0.5 * ws.config.radius, 20, ws.config.seed + 5)) {
    const PointEvaluator rot = [&](const Vec3& y) { return fd_curl(poly, y, h); };
    const Vec3 rhs = fd_graddiv(poly, x, h) - fd_curl(rot, x, h);
    lap = std::max(lap, max_abs(fd_laplacian(poly, x, h) - rhs));
    divrot = std::max(divrot, std::fabs(fd_div(rot, x, h)));
  }
  rec.at_most("laplacian_identity", lap, 1e-6);
  rec.at_most("div_rot_vanishes", divrot, 1e-6);
}

std::string fmt_value(double v) { return fmt::format("{:.6e}", v); }

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

bool is_suite(std::string_view name) {
  return name == "all" || std::find(std::begin(kSuites), std::end(kSuites), name) != std::end(kSuites);
}

VerifyReport run_verification(std::string_view suite, const VerifyConfig& config) {
  if (!is_suite(suite)) throw DomainError("verify: unknown suite '" + std::string(suite) + "'");
  VerifyReport report;
  Workspace ws{config, nullptr, nullptr};
  for (auto name : kSuites) {
    if (suite != "all" && suite != name) continue;
    Recorder rec(report, std::string(name));
    if (name == "specfun") suite_specfun(rec);
    if (name == "harmonics") suite_harmonics(rec, config.seed);
    if (name == "grid") suite_grid(rec, ws);
    if (name == "eigen") suite_eigen(rec, ws);
    if (name == "ortho") suite_ortho(rec, ws);
    if (name == "parseval") suite_parseval(rec, ws);
    if (name == "solver") suite_solver(rec, ws);
    if (name == "identities") suite_identities(rec, ws);
  }
  return report;
}

std::string report_to_text(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += fmt::format("{:<4} {:<11} {:<34} value={} tol={}", c.passed ? "PASS" : "FAIL", c.suite,
                       c.name, fmt_value(c.value), fmt_value(c.tolerance));
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
  }
  out += fmt::format("{} checks, {} failed\n", report.checks.size(), report.failures());
  return out;
}

std::string report_to_csv(const VerifyReport& report) {
  std::string out = "suite,check,status,value,tolerance,detail\n";
  for (const auto& c : report.checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out += fmt::format("{},{},{},{},{},{}\n", c.suite, c.name, c.passed ? "pass" : "fail",
                       fmt_value(c.value), fmt_value(c.tolerance), detail);
  }
  return out;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"suite", c.suite},
                      {"check", c.name},
                      {"passed", c.passed},
                      {"value", fmt_value(c.value)},
                      {"tolerance", fmt_value(c.tolerance)},
                      {"detail", c.detail}});
  }
  return {{"checks", checks}, {"failures", report.failures()}, {"passed", report.passed()}};
}

}  // namespace ballspec
