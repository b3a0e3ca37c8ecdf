#include <gtest/gtest.h>

#include <cmath>

#include "ballspec/errors.hpp"
#include "ballspec/presets.hpp"
#include "ballspec/solver.hpp"

using namespace ballspec;

namespace {

constexpr double kRho11 = 4.493409457909064;

class SolverFixture : public testing::Test {
 protected:
  static void SetUpTestSuite() { ctx_ = make_context(1.0, 3, 2, 24, 16, 32); }
  static void TearDownTestSuite() { ctx_ = {}; }

  static SpectralCoefficients single(ModeFamily f, int n, int m, int k, double v = 1.0) {
    SpectralCoefficients c(ctx_.basis);
    c.set(f, n, m, k, v);
    return c;
  }

  static inline SolverContext ctx_;
};

TEST_F(SolverFixture, Problem1SingleCurlMode) {
  const auto f = single(ModeFamily::curl_plus, 1, 1, 0);
  const auto sol = solve_problem1(SourceField::from_modes(f), 1.0, ctx_);
  ASSERT_TRUE(sol.solvable);
  EXPECT_NEAR(sol.coefficients->at(ModeFamily::curl_plus, 1, 1, 0), 1.0 / 5.493409457909064,
              1e-15);
  EXPECT_LT(sol.diagnostics.coefficient_residual, 1e-14);
  ASSERT_TRUE(sol.diagnostics.fd_residual);
  EXPECT_LT(*sol.diagnostics.fd_residual, 1e-6);
}

TEST_F(SolverFixture, Problem1ConstantSource) {
  const auto ez = preset_evaluator({PresetKind::constant, {0, 0, 1}}, 1.0);
  const auto sol = solve_problem1(SourceField::from_evaluator(ez, "constant"), 2.0, ctx_);
  ASSERT_TRUE(sol.solvable);
  const auto u = sol.evaluator();
  const Vec3 v = u({0.1, 0.2, 0.3});
  EXPECT_NEAR(v.x, 0.0, 1e-12);
  EXPECT_NEAR(v.y, 0.0, 1e-12);
  EXPECT_NEAR(v.z, 0.5, 1e-12);
  EXPECT_LT(*sol.diagnostics.fd_residual, 1e-10);
}

TEST_F(SolverFixture, Problem1Resonance) {
  const auto f = single(ModeFamily::curl_minus, 1, 1, 1);
  const auto sol = solve_problem1(SourceField::from_modes(f), kRho11, ctx_);
  EXPECT_FALSE(sol.solvable);
  ASSERT_TRUE(sol.fredholm);
  EXPECT_EQ(sol.fredholm->kernel_dimension(), 3u);
  EXPECT_THROW(sol.evaluator(), ResonanceError);
}

TEST_F(SolverFixture, Problem1FredholmSolvableBranch) {
  const auto f = single(ModeFamily::curl_plus, 2, 1, 0);
  const auto sol = solve_problem1(SourceField::from_modes(f), kRho11, ctx_);
  ASSERT_TRUE(sol.solvable);
  ASSERT_TRUE(sol.fredholm);
  EXPECT_EQ(sol.fredholm->kernel_dimension(), 3u);
  EXPECT_LT(*sol.diagnostics.fd_residual, 1e-6);
}

TEST_F(SolverFixture, Problem1RejectsZeroLambda) {
  const auto f = single(ModeFamily::curl_plus, 1, 1, 0);
  EXPECT_THROW(solve_problem1(SourceField::from_modes(f), 0.0, ctx_), DomainError);
}

TEST_F(SolverFixture, Problem2CurlSourcePassesThrough) {
  const auto f = single(ModeFamily::curl_minus, 2, 1, -2);
  const auto sol = solve_problem2(SourceField::from_modes(f), 3.0, ctx_);
  ASSERT_TRUE(sol.solvable);
  EXPECT_NEAR(sol.coefficients->at(ModeFamily::curl_minus, 2, 1, -2), 1.0 / 3.0, 1e-15);
  EXPECT_LT(*sol.diagnostics.fd_residual, 1e-6);
}

TEST_F(SolverFixture, Problem2GraddivMode) {
  const auto f = single(ModeFamily::graddiv, 1, 1, 0);
  const auto sol = solve_problem2(SourceField::from_modes(f), 1.0, ctx_);
  ASSERT_TRUE(sol.solvable);
  EXPECT_NEAR(sol.coefficients->at(ModeFamily::graddiv, 1, 1, 0), -0.3000337341642419, 1e-14);
  EXPECT_LT(*sol.diagnostics.fd_residual, 1e-6);
}

TEST_F(SolverFixture, Problem2Resonance) {
  const auto f = single(ModeFamily::graddiv, 2, 1, 1);
  const double nu = ctx_.basis->mode(*ctx_.basis->find(ModeFamily::graddiv, 2, 1, 1)).wavenumber();
  const auto sol = solve_problem2(SourceField::from_modes(f), nu * nu, ctx_);
  EXPECT_FALSE(sol.solvable);
  EXPECT_EQ(sol.fredholm->kernel_dimension(), 5u);
  EXPECT_THROW(solve_problem2(SourceField::from_modes(f), 0.0, ctx_), DomainError);
  EXPECT_THROW(solve_problem2(SourceField::from_modes(f), -2.0, ctx_), DomainError);
}

TEST_F(SolverFixture, ZeroSource) {
  const auto sol = solve_problem1(SourceField::from_modes(SpectralCoefficients(ctx_.basis)), 1.7,
                                  ctx_);
  ASSERT_TRUE(sol.solvable);
  EXPECT_EQ(sol.coefficients->norm(), 0.0);
  EXPECT_EQ(*sol.diagnostics.fd_residual, 0.0);
}

TEST_F(SolverFixture, TruncatedSourceReportsDroppedMode) {
  const auto big = make_basis(kAllFamilies, 5, 1, 1.0);
  const auto idx = *big->find(ModeFamily::curl_plus, 5, 1, 0);
  const PointEvaluator outside = [big, idx](const Vec3& x) { return big->evaluate(idx, x); };
  const auto sol = solve_problem1(SourceField::from_evaluator(outside, "n5"), 1.0, ctx_);
  ASSERT_TRUE(sol.solvable);
  EXPECT_GT(*sol.diagnostics.fd_residual, 1e-2);
  EXPECT_GT(sol.diagnostics.relative_span_defect, 0.99);
}

TEST_F(SolverFixture, MismatchedBasis) {
  const auto other = make_basis(kAllFamilies, 3, 2, 1.0);
  SpectralCoefficients c(other);
  EXPECT_THROW(solve_problem1(SourceField::from_modes(c), 1.0, ctx_), MismatchError);
}

TEST_F(SolverFixture, DecomposeSeparatesFamilies) {
  const auto grid = ctx_.grid;
  const auto ex = FieldSamples::sample(grid, [](const Vec3&) { return Vec3{1, 0, 0}; });
  const auto d = helmholtz_decompose(ex, ctx_.basis);
  EXPECT_LT(d.curl_energy(), 1e-16);
  EXPECT_NEAR(d.graddiv_energy() + d.span_defect, d.energy, 1e-12);

  const auto i_curl = *ctx_.basis->find(ModeFamily::curl_minus, 2, 2, 1);
  const auto i_grad = *ctx_.basis->find(ModeFamily::graddiv, 3, 1, -3);
  const PointEvaluator both = [&](const Vec3& x) {
    return ctx_.basis->evaluate(i_curl, x) + ctx_.basis->evaluate(i_grad, x);
  };
  const auto mixed = helmholtz_decompose(FieldSamples::sample(grid, both), ctx_.basis);
  for (std::size_t j = 0; j < ctx_.basis->size(); ++j) {
    const double expected_c = j == i_curl ? 1.0 : 0.0;
    const double expected_g = j == i_grad ? 1.0 : 0.0;
    EXPECT_NEAR(mixed.curl[j], expected_c, 1e-8);
    EXPECT_NEAR(mixed.graddiv[j], expected_g, 1e-8);
  }
  EXPECT_LT(std::fabs(mixed.span_defect), 1e-8);
}

TEST_F(SolverFixture, SolutionClassesReported) {
  const auto f = single(ModeFamily::curl_plus, 2, 2, 1);
  const auto sol = solve_problem1(SourceField::from_modes(f), 0.5, ctx_);
  ASSERT_EQ(sol.diagnostics.solution_classes.size(), 6u);
  const auto& w1 = sol.diagnostics.solution_classes[1];
  EXPECT_EQ(w1.scale, SobolevScale::curl_w);
  EXPECT_EQ(w1.order, 1);
  const double lam = ctx_.basis->mode(*ctx_.basis->find(ModeFamily::curl_plus, 2, 2, 1)).eigenvalue;
  const double c = 1.0 / (0.5 + lam);
  EXPECT_NEAR(w1.weighted_sum, c * c * (1 + lam * lam), 1e-12);
}

TEST(Residual, DeterministicForSeed) {
  const auto ctx = make_context(1.0, 2, 1, 16, 8, 16);
  SpectralCoefficients c(ctx.basis);
  c.set(ModeFamily::curl_plus, 1, 1, 0, 1.0);
  SolveOptions opt;
  opt.compute_residual = false;
  const auto sol = solve_problem1(SourceField::from_modes(c), 2.0, ctx, opt);
  EXPECT_FALSE(sol.diagnostics.fd_residual);
  const auto f = synthesis_evaluator(c);
  const double a = residual(sol, f, Problem::curl, 1.0, 50, 1e-4, 9);
  const double b = residual(sol, f, Problem::curl, 1.0, 50, 1e-4, 9);
  EXPECT_EQ(a, b);
  EXPECT_THROW(residual(sol, f, Problem::curl, 1.0, 50, 0.0, 9), DomainError);
}

TEST(Presets, Fields) {
  const Vec3 x{0.2, -0.4, 0.1};
  const Vec3 r = preset_evaluator({PresetKind::rigid_rotation, {0, 0, 1}}, 1.0)(x);
  EXPECT_EQ(r, (Vec3{0.4, 0.2, 0.0}));
  const Vec3 rad = preset_evaluator({PresetKind::radial, {0, 0, 2}}, 1.0)(x);
  EXPECT_EQ(rad, 2.0 * x);
  for (auto k : {PresetKind::constant, PresetKind::rigid_rotation, PresetKind::toroidal_exp,
                 PresetKind::radial}) {
    EXPECT_EQ(parse_preset_kind(to_string(k)), k);
  }
  const Vec3 t = preset_evaluator({PresetKind::toroidal_exp, {1, 0, 0}}, 1.0)(x);
  EXPECT_NEAR(dot(t, x), 0.0, 1e-16);
}

}  // namespace
