#include <gtest/gtest.h>

#include <cmath>

#include "ballspec/calculus.hpp"
#include "ballspec/eigenbasis.hpp"
#include "ballspec/errors.hpp"

using namespace ballspec;

namespace {

const Vec3 kPoint{0.21, -0.13, 0.34};

TEST(FdCurl, LinearRotationIsExact) {
  const PointEvaluator f = [](const Vec3& x) { return Vec3{-x.y, x.x, 0.0}; };
  const Vec3 c = fd_curl(f, kPoint, 1e-3);
  EXPECT_NEAR(c.x, 0.0, 1e-12);
  EXPECT_NEAR(c.y, 0.0, 1e-12);
  EXPECT_NEAR(c.z, 2.0, 1e-12);
}

TEST(FdCurl, GradientIsCurlFree) {
  const PointEvaluator f = [](const Vec3& x) { return Vec3{2 * x.x, 2 * x.y, 0.0}; };
  EXPECT_LE(max_abs(fd_curl(f, kPoint, 1e-4)), 1e-10);
}

TEST(FdCurl, LowestCurlEigenfield) {
  const auto basis = enumerate_modes(ModeFamily::curl_plus, 1, 1, 1.0);
  const PointEvaluator q = [&](const Vec3& x) { return basis->evaluate(0, x); };
  const double lambda = basis->mode(0).eigenvalue;
  const Vec3 expected = lambda * q(kPoint);
  EXPECT_LE(max_abs(fd_curl(q, kPoint, 1e-4) - expected), 1e-5 * max_abs(expected));
}

TEST(FdOperators, IdentityField) {
  const PointEvaluator f = [](const Vec3& x) { return x; };
  EXPECT_NEAR(fd_div(f, kPoint, 1e-3), 3.0, 1e-12);
  EXPECT_LE(max_abs(fd_graddiv(f, kPoint, 1e-3)), 1e-9);
  EXPECT_LE(max_abs(fd_laplacian(f, kPoint, 1e-3)), 1e-9);
}

TEST(FdOperators, QuadraticFields) {
  const PointEvaluator f = [](const Vec3& x) { return Vec3{x.x * x.y, x.y * x.z, x.z * x.x}; };
  const Vec3 x = kPoint;
  // div = y + z + x; grad div = (1, 1, 1); laplacian = 0
  EXPECT_NEAR(fd_div(f, x, 1e-3), x.x + x.y + x.z, 1e-11);
  const Vec3 gd = fd_graddiv(f, x, 1e-3);
  EXPECT_NEAR(gd.x, 1.0, 1e-7);
  EXPECT_NEAR(gd.y, 1.0, 1e-7);
  EXPECT_NEAR(gd.z, 1.0, 1e-7);
  EXPECT_LE(max_abs(fd_laplacian(f, x, 1e-3)), 1e-7);
}

TEST(FdOperators, GraddivEigenfield) {
  const auto basis = enumerate_modes(ModeFamily::graddiv, 2, 1, 1.0);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const PointEvaluator q = [&, i](const Vec3& x) { return basis->evaluate(i, x); };
    const Vec3 expected = basis->mode(i).eigenvalue * q(kPoint);
    EXPECT_LE(max_abs(fd_graddiv(q, kPoint, 1e-4) - expected),
              1e-4 * std::max(max_abs(expected), 1e-3));
  }
}

TEST(FdOperators, SecondOrderAccuracy) {
  const PointEvaluator f = [](const Vec3& x) {
    return Vec3{std::sin(x.y + 2 * x.z), std::exp(0.5 * x.x) * x.z, std::cos(x.x * x.y)};
  };
  const auto exact_curl = [](const Vec3& x) {
    return Vec3{-x.x * std::sin(x.x * x.y) - std::exp(0.5 * x.x),
                2 * std::cos(x.y + 2 * x.z) + x.y * std::sin(x.x * x.y),
                0.5 * std::exp(0.5 * x.x) * x.z - std::cos(x.y + 2 * x.z)};
  };
  const double e1 = max_abs(fd_curl(f, kPoint, 4e-2) - exact_curl(kPoint));
  const double e2 = max_abs(fd_curl(f, kPoint, 2e-2) - exact_curl(kPoint));
  const double order = std::log2(e1 / e2);
  EXPECT_GT(order, 1.7);
  EXPECT_LT(order, 2.3);
}

TEST(FdExtrapolated, RemovesLeadingError) {
  const PointEvaluator f = [](const Vec3& x) {
    return Vec3{std::sin(x.y + 2 * x.z), std::exp(0.5 * x.x) * x.z, std::cos(x.x * x.y)};
  };
  const Vec3 x = kPoint;
  const Vec3 exact{-x.x * std::sin(x.x * x.y) - std::exp(0.5 * x.x),
                   2 * std::cos(x.y + 2 * x.z) + x.y * std::sin(x.x * x.y),
                   0.5 * std::exp(0.5 * x.x) * x.z - std::cos(x.y + 2 * x.z)};
  const double plain = max_abs(fd_curl(f, x, 2e-2) - exact);
  const double rich =
      max_abs(fd_extrapolated([&](double h) { return fd_curl(f, x, h); }, 2e-2) - exact);
  EXPECT_LT(rich, 1e-2 * plain);
}

TEST(FdGradient, Quadratic) {
  const auto g = [](const Vec3& x) { return x.x * x.x + 3 * x.y * x.z; };
  const Vec3 d = fd_gradient(g, kPoint, 1e-3);
  EXPECT_NEAR(d.x, 2 * kPoint.x, 1e-10);
  EXPECT_NEAR(d.y, 3 * kPoint.z, 1e-10);
  EXPECT_NEAR(d.z, 3 * kPoint.y, 1e-10);
}

TEST(StencilDomain, RejectsStencilsLeavingTheBall) {
  const PointEvaluator f = [](const Vec3& x) { return x; };
  const StencilDomain ball{1.0};
  EXPECT_NO_THROW(fd_curl(f, {0.5, 0, 0}, 1e-3, ball));
  EXPECT_THROW(fd_curl(f, {0.9995, 0, 0}, 1e-3, ball), DomainError);
  EXPECT_THROW(fd_graddiv(f, {0, 0, -0.9995}, 1e-3, ball), DomainError);
  EXPECT_THROW(fd_div(f, kPoint, 0.0), DomainError);
}

TEST(SeededPoints, DeterministicAndInside) {
  const auto a = seeded_interior_points(0.8, 500, 42);
  const auto b = seeded_interior_points(0.8, 500, 42);
  const auto c = seeded_interior_points(0.8, 500, 43);
  ASSERT_EQ(a.size(), 500u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  double mean_r3 = 0.0;
  for (const auto& p : a) {
    EXPECT_LE(norm(p), 0.8);
    mean_r3 += std::pow(norm(p) / 0.8, 3);
  }
  EXPECT_NEAR(mean_r3 / 500.0, 0.5, 0.05);
}

}  // namespace
