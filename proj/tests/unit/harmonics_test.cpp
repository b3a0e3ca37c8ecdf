#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ballspec/ballgrid.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/harmonics.hpp"

using namespace ballspec;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(RealSphHarm, LowOrderValues) {
  for (double theta : {0.0, 0.4, 2.0, kPi}) {
    EXPECT_NEAR(real_sph_harm({0, 0}, theta, 1.1), 0.28209479177387814, 1e-15);
  }
  EXPECT_NEAR(real_sph_harm({1, 0}, 0.0, 0.0), 0.48860251190291992, 1e-15);
  const double c = std::sqrt(3.0 / (4.0 * kPi));
  EXPECT_NEAR(real_sph_harm({1, 1}, 0.7, 0.3), c * std::sin(0.7) * std::cos(0.3), 1e-15);
  EXPECT_NEAR(real_sph_harm({1, -1}, 0.7, 0.3), c * std::sin(0.7) * std::sin(0.3), 1e-15);
}

TEST(RealSphHarm, AdditionTheorem) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = std::acos(2 * u(rng) - 1);
    const double phi = 2 * kPi * u(rng);
    for (int n : {1, 3, 8, 20}) {
      double sum = 0.0;
      for (int k = -n; k <= n; ++k) sum += std::pow(real_sph_harm({n, k}, theta, phi), 2);
      EXPECT_NEAR(sum, (2 * n + 1) / (4 * kPi), 1e-13);
    }
  }
}

TEST(RealSphHarm, Parity) {
  for (int n = 0; n <= 6; ++n) {
    for (int k = -n; k <= n; ++k) {
      const double a = real_sph_harm({n, k}, 0.9, 0.5);
      const double b = real_sph_harm({n, k}, kPi - 0.9, 0.5 + kPi);
      EXPECT_NEAR(b, (n % 2 == 0 ? 1.0 : -1.0) * a, 1e-14) << n << "," << k;
    }
  }
}

TEST(RealSphHarm, RejectsInvalidIndex) {
  EXPECT_THROW(real_sph_harm({1, 2}, 0.5, 0.5), DomainError);
  EXPECT_THROW(real_sph_harm({-1, 0}, 0.5, 0.5), DomainError);
}

TEST(RealSphHarm, GramMatrixOnQuadrature) {
  const auto rule = gauss_legendre(12);
  const int n_phi = 24;
  const int n_max = 8;
  std::vector<AngularIndex> idx;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = -n; k <= n; ++k) idx.push_back({n, k});
  }
  const std::size_t count = idx.size();
  std::vector<double> gram(count * count, 0.0);
  std::vector<double> y(count);
  for (std::size_t t = 0; t < rule.nodes.size(); ++t) {
    const double theta = std::acos(rule.nodes[t]);
    for (int p = 0; p < n_phi; ++p) {
      const double phi = 2 * kPi * p / n_phi;
      const double w = rule.weights[t] * 2 * kPi / n_phi;
      for (std::size_t i = 0; i < count; ++i) y[i] = real_sph_harm(idx[i], theta, phi);
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) gram[i * count + j] += w * y[i] * y[j];
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      EXPECT_NEAR(gram[i * count + j], i == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(SurfaceGrad, Examples) {
  const auto g0 = sph_harm_surface_grad({0, 0}, 1.0, 2.0);
  EXPECT_EQ(g0.e_theta, 0.0);
  EXPECT_EQ(g0.e_phi, 0.0);
  const auto g1 = sph_harm_surface_grad({1, 0}, kPi / 2, 0.3);
  EXPECT_NEAR(g1.e_theta, -std::sqrt(3.0 / (4.0 * kPi)), 1e-15);
  EXPECT_NEAR(g1.e_phi, 0.0, 1e-15);
  EXPECT_THROW(sph_harm_surface_grad({1, 0}, 0.0, 0.0), DomainError);
}

TEST(SurfaceGrad, MatchesFiniteDifferences) {
  const double h = 1e-6;
  for (int n = 1; n <= 5; ++n) {
    for (int k = -n; k <= n; ++k) {
      const double theta = 1.1;
      const double phi = 2.3;
      const auto g = sph_harm_surface_grad({n, k}, theta, phi);
      const double dt = (real_sph_harm({n, k}, theta + h, phi) -
                         real_sph_harm({n, k}, theta - h, phi)) / (2 * h);
      const double dp = (real_sph_harm({n, k}, theta, phi + h) -
                         real_sph_harm({n, k}, theta, phi - h)) / (2 * h);
      EXPECT_NEAR(g.e_theta, dt, 1e-8);
      EXPECT_NEAR(g.e_phi, dp / std::sin(theta), 1e-8);
    }
  }
}

TEST(SurfaceGrad, DirichletEnergyIsEigenvalue) {
  const auto rule = gauss_legendre(16);
  const int n_phi = 32;
  for (AngularIndex idx : {AngularIndex{2, 1}, AngularIndex{3, -2}, AngularIndex{5, 0}}) {
    double sum = 0.0;
    for (std::size_t t = 0; t < rule.nodes.size(); ++t) {
      const double theta = std::acos(rule.nodes[t]);
      for (int p = 0; p < n_phi; ++p) {
        const auto g = sph_harm_surface_grad(idx, theta, 2 * kPi * p / n_phi);
        sum += rule.weights[t] * 2 * kPi / n_phi * (g.e_theta * g.e_theta + g.e_phi * g.e_phi);
      }
    }
    EXPECT_NEAR(sum, idx.n * (idx.n + 1.0), 1e-12);
  }
}

TEST(HarmonicTable, AgreesWithPointFunctions) {
  const double theta = 0.8;
  const double phi = 4.0;
  const HarmonicTable table(10, std::cos(theta), std::sin(theta), phi);
  for (int n = 0; n <= 10; ++n) {
    for (int k = -n; k <= n; ++k) {
      EXPECT_NEAR(table.value(n, k), real_sph_harm({n, k}, theta, phi), 1e-14);
      if (n == 0) continue;
      const auto g = sph_harm_surface_grad({n, k}, theta, phi);
      EXPECT_NEAR(table.d_theta(n, k), g.e_theta, 1e-13);
      EXPECT_NEAR(table.d_phi_over_sin(n, k), g.e_phi, 1e-13);
    }
  }
}

TEST(HarmonicTable, FiniteAtPoles) {
  for (double c : {1.0, -1.0}) {
    const HarmonicTable table(6, c, 0.0, 0.0);
    for (int n = 0; n <= 6; ++n) {
      for (int k = -n; k <= n; ++k) {
        EXPECT_TRUE(std::isfinite(table.value(n, k)));
        EXPECT_TRUE(std::isfinite(table.d_theta(n, k)));
        EXPECT_TRUE(std::isfinite(table.d_phi_over_sin(n, k)));
      }
    }
  }
}

TEST(SphericalFrame, RightHanded) {
  const auto f = SphericalFrame::from_cartesian({0.3, -0.4, 0.5});
  EXPECT_NEAR(f.r, std::sqrt(0.5), 1e-15);
  const Vec3 c = cross(f.e_r, f.e_theta);
  EXPECT_NEAR(c.x, f.e_phi.x, 1e-15);
  EXPECT_NEAR(c.y, f.e_phi.y, 1e-15);
  EXPECT_NEAR(c.z, f.e_phi.z, 1e-15);
  const auto origin = SphericalFrame::from_cartesian({0, 0, 0});
  EXPECT_EQ(origin.r, 0.0);
  EXPECT_EQ(origin.phi, 0.0);
}

}  // namespace
