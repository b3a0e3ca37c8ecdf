#include "ballspec/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

constexpr double kPoleTolerance = 1e-12;

void check_index(AngularIndex idx) {
  if (idx.n < 0 || idx.k < -idx.n || idx.k > idx.n) {
    throw DomainError("spherical harmonic index (" + std::to_string(idx.n) + ", " +
                      std::to_string(idx.k) + ") out of range");
  }
}

void check_angles(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("spherical harmonic: theta outside [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw DomainError("spherical harmonic: phi outside [0, 2 pi)");
  }
}

}  // namespace

SphericalFrame SphericalFrame::from_cartesian(const Vec3& x) {
  SphericalFrame f;
  const double rho = std::hypot(x.x, x.y);
  f.r = std::hypot(rho, x.z);
  if (f.r == 0.0) return f;
  f.cos_theta = x.z / f.r;
  f.sin_theta = rho / f.r;
  f.phi = rho > 0.0 ? std::atan2(x.y, x.x) : 0.0;
  if (f.phi < 0.0) f.phi += 2.0 * std::numbers::pi;
  if (f.phi >= 2.0 * std::numbers::pi) f.phi = 0.0;
  const double cp = std::cos(f.phi);
  const double sp = std::sin(f.phi);
  f.e_r = {f.sin_theta * cp, f.sin_theta * sp, f.cos_theta};
  f.e_theta = {f.cos_theta * cp, f.cos_theta * sp, -f.sin_theta};
  f.e_phi = {-sp, cp, 0.0};
  return f;
}

HarmonicTable::HarmonicTable(int n_max, double x, double s, double phi)
    : n_max_(n_max),
      value_(static_cast<std::size_t>((n_max + 1) * (n_max + 1))),
      d_theta_(value_.size()),
      d_phi_(value_.size()) {
  if (n_max < 0) throw DomainError("harmonic table: n_max must be >= 0");
  const int size = n_max + 1;
  // pbar[n] = normalized P_n^m(x); q[n] = pbar / sin(theta) for m >= 1.
  std::vector<double> pbar(static_cast<std::size_t>(size + 1));
  std::vector<double> q(static_cast<std::size_t>(size + 1));
  const double sqrt2 = std::numbers::sqrt2;

  auto rec_a = [](int n, int m) {
    return std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - static_cast<double>(m) * m));
  };
  auto rec_b = [](int n, int m) {
    const double nm1 = n - 1.0;
    return std::sqrt((nm1 * nm1 - static_cast<double>(m) * m) / (4.0 * nm1 * nm1 - 1.0));
  };

  // Order 0 also needs P_n^1 for its theta derivative.
  std::vector<double> pbar1(static_cast<std::size_t>(size));

  double qmm = std::sqrt(3.0 / (8.0 * std::numbers::pi));  // Q_1^1
  for (int m = 0; m <= n_max; ++m) {
    if (m == 0) {
      pbar[0] = 1.0 / std::sqrt(4.0 * std::numbers::pi);
      if (n_max >= 1) pbar[1] = std::sqrt(3.0) * x * pbar[0];
      for (int n = 2; n <= n_max; ++n) {
        pbar[static_cast<std::size_t>(n)] =
            rec_a(n, 0) * (x * pbar[static_cast<std::size_t>(n - 1)] -
                           rec_b(n, 0) * pbar[static_cast<std::size_t>(n - 2)]);
      }
      for (int n = 0; n <= n_max; ++n) {
        const auto i = index(n, 0);
        value_[i] = pbar[static_cast<std::size_t>(n)];
        d_phi_[i] = 0.0;
      }
      continue;
    }
    if (m >= 2) qmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
    q[static_cast<std::size_t>(m)] = qmm;
    if (m + 1 <= n_max) q[static_cast<std::size_t>(m + 1)] = std::sqrt(2.0 * m + 3.0) * x * qmm;
    for (int n = m + 2; n <= n_max; ++n) {
      q[static_cast<std::size_t>(n)] =
          rec_a(n, m) * (x * q[static_cast<std::size_t>(n - 1)] -
                         rec_b(n, m) * q[static_cast<std::size_t>(n - 2)]);
    }
    const double cm = std::cos(m * phi);
    const double sm = std::sin(m * phi);
    for (int n = m; n <= n_max; ++n) {
      const double qn = q[static_cast<std::size_t>(n)];
      const double qprev = n > m ? q[static_cast<std::size_t>(n - 1)] : 0.0;
      const double p = s * qn;
      if (m == 1) pbar1[static_cast<std::size_t>(n)] = p;
      const double dp =
          n * x * qn - std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0) * (n - m) * (n + m)) * qprev;
      const auto ic = index(n, m);
      value_[ic] = sqrt2 * p * cm;
      d_theta_[ic] = sqrt2 * dp * cm;
      d_phi_[ic] = -sqrt2 * m * qn * sm;
      const auto is = index(n, -m);
      value_[is] = sqrt2 * p * sm;
      d_theta_[is] = sqrt2 * dp * sm;
      d_phi_[is] = sqrt2 * m * qn * cm;
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    d_theta_[index(n, 0)] = n == 0 ? 0.0 : -std::sqrt(n * (n + 1.0)) * pbar1[static_cast<std::size_t>(n)];
  }
}

double real_sph_harm(AngularIndex idx, double theta, double phi) {
  check_index(idx);
  check_angles(theta, phi);
  const HarmonicTable table(idx.n, std::cos(theta), std::sin(theta), phi);
  return table.value(idx.n, idx.k);
}

TangentVector sph_harm_surface_grad(AngularIndex idx, double theta, double phi) {
  check_index(idx);
  check_angles(theta, phi);
  const double s = std::sin(theta);
  if (s <= kPoleTolerance) {
    throw DomainError("surface gradient: tangent frame undefined at the poles");
  }
  const HarmonicTable table(idx.n, std::cos(theta), s, phi);
  return {table.d_theta(idx.n, idx.k), table.d_phi_over_sin(idx.n, idx.k)};
}

}  // namespace ballspec
