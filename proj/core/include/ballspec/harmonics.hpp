#pragma once

#include <vector>

#include "ballspec/vec3.hpp"

namespace ballspec {

/// Degree n >= 0 and order k with |k| <= n. Negative k selects the sin(|k| phi)
/// harmonic, positive k the cos(k phi) one.
struct AngularIndex {
  int n = 0;
  int k = 0;

  friend bool operator==(const AngularIndex&, const AngularIndex&) = default;
};

/// Components in the orthonormal (e_theta, e_phi) frame; (e_r, e_theta, e_phi)
/// is right-handed.
struct TangentVector {
  double e_theta = 0.0;
  double e_phi = 0.0;
};

/// Fully normalized real spherical harmonic: the integral of Y_a Y_b over the
/// unit sphere is the Kronecker delta. No Condon-Shortley phase.
/// Requires theta in [0, pi], phi in [0, 2 pi).
double real_sph_harm(AngularIndex idx, double theta, double phi);

/// (d_theta Y, (1/sin theta) d_phi Y). The (e_theta, e_phi) frame is undefined
/// at the poles, so polar evaluation throws DomainError.
TangentVector sph_harm_surface_grad(AngularIndex idx, double theta, double phi);

/// Direction of a Cartesian point with its spherical frame, phi in [0, 2 pi).
/// The origin and points on the z axis get phi = 0.
struct SphericalFrame {
  double r = 0.0;
  double cos_theta = 1.0;
  double sin_theta = 0.0;
  double phi = 0.0;
  Vec3 e_r{0.0, 0.0, 1.0};
  Vec3 e_theta{1.0, 0.0, 0.0};
  Vec3 e_phi{0.0, 1.0, 0.0};

  static SphericalFrame from_cartesian(const Vec3& x);
};

/// All real harmonics of degree <= n_max at one direction, with their
/// surface-gradient components. The (1/sin theta) d_phi factor is formed
/// analytically and stays finite at the poles.
class HarmonicTable {
 public:
  HarmonicTable(int n_max, double cos_theta, double sin_theta, double phi);

  int n_max() const { return n_max_; }
  double value(int n, int k) const { return value_[index(n, k)]; }
  double d_theta(int n, int k) const { return d_theta_[index(n, k)]; }
  double d_phi_over_sin(int n, int k) const { return d_phi_[index(n, k)]; }

  static constexpr std::size_t index(int n, int k) {
    return static_cast<std::size_t>(n * n + n + k);
  }

 private:
  int n_max_;
  std::vector<double> value_;
  std::vector<double> d_theta_;
  std::vector<double> d_phi_;
};

}  // namespace ballspec
