#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "ballspec/vec3.hpp"

namespace ballspec {

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int count);

/// Tensor quadrature over the ball |x| <= R: Gauss-Legendre in r on [0, R]
/// with the r^2 Jacobian folded into the weights, Gauss-Legendre in
/// cos(theta), uniform azimuth. No node sits at the origin or on the poles.
///
/// Integrates exactly (to rounding) p(r) r^2 Y(theta, phi) for polynomials p
/// of degree <= 2 N_r - 3 and harmonics of degree <= min(2 N_theta - 1, N_phi - 1).
class BallGrid {
 public:
  double radius() const { return radius_; }
  int n_r() const { return static_cast<int>(r_nodes_.size()); }
  int n_theta() const { return static_cast<int>(cos_theta_nodes_.size()); }
  int n_phi() const { return static_cast<int>(phi_nodes_.size()); }
  std::size_t size() const { return points_.size(); }

  std::span<const double> radial_nodes() const { return r_nodes_; }
  std::span<const double> radial_weights() const { return r_weights_; }
  std::span<const double> cos_theta_nodes() const { return cos_theta_nodes_; }
  std::span<const double> cos_theta_weights() const { return cos_theta_weights_; }
  std::span<const double> phi_nodes() const { return phi_nodes_; }

  /// Flattened nodes, ordered r-major then theta then phi.
  std::span<const Vec3> points() const { return points_; }
  std::span<const double> weights() const { return weights_; }

  /// Angular degree up to which products of two fields are integrated exactly.
  int angular_exactness() const;

  friend std::shared_ptr<const BallGrid> build_grid(double radius, int n_r, int n_theta,
                                                    int n_phi);

 private:
  BallGrid() = default;

  double radius_ = 1.0;
  std::vector<double> r_nodes_;
  std::vector<double> r_weights_;
  std::vector<double> cos_theta_nodes_;
  std::vector<double> cos_theta_weights_;
  std::vector<double> phi_nodes_;
  std::vector<Vec3> points_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const BallGrid>;

/// Counts must lie in [4, 512] and n_phi must be even; throws DomainError otherwise.
GridPtr build_grid(double radius, int n_r, int n_theta, int n_phi);

/// Analytic vector field: Cartesian point -> 3 components.
using PointEvaluator = std::function<Vec3(const Vec3&)>;

/// Vector field tabulated on the nodes of a grid.
class FieldSamples {
 public:
  /// Zero field on the grid.
  explicit FieldSamples(GridPtr grid);
  /// Throws MismatchError on a length mismatch and DomainError on non-finite values.
  FieldSamples(GridPtr grid, std::vector<Vec3> values);

  static FieldSamples sample(GridPtr grid, const PointEvaluator& f);

  const BallGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::span<const Vec3> values() const { return values_; }

 private:
  GridPtr grid_;
  std::vector<Vec3> values_;
};

/// (f, g) = integral of f.g over the ball. Throws MismatchError when the
/// samples live on different grids.
double inner_product(const FieldSamples& f, const FieldSamples& g);

double l2_norm(const FieldSamples& f);

/// Quadrature of a scalar function over the ball.
double integrate(const BallGrid& grid, const std::function<double(const Vec3&)>& f);

}  // namespace ballspec
