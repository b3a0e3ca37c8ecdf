#include "ballspec/ballgrid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ballspec/errors.hpp"

namespace ballspec {

GaussLegendreRule gauss_legendre(int count) {
  if (count < 1) throw DomainError("gauss_legendre: count must be >= 1");
  GaussLegendreRule rule;
  const auto n = static_cast<std::size_t>(count);
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (count == 1) p0 = 1.0;
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) <= 1e-16 * std::fabs(x) + 1e-300) break;
    }
    // Derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (count == 1) p0 = 1.0;
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = n - 1 - lo;
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (count % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GridPtr build_grid(double radius, int n_r, int n_theta, int n_phi) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("build_grid: radius must be positive");
  }
  for (int c : {n_r, n_theta, n_phi}) {
    if (c < 4 || c > 512) throw DomainError("build_grid: node counts must lie in [4, 512]");
  }
  if (n_phi % 2 != 0) throw DomainError("build_grid: N_phi must be even");

  std::shared_ptr<BallGrid> grid(new BallGrid());
  grid->radius_ = radius;

  const auto radial = gauss_legendre(n_r);
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = 0.5 * radius * (radial.nodes[i] + 1.0);
    grid->r_nodes_.push_back(r);
    grid->r_weights_.push_back(0.5 * radius * radial.weights[i] * r * r);
  }
  const auto polar = gauss_legendre(n_theta);
  grid->cos_theta_nodes_ = polar.nodes;
  grid->cos_theta_weights_ = polar.weights;
  for (int k = 0; k < n_phi; ++k) {
    grid->phi_nodes_.push_back(2.0 * std::numbers::pi * k / n_phi);
  }

  const double phi_weight = 2.0 * std::numbers::pi / n_phi;
  const std::size_t total = static_cast<std::size_t>(n_r) * n_theta * n_phi;
  grid->points_.reserve(total);
  grid->weights_.reserve(total);
  for (std::size_t i = 0; i < grid->r_nodes_.size(); ++i) {
    const double r = grid->r_nodes_[i];
    for (std::size_t j = 0; j < polar.nodes.size(); ++j) {
      const double ct = polar.nodes[j];
      const double st = std::sqrt((1.0 - ct) * (1.0 + ct));
      for (double phi : grid->phi_nodes_) {
        grid->points_.push_back({r * st * std::cos(phi), r * st * std::sin(phi), r * ct});
        grid->weights_.push_back(grid->r_weights_[i] * polar.weights[j] * phi_weight);
      }
    }
  }
  return grid;
}

namespace {

struct NeumaierSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    carry += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

int BallGrid::angular_exactness() const { return std::min(2 * n_theta() - 1, n_phi() - 1); }

FieldSamples::FieldSamples(GridPtr grid) : grid_(std::move(grid)) {
  values_.assign(grid_->size(), Vec3{});
}

FieldSamples::FieldSamples(GridPtr grid, std::vector<Vec3> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size()) {
    throw MismatchError("FieldSamples: " + std::to_string(values_.size()) +
                        " values for a grid of " + std::to_string(grid_->size()) + " nodes");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
      throw DomainError("FieldSamples: non-finite value");
    }
  }
}

FieldSamples FieldSamples::sample(GridPtr grid, const PointEvaluator& f) {
  std::vector<Vec3> values;
  values.reserve(grid->size());
  for (const auto& p : grid->points()) values.push_back(f(p));
  return FieldSamples(std::move(grid), std::move(values));
}

double inner_product(const FieldSamples& f, const FieldSamples& g) {
  if (f.grid_ptr() != g.grid_ptr()) throw MismatchError("inner_product: samples on different grids");
  const auto w = f.grid().weights();
  const auto a = f.values();
  const auto b = g.values();
  NeumaierSum sum;
  for (std::size_t i = 0; i < w.size(); ++i) sum.add(w[i] * dot(a[i], b[i]));
  return sum.value();
}

double l2_norm(const FieldSamples& f) { return std::sqrt(std::max(0.0, inner_product(f, f))); }

double integrate(const BallGrid& grid, const std::function<double(const Vec3&)>& f) {
  const auto pts = grid.points();
  const auto w = grid.weights();
  NeumaierSum sum;
  for (std::size_t i = 0; i < pts.size(); ++i) sum.add(w[i] * f(pts[i]));
  return sum.value();
}

}  // namespace ballspec
