#include "ballspec/calculus.hpp"

#include <array>
#include <random>

#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

constexpr std::array<Vec3, 3> kAxes{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

double component(const Vec3& v, int i) { return i == 0 ? v.x : (i == 1 ? v.y : v.z); }

void check_stencil(const Vec3& x, double h, StencilDomain domain) {
  if (!(h > 0.0)) throw DomainError("finite differences: step must be positive");
  if (domain.domain_radius && norm(x) + 2.0 * h > *domain.domain_radius) {
    throw DomainError("finite differences: stencil leaves the domain");
  }
}

// Jacobian column j: d f / d x_j by central differences.
Vec3 partial(const PointEvaluator& f, const Vec3& x, double h, int j) {
  const Vec3 e = h * kAxes[static_cast<std::size_t>(j)];
  return (f(x + e) - f(x - e)) / (2.0 * h);
}

}  // namespace

Vec3 fd_curl(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain) {
  check_stencil(x, h, domain);
  const Vec3 dx = partial(f, x, h, 0);
  const Vec3 dy = partial(f, x, h, 1);
  const Vec3 dz = partial(f, x, h, 2);
  return {dy.z - dz.y, dz.x - dx.z, dx.y - dy.x};
}

double fd_div(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain) {
  check_stencil(x, h, domain);
  return partial(f, x, h, 0).x + partial(f, x, h, 1).y + partial(f, x, h, 2).z;
}

Vec3 fd_graddiv(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain) {
  check_stencil(x, h, domain);
  const Vec3 center = f(x);
  std::array<Vec3, 3> plus{};
  std::array<Vec3, 3> minus{};
  for (std::size_t i = 0; i < 3; ++i) {
    plus[i] = f(x + h * kAxes[i]);
    minus[i] = f(x - h * kAxes[i]);
  }
  // mixed[i][j] = d^2 f_j / dx_i dx_j for i != j
  std::array<std::array<double, 3>, 3> mixed{};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Vec3 ei = h * kAxes[static_cast<std::size_t>(i)];
      const Vec3 ej = h * kAxes[static_cast<std::size_t>(j)];
      const Vec3 pp = f(x + ei + ej);
      const Vec3 pm = f(x + ei - ej);
      const Vec3 mp = f(x - ei + ej);
      const Vec3 mm = f(x - ei - ej);
      const Vec3 d = (pp - pm - mp + mm) / (4.0 * h * h);
      mixed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = component(d, j);
      mixed[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = component(d, i);
    }
  }
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int ii = static_cast<int>(i);
    double sum = (component(plus[i], ii) - 2.0 * component(center, ii) + component(minus[i], ii)) /
                 (h * h);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) sum += mixed[i][j];
    }
    out[i] = sum;
  }
  return {out[0], out[1], out[2]};
}

Vec3 fd_laplacian(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain) {
  check_stencil(x, h, domain);
  const Vec3 center = f(x);
  Vec3 sum{};
  for (const auto& axis : kAxes) {
    sum += f(x + h * axis) - 2.0 * center + f(x - h * axis);
  }
  return sum / (h * h);
}

Vec3 fd_extrapolated(const std::function<Vec3(double)>& stencil, double h) {
  if (!(h > 0.0)) throw DomainError("finite differences: step must be positive");
  return (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
}

Vec3 fd_gradient(const std::function<double(const Vec3&)>& g, const Vec3& x, double h) {
  if (!(h > 0.0)) throw DomainError("finite differences: step must be positive");
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3 e = h * kAxes[i];
    out[i] = (g(x + e) - g(x - e)) / (2.0 * h);
  }
  return {out[0], out[1], out[2]};
}

std::vector<Vec3> seeded_interior_points(double max_radius, std::size_t count, std::uint64_t seed) {
  if (!(max_radius > 0.0)) throw DomainError("interior points: radius must be positive");
  std::mt19937_64 rng(seed);
  // 53 random bits mapped to [-1, 1); avoids implementation-defined distributions.
  auto coord = [&rng] { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };
  std::vector<Vec3> out;
  out.reserve(count);
  while (out.size() < count) {
    const Vec3 p{coord(), coord(), coord()};
    if (dot(p, p) <= 1.0) out.push_back(max_radius * p);
  }
  return out;
}

}  // namespace ballspec
