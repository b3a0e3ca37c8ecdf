#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ballspec/ballgrid.hpp"
#include "ballspec/vec3.hpp"

namespace ballspec {

/// Default step relative to the domain radius.
inline constexpr double kDefaultRelativeStep = 1e-4;

/// Optional containment check for stencils: the ball of radius 2h around x
/// must lie inside |y| <= domain_radius.
struct StencilDomain {
  std::optional<double> domain_radius;
};

// Second-order central differences on analytic evaluators. Each throws
// DomainError when the stencil would leave the declared domain.

Vec3 fd_curl(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain = {});
double fd_div(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain = {});
/// grad(div f): diagonal second differences plus 4-point mixed differences.
Vec3 fd_graddiv(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain = {});
/// Componentwise 7-point Laplacian.
Vec3 fd_laplacian(const PointEvaluator& f, const Vec3& x, double h, StencilDomain domain = {});

/// One Richardson step on an O(h^2) stencil: (4 L(h/2) - L(h)) / 3.
Vec3 fd_extrapolated(const std::function<Vec3(double)>& stencil, double h);

/// Gradient of a scalar; used to build gradient test fields.
Vec3 fd_gradient(const std::function<double(const Vec3&)>& g, const Vec3& x, double h);

/// Deterministic points uniform in the ball |x| <= max_radius (rejection
/// sampling from a 64-bit Mersenne twister).
std::vector<Vec3> seeded_interior_points(double max_radius, std::size_t count, std::uint64_t seed);

}  // namespace ballspec
