#pragma once

#include <optional>
#include <string_view>

#include "ballspec/ballgrid.hpp"
#include "ballspec/vec3.hpp"

namespace ballspec {

/// Named analytic fields accepted as solver sources.
///  - constant:       u = d (a gradient; pure A side, nonzero normal trace);
///  - rigid_rotation: u = d x x (solenoidal, tangential on the sphere);
///  - toroidal_exp:   u = grad(exp(d.x / R)) x x (solenoidal, tangential, not in any finite span);
///  - radial:         u = |d| x (a gradient).
enum class PresetKind { constant, rigid_rotation, toroidal_exp, radial };

std::string_view to_string(PresetKind kind);
std::optional<PresetKind> parse_preset_kind(std::string_view text);

struct Preset {
  PresetKind kind = PresetKind::constant;
  Vec3 direction{0.0, 0.0, 1.0};
};

/// Evaluator for a preset in a ball of the given radius.
PointEvaluator preset_evaluator(const Preset& preset, double radius);

}  // namespace ballspec
