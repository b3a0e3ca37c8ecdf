#include "ballspec/presets.hpp"

#include <cmath>

#include "ballspec/errors.hpp"

namespace ballspec {

std::string_view to_string(PresetKind kind) {
  switch (kind) {
    case PresetKind::constant:
      return "constant";
    case PresetKind::rigid_rotation:
      return "rigid_rotation";
    case PresetKind::toroidal_exp:
      return "toroidal_exp";
    case PresetKind::radial:
      return "radial";
  }
  return "unknown";
}

std::optional<PresetKind> parse_preset_kind(std::string_view text) {
  for (auto k : {PresetKind::constant, PresetKind::rigid_rotation, PresetKind::toroidal_exp,
                 PresetKind::radial}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

PointEvaluator preset_evaluator(const Preset& preset, double radius) {
  if (!(radius > 0.0)) throw DomainError("preset: radius must be positive");
  const Vec3 d = preset.direction;
  if (!std::isfinite(d.x) || !std::isfinite(d.y) || !std::isfinite(d.z)) {
    throw DomainError("preset: direction must be finite");
  }
  switch (preset.kind) {
    case PresetKind::constant:
      return [d](const Vec3&) { return d; };
    case PresetKind::rigid_rotation:
      return [d](const Vec3& x) { return cross(d, x); };
    case PresetKind::toroidal_exp:
      return [d, radius](const Vec3& x) {
        const Vec3 grad = (std::exp(dot(d, x) / radius) / radius) * d;
        return cross(grad, x);
      };
    case PresetKind::radial: {
      const double s = norm(d);
      return [s](const Vec3& x) { return s * x; };
    }
  }
  throw DomainError("preset: unknown kind");
}

}  // namespace ballspec
