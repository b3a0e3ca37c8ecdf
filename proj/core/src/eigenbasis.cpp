#include "ballspec/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "ballspec/ballgrid.hpp"
#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

constexpr double kBallTolerance = 1e-12;

// Raw (unnormalized) field of one (family, n, k) at a point, from the radial
// values at z = wavenumber * r.
//   curl:    T + sign * P with T = psi r^ x grad_S Y rotated,
//            P = n(n+1) (psi/z) Y e_r + (psi' + psi/z) grad_S Y;
//   graddiv: psi' Y e_r + (psi/z) grad_S Y  (= grad h / nu).
Vec3 raw_field(ModeFamily family, int n, int k, const RadialValues& rv,
               const SphericalFrame& frame, const HarmonicTable& table) {
  const double y = table.value(n, k);
  const double gt = table.d_theta(n, k);
  const double gp = table.d_phi_over_sin(n, k);
  const Vec3 tangential = gt * frame.e_theta + gp * frame.e_phi;
  if (family == ModeFamily::graddiv) {
    return rv.dpsi * y * frame.e_r + rv.psi_over_z * tangential;
  }
  const double sign = family == ModeFamily::curl_plus ? 1.0 : -1.0;
  const double nn1 = n * (n + 1.0);
  const Vec3 toroidal = rv.psi * (gp * frame.e_theta - gt * frame.e_phi);
  const Vec3 poloidal = nn1 * rv.psi_over_z * y * frame.e_r + (rv.dpsi + rv.psi_over_z) * tangential;
  return toroidal + sign * poloidal;
}

}  // namespace

std::string_view to_string(ModeFamily family) {
  switch (family) {
    case ModeFamily::curl_plus:
      return "curl_plus";
    case ModeFamily::curl_minus:
      return "curl_minus";
    case ModeFamily::graddiv:
      return "graddiv";
  }
  return "unknown";
}

std::optional<ModeFamily> parse_mode_family(std::string_view text) {
  for (auto f : kAllFamilies) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

double Mode::wavenumber() const {
  return family == ModeFamily::graddiv ? std::sqrt(-eigenvalue) : std::fabs(eigenvalue);
}

double raw_norm_squared(ModeFamily family, int n, double zero, double radius) {
  const int count = 40 + 2 * static_cast<int>(std::ceil(zero));
  const auto rule = gauss_legendre(count);
  const double nn1 = n * (n + 1.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    const auto rv = radial_values(n, zero * t);
    double g;
    if (family == ModeFamily::graddiv) {
      g = rv.dpsi * rv.dpsi + nn1 * rv.psi_over_z * rv.psi_over_z;
    } else {
      const double tang = rv.dpsi + rv.psi_over_z;
      g = nn1 * rv.psi * rv.psi + nn1 * nn1 * rv.psi_over_z * rv.psi_over_z + nn1 * tang * tang;
    }
    sum += 0.5 * rule.weights[i] * t * t * g;
  }
  return radius * radius * radius * sum;
}

BasisPtr make_basis(std::span<const ModeFamily> families, int n_max, int m_max, double radius,
                    const ZeroTableSource& zeros) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("basis: radius must be positive");
  if (m_max < 1) throw DomainError("basis: m_max must be >= 1");
  if (n_max > kMaxPsiOrder) throw DomainError("basis: n_max above 64");
  if (families.empty()) throw DomainError("basis: no families requested");

  std::shared_ptr<Basis> basis(new Basis());
  basis->radius_ = radius;
  basis->n_max_ = n_max;
  basis->m_max_ = m_max;
  for (auto f : kAllFamilies) {
    if (std::find(families.begin(), families.end(), f) == families.end()) continue;
    const int n_min = family_min_order(zero_family(f));
    if (n_max < n_min) {
      throw DomainError("basis: family " + std::string(to_string(f)) + " requires n_max >= " +
                        std::to_string(n_min));
    }
    basis->families_.push_back(f);
  }

  std::optional<ZeroTable> curl_table;
  std::optional<ZeroTable> graddiv_table;
  auto table_for = [&](ZeroFamily zf) -> const ZeroTable& {
    auto& slot = zf == ZeroFamily::curl ? curl_table : graddiv_table;
    if (!slot) {
      slot = zeros ? zeros(zf, n_max, m_max, radius) : build_zero_table(zf, n_max, m_max, radius);
    }
    return *slot;
  };

  for (auto f : basis->families_) {
    const auto& table = table_for(zero_family(f));
    struct Pending {
      double wavenumber;
      int n;
      int m;
      double zero;
    };
    std::vector<Pending> shells;
    for (int n = family_min_order(zero_family(f)); n <= n_max; ++n) {
      for (int m = 1; m <= m_max; ++m) {
        const double z = table.zero(n, m);
        shells.push_back({z / radius, n, m, z});
      }
    }
    std::sort(shells.begin(), shells.end(), [](const Pending& a, const Pending& b) {
      return std::tie(a.wavenumber, a.n, a.m) < std::tie(b.wavenumber, b.n, b.m);
    });
    int index = 1;
    for (const auto& p : shells) {
      const double norm2 = raw_norm_squared(f, p.n, p.zero, radius);
      if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw DomainError("basis: degenerate normalization for mode shell");
      }
      Basis::Shell shell{f, p.n, p.m, p.wavenumber, 1.0 / std::sqrt(norm2), basis->modes_.size()};
      const double eigenvalue = f == ModeFamily::curl_plus    ? p.wavenumber
                                : f == ModeFamily::curl_minus ? -p.wavenumber
                                                              : -p.wavenumber * p.wavenumber;
      for (int k = -p.n; k <= p.n; ++k) {
        basis->modes_.push_back({f, p.n, p.m, k, eigenvalue, index++});
        basis->shell_of_.push_back(basis->shells_.size());
      }
      basis->shells_.push_back(shell);
    }
  }
  return basis;
}

BasisPtr enumerate_modes(ModeFamily family, int n_max, int m_max, double radius) {
  const ModeFamily fams[] = {family};
  return make_basis(fams, n_max, m_max, radius);
}

bool Basis::has_family(ModeFamily f) const {
  return std::find(families_.begin(), families_.end(), f) != families_.end();
}

std::optional<std::size_t> Basis::find(ModeFamily family, int n, int m, int k) const {
  for (const auto& shell : shells_) {
    if (shell.family == family && shell.n == n && shell.m == m) {
      if (k < -n || k > n) return std::nullopt;
      return shell.first + static_cast<std::size_t>(k + n);
    }
  }
  return std::nullopt;
}

void Basis::check_point(const Vec3& x) const {
  if (!(norm(x) <= radius_ * (1.0 + kBallTolerance))) {
    throw DomainError("eigenfield evaluation: point outside the ball");
  }
}

Vec3 Basis::evaluate(std::size_t i, const Vec3& x) const {
  check_point(x);
  const auto& mode = modes_[i];
  const auto& shell = shells_[shell_of_[i]];
  const auto frame = SphericalFrame::from_cartesian(x);
  const HarmonicTable table(mode.n, frame.cos_theta, frame.sin_theta, frame.phi);
  const auto rv = radial_values(mode.n, shell.wavenumber * frame.r);
  return shell.normalization * raw_field(mode.family, mode.n, mode.k, rv, frame, table);
}

void Basis::evaluate_shell(const Shell& shell, double r, const SphericalFrame& frame,
                           const HarmonicTable& table, std::span<Vec3> out) const {
  const auto rv = radial_values(shell.n, shell.wavenumber * r);
  for (int k = -shell.n; k <= shell.n; ++k) {
    out[shell.first + static_cast<std::size_t>(k + shell.n)] =
        shell.normalization * raw_field(shell.family, shell.n, k, rv, frame, table);
  }
}

void Basis::evaluate_all(const Vec3& x, std::span<Vec3> out) const {
  check_point(x);
  if (out.size() != modes_.size()) throw MismatchError("evaluate_all: output size mismatch");
  const auto frame = SphericalFrame::from_cartesian(x);
  const HarmonicTable table(n_max_, frame.cos_theta, frame.sin_theta, frame.phi);
  for (const auto& shell : shells_) evaluate_shell(shell, frame.r, frame, table, out);
}

double Basis::max_curl_wavenumber() const {
  double out = 0.0;
  for (const auto& s : shells_) {
    if (is_curl(s.family)) out = std::max(out, s.wavenumber);
  }
  return out;
}

double Basis::max_graddiv_eigenvalue() const {
  double out = 0.0;
  for (const auto& s : shells_) {
    if (s.family == ModeFamily::graddiv) out = std::max(out, s.wavenumber * s.wavenumber);
  }
  return out;
}

std::vector<Vec3> eval_mode(const Mode& mode, const Basis& basis, std::span<const Vec3> points) {
  const auto idx = basis.find(mode.family, mode.n, mode.m, mode.k);
  if (!idx) throw DomainError("eval_mode: mode does not belong to the basis");
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(basis.evaluate(*idx, p));
  return out;
}

std::vector<double> normal_trace(const Mode& mode, const Basis& basis,
                                 std::span<const Vec3> surface_points) {
  const double r_tol = kBallTolerance * basis.radius();
  for (const auto& p : surface_points) {
    if (std::fabs(norm(p) - basis.radius()) > r_tol) {
      throw DomainError("normal_trace: point not on the bounding sphere");
    }
  }
  const auto values = eval_mode(mode, basis, surface_points);
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back(dot(surface_points[i], values[i]) / norm(surface_points[i]));
  }
  return out;
}

}  // namespace ballspec
