#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ballspec/harmonics.hpp"
#include "ballspec/specfun.hpp"
#include "ballspec/vec3.hpp"

namespace ballspec {

/// Eigenfield families in the ball.
///  - curl_plus / curl_minus: rot q = +-|lambda| q, div q = 0, n.q = 0 on the sphere;
///  - graddiv: grad div q = -nu^2 q, rot q = 0, n.q = 0 on the sphere.
enum class ModeFamily { curl_plus, curl_minus, graddiv };

inline constexpr ModeFamily kAllFamilies[] = {ModeFamily::curl_plus, ModeFamily::curl_minus,
                                              ModeFamily::graddiv};
inline constexpr ModeFamily kCurlFamilies[] = {ModeFamily::curl_plus, ModeFamily::curl_minus};

std::string_view to_string(ModeFamily family);
std::optional<ModeFamily> parse_mode_family(std::string_view text);

constexpr bool is_curl(ModeFamily f) { return f != ModeFamily::graddiv; }
constexpr ZeroFamily zero_family(ModeFamily f) {
  return is_curl(f) ? ZeroFamily::curl : ZeroFamily::graddiv;
}

struct Mode {
  ModeFamily family = ModeFamily::curl_plus;
  int n = 1;
  int m = 1;
  int k = 0;
  /// +rho/R (curl_plus), -rho/R (curl_minus) or -nu^2 with nu = alpha/R (graddiv).
  double eigenvalue = 0.0;
  /// 1-based position within the family, ordered by |eigenvalue| then (n, m, k).
  int index = 1;

  /// |lambda| for curl modes, nu for graddiv modes.
  double wavenumber() const;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// Supplies zero tables; the default builds them from scratch.
using ZeroTableSource = std::function<ZeroTable(ZeroFamily, int n_max, int m_max, double radius)>;

/// Orthonormal eigenfields for one or more families, all (n, m, k) with
/// n <= n_max, m <= m_max. Modes of a family are contiguous and the families
/// follow curl_plus, curl_minus, graddiv order. Immutable.
class Basis {
 public:
  double radius() const { return radius_; }
  int n_max() const { return n_max_; }
  int m_max() const { return m_max_; }
  std::span<const ModeFamily> families() const { return families_; }
  bool has_family(ModeFamily f) const;

  std::span<const Mode> modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  const Mode& mode(std::size_t i) const { return modes_[i]; }

  /// Multiplier turning the raw construction into a unit-L2 field.
  double normalization(std::size_t i) const { return shells_[shell_of_[i]].normalization; }

  std::optional<std::size_t> find(ModeFamily family, int n, int m, int k) const;

  /// Eigenfield i at a point of the closed ball. Throws DomainError outside.
  Vec3 evaluate(std::size_t i, const Vec3& x) const;

  /// Every mode at one point; `out` must have size() entries.
  void evaluate_all(const Vec3& x, std::span<Vec3> out) const;

  /// Largest |eigenvalue| among curl modes (0 if none).
  double max_curl_wavenumber() const;
  /// Largest nu^2 among graddiv modes (0 if none).
  double max_graddiv_eigenvalue() const;

  friend std::shared_ptr<const Basis> make_basis(std::span<const ModeFamily> families,
                                                 int n_max, int m_max, double radius,
                                                 const ZeroTableSource& zeros);

 private:
  // All 2n+1 modes sharing (family, n, m).
  struct Shell {
    ModeFamily family;
    int n;
    int m;
    double wavenumber;
    double normalization;
    std::size_t first;
  };

  Basis() = default;
  void check_point(const Vec3& x) const;
  void evaluate_shell(const Shell& shell, double r, const SphericalFrame& frame,
                      const HarmonicTable& table, std::span<Vec3> out) const;

  double radius_ = 1.0;
  int n_max_ = 0;
  int m_max_ = 0;
  std::vector<ModeFamily> families_;
  std::vector<Mode> modes_;
  std::vector<Shell> shells_;
  std::vector<std::size_t> shell_of_;
};

using BasisPtr = std::shared_ptr<const Basis>;

/// General constructor. Throws DomainError when n_max is below a requested
/// family's minimum order (1 for curl), above 64, or m_max < 1.
BasisPtr make_basis(std::span<const ModeFamily> families, int n_max, int m_max, double radius,
                    const ZeroTableSource& zeros = {});

/// Single-family basis.
BasisPtr enumerate_modes(ModeFamily family, int n_max, int m_max, double radius);

/// Samples of the normalized eigenfield at the points. Throws DomainError
/// when the mode is not in the basis or a point lies outside the ball.
std::vector<Vec3> eval_mode(const Mode& mode, const Basis& basis, std::span<const Vec3> points);

/// n.q on the bounding sphere. Points must satisfy ||x| - R| <= 1e-12 R.
std::vector<double> normal_trace(const Mode& mode, const Basis& basis,
                                 std::span<const Vec3> surface_points);

/// Squared L2 norm of the unnormalized eigenfield construction, by
/// Gauss-Legendre quadrature of its radial factors.
double raw_norm_squared(ModeFamily family, int n, double zero, double radius);

}  // namespace ballspec
