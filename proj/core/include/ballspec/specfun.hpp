#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace ballspec {

/// Highest supported order n of psi/dpsi.
inline constexpr int kMaxPsiOrder = 64;

/// Every tabulated zero z satisfies |f(z)| <= this bound.
inline constexpr double kZeroResidualBound = 1e-12;

/// psi_n(z) = (-z)^n (d/(z dz))^n (sin z / z), i.e. the spherical Bessel
/// function j_n. Relative error <= 1e-13 for z in (0, 200] away from zeros.
///
/// Evaluation switches between a power series (small z), Miller's downward
/// recurrence normalized by psi_0 or psi_1 (z < n) and the upward recurrence
/// (z >= n).
///
/// Throws DomainError for z <= 0, non-finite z, or n outside [0, 64].
double psi(int n, double z);

/// d psi_n / dz from the closed recurrence psi_n' = (n/z) psi_n - psi_{n+1}.
double dpsi(int n, double z);

/// psi_n(z) / z for z >= 0, with the limit value at z = 0 (1/3 for n = 1,
/// 0 for n >= 2). Requires n >= 1.
double psi_over_z(int n, double z);

/// psi_n, psi_n' and psi_n / z from a single recurrence pass, for z >= 0.
/// At z = 0 the limits are returned; psi_over_z is reported as 0 for n = 0,
/// where it diverges (callers multiply it by n(n+1)).
struct RadialValues {
  double psi = 0.0;
  double dpsi = 0.0;
  double psi_over_z = 0.0;
};

RadialValues radial_values(int n, double z);

/// Which function's zeros a table holds: psi_n (curl spectrum) or
/// psi_n' (gradient-of-divergence spectrum).
enum class ZeroFamily { curl, graddiv };

std::string_view to_string(ZeroFamily family);
std::optional<ZeroFamily> parse_zero_family(std::string_view text);

/// Smallest order present in a family's spectrum: 1 for curl, 0 for graddiv.
constexpr int family_min_order(ZeroFamily family) {
  return family == ZeroFamily::curl ? 1 : 0;
}

struct ZeroEntry {
  int n = 0;
  int m = 0;
  double zero = 0.0;
  /// |psi_n(zero)| (curl) or |psi_n'(zero)| (graddiv) as evaluated.
  double residual = 0.0;

  friend bool operator==(const ZeroEntry&, const ZeroEntry&) = default;
};

/// Certified zeros for n in [family_min_order, n_max], m in [1, m_max],
/// sorted by (n, m).
struct ZeroTable {
  ZeroFamily family = ZeroFamily::curl;
  double radius = 1.0;
  int n_max = 0;
  int m_max = 0;
  std::vector<ZeroEntry> entries;

  /// Dimensionless zero for (n, m); throws DomainError when absent.
  double zero(int n, int m) const;

  friend bool operator==(const ZeroTable&, const ZeroTable&) = default;
};

/// First m_max positive zeros of psi_n for any n >= 0. Order 0 is the
/// auxiliary sequence m*pi that seeds the interlacing brackets.
std::vector<double> psi_zeros(int n, int m_max);

/// First m_max zeros rho_{n,m} of psi_n, n >= 1.
std::vector<double> curl_zeros(int n, int m_max);

/// First m_max positive zeros alpha_{n,m} of psi_n', n >= 0.
std::vector<double> graddiv_zeros(int n, int m_max);

/// Builds the full table for a family. Deterministic: repeated calls return
/// bit-identical tables.
ZeroTable build_zero_table(ZeroFamily family, int n_max, int m_max, double radius);

}  // namespace ballspec
