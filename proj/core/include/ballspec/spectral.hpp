#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ballspec/ballgrid.hpp"
#include "ballspec/eigenbasis.hpp"

namespace ballspec {

/// Fourier coefficients of a field in a basis, aligned with basis->modes().
class SpectralCoefficients {
 public:
  explicit SpectralCoefficients(BasisPtr basis);
  /// Throws MismatchError on a length mismatch, DomainError on non-finite values.
  SpectralCoefficients(BasisPtr basis, std::vector<double> values);

  const Basis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  /// Coefficient of a mode; throws DomainError when the mode is not in the basis.
  double at(ModeFamily family, int n, int m, int k) const;
  void set(ModeFamily family, int n, int m, int k, double value);

  /// Euclidean norm of the coefficient vector (= L2 norm of the synthesized field).
  double norm() const;

  /// Copy with every family except `keep` zeroed.
  SpectralCoefficients restricted(std::span<const ModeFamily> keep) const;

 private:
  BasisPtr basis_;
  std::vector<double> values_;
};

SpectralCoefficients operator+(const SpectralCoefficients& a, const SpectralCoefficients& b);
SpectralCoefficients operator-(const SpectralCoefficients& a, const SpectralCoefficients& b);
SpectralCoefficients operator*(double s, const SpectralCoefficients& c);

/// sum_j a_j b_j; throws MismatchError for different bases.
double dot(const SpectralCoefficients& a, const SpectralCoefficients& b);

/// True when the grid integrates products of modes up to degree n_max exactly.
bool grid_covers_basis(const BallGrid& grid, const Basis& basis);

/// c_j = (f, q_j). Sequential reduction in grid order.
SpectralCoefficients project(const FieldSamples& f, BasisPtr basis);

/// sum_j c_j q_j(x) at each point.
std::vector<Vec3> synthesize(const SpectralCoefficients& c, std::span<const Vec3> points);
Vec3 synthesize_at(const SpectralCoefficients& c, const Vec3& x);
/// Evaluator of the synthesized field; keeps the coefficients alive.
PointEvaluator synthesis_evaluator(SpectralCoefficients c);

/// S: curl coefficients times their eigenvalue; graddiv coefficients pass
/// through. Throws MismatchError when the basis has no curl family.
SpectralCoefficients apply_S(const SpectralCoefficients& c);
/// S^-1: curl coefficients divided by their eigenvalue; graddiv coefficients pass through.
SpectralCoefficients apply_S_inverse(const SpectralCoefficients& c);
/// N_d = grad div: graddiv coefficients times -nu_j^2; curl coefficients pass
/// through. Throws MismatchError when the basis has no graddiv family.
SpectralCoefficients apply_Nd(const SpectralCoefficients& c);

/// Outcome at a resonant spectral parameter.
struct FredholmReport {
  bool solvable = false;
  /// Basis indices of the resonant modes; they span the kernel.
  std::vector<std::size_t> kernel;
  /// Resonant modes whose coefficient exceeds tau_orth.
  std::vector<std::size_t> offending;
  double tau_spec = 0.0;
  double tau_orth = 0.0;

  std::size_t kernel_dimension() const { return kernel.size(); }
};

struct ResolventResult {
  /// Set unless the problem is non-solvable. At resonance the resonant
  /// coefficients are zero.
  std::optional<SpectralCoefficients> solution;
  std::optional<FredholmReport> fredholm;
};

inline constexpr double kSpectralTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-8;

/// (S + lambda I)^-1 on curl coefficients: c_j / (lambda + lambda_j) with the
/// signed eigenvalue lambda_j. Resonant when |lambda + lambda_j| <=
/// 1e-9 max|lambda_j|. Throws MismatchError when a graddiv coefficient is
/// nonzero or the basis has no curl family.
ResolventResult resolvent_curl(const SpectralCoefficients& c, double lambda);

/// (N_d + nu2 I)^-1 on graddiv coefficients: c_j / (nu2 - nu_j^2).
/// Throws DomainError for nu2 <= 0.
ResolventResult resolvent_graddiv(const SpectralCoefficients& c, double nu2);

/// ||f||^2 - sum of squared coefficients over all supplied sets.
double parseval_defect(const FieldSamples& f, std::span<const SpectralCoefficients> coefficients);
double parseval_defect(const FieldSamples& f, const SpectralCoefficients& c);

/// W^k on the curl families (weights 1 + lambda_j^{2k}) or A^{2k} on the
/// graddiv family (weights 1 + nu_j^{4k}).
enum class SobolevScale { curl_w, graddiv_a };

struct SobolevDiagnostics {
  SobolevScale scale = SobolevScale::curl_w;
  int order = 0;
  /// sum c_j^2 over the scale's families.
  double plain_sum = 0.0;
  /// sum of weighted c_j^2 (for order 0 the plain sum).
  double weighted_sum = 0.0;
  /// Share of weighted_sum carried by modes above half the largest wavenumber.
  double tail_fraction = 0.0;
  /// p in |c_j| ~ wavenumber^-p, least squares over nonzero coefficients;
  /// absent with fewer than two distinct wavenumbers.
  std::optional<double> decay_exponent;
};

/// Weight of one mode in the order-k norm: 1 for k = 0, else 1 + lambda^{2k}
/// (curl) or 1 + nu^{4k} (graddiv).
double sobolev_weight(const Mode& mode, SobolevScale scale, int order);

SobolevDiagnostics sobolev_norm(const SpectralCoefficients& c, int order,
                                SobolevScale scale = SobolevScale::curl_w);

/// Best constants of the truncated mapping bounds
///   ||(L + s) f||_{m}   <= c_m ||f||_{m+1},
///   ||(L + s)^-1 f||_{m+1} <= C_m ||f||_{m}
/// over the enumerated modes, with the maximizing basis indices.
struct BoundConstants {
  double c = 0.0;
  double C = 0.0;
  std::size_t argmax_c = 0;
  std::size_t argmax_C = 0;
};

/// L = S, s = lambda, W^m norms. Throws ResonanceError when lambda is resonant.
BoundConstants operator_bound_constants(double lambda, const Basis& basis, int m);
/// L = N_d, s = nu2, A^{2k} norms. Throws ResonanceError when nu2 is resonant.
BoundConstants graddiv_bound_constants(double nu2, const Basis& basis, int k);

/// Dense symmetric Gram matrix (q_i, q_j) on a grid.
struct GramMatrix {
  std::size_t size = 0;
  std::vector<double> entries;

  double at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  /// max |G_ij - delta_ij| with its location.
  double identity_deviation(std::size_t* row = nullptr, std::size_t* col = nullptr) const;
};

GramMatrix gram_matrix(const Basis& basis, const BallGrid& grid);

}  // namespace ballspec
