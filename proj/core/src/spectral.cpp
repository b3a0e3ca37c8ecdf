#include "ballspec/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

void require_same_basis(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  if (a.basis_ptr() != b.basis_ptr()) throw MismatchError("coefficients over different bases");
}

bool has_curl(const Basis& basis) {
  return basis.has_family(ModeFamily::curl_plus) || basis.has_family(ModeFamily::curl_minus);
}

double max_abs_eigenvalue(const Basis& basis, bool curl) {
  double out = 0.0;
  for (const auto& mode : basis.modes()) {
    if (is_curl(mode.family) == curl) out = std::max(out, std::fabs(mode.eigenvalue));
  }
  return out;
}

// Shared resonance logic: denominators s + eigenvalue over the selected modes.
ResolventResult resolve(const SpectralCoefficients& c, double shift, bool curl) {
  const auto& basis = c.basis();
  const double tau_spec = kSpectralTolerance * max_abs_eigenvalue(basis, curl);
  const double tau_orth = kOrthogonalityTolerance * c.norm();

  FredholmReport report;
  report.tau_spec = tau_spec;
  report.tau_orth = tau_orth;
  std::vector<double> out(c.size(), 0.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& mode = basis.mode(j);
    if (is_curl(mode.family) != curl) {
      if (c[j] != 0.0) {
        throw MismatchError(curl ? "resolvent_curl: graddiv coefficient present"
                                 : "resolvent_graddiv: curl coefficient present");
      }
      continue;
    }
    const double denom = shift + mode.eigenvalue;
    if (std::fabs(denom) <= tau_spec) {
      report.kernel.push_back(j);
      if (std::fabs(c[j]) > tau_orth) report.offending.push_back(j);
      continue;
    }
    out[j] = c[j] / denom;
  }

  ResolventResult result;
  if (!report.kernel.empty()) {
    report.solvable = report.offending.empty();
    result.fredholm = report;
    if (!report.solvable) return result;
  }
  result.solution = SpectralCoefficients(c.basis_ptr(), std::move(out));
  return result;
}

double weight_of(double wavenumber, SobolevScale scale, int order) {
  if (order == 0) return 1.0;
  const double power = scale == SobolevScale::curl_w ? 2.0 * order : 4.0 * order;
  return 1.0 + std::pow(wavenumber, power);
}

BoundConstants bound_constants(double shift, const Basis& basis, int order, bool curl) {
  if (order < 0) throw DomainError("bound constants: order must be >= 0");
  const auto scale = curl ? SobolevScale::curl_w : SobolevScale::graddiv_a;
  const double tau_spec = kSpectralTolerance * max_abs_eigenvalue(basis, curl);
  BoundConstants out;
  double c2 = -1.0;
  double big2 = -1.0;
  bool any = false;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& mode = basis.mode(j);
    if (is_curl(mode.family) != curl) continue;
    any = true;
    const double denom = shift + mode.eigenvalue;
    if (std::fabs(denom) <= tau_spec) {
      throw ResonanceError("bound constants: spectral parameter is resonant");
    }
    const double lo = weight_of(mode.wavenumber(), scale, order);
    const double hi = weight_of(mode.wavenumber(), scale, order + 1);
    const double fwd = lo * denom * denom / hi;
    const double inv = hi / (lo * denom * denom);
    if (fwd > c2) {
      c2 = fwd;
      out.argmax_c = j;
    }
    if (inv > big2) {
      big2 = inv;
      out.argmax_C = j;
    }
  }
  if (!any) throw MismatchError("bound constants: basis lacks the operator's families");
  out.c = std::sqrt(c2);
  out.C = std::sqrt(big2);
  return out;
}

}  // namespace

SpectralCoefficients::SpectralCoefficients(BasisPtr basis)
    : basis_(std::move(basis)), values_(basis_->size(), 0.0) {}

SpectralCoefficients::SpectralCoefficients(BasisPtr basis, std::vector<double> values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  if (values_.size() != basis_->size()) throw MismatchError("coefficients: length mismatch");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("coefficients: non-finite value");
  }
}

double SpectralCoefficients::at(ModeFamily family, int n, int m, int k) const {
  const auto idx = basis_->find(family, n, m, k);
  if (!idx) throw DomainError("coefficients: mode not in basis");
  return values_[*idx];
}

void SpectralCoefficients::set(ModeFamily family, int n, int m, int k, double value) {
  const auto idx = basis_->find(family, n, m, k);
  if (!idx) throw DomainError("coefficients: mode not in basis");
  if (!std::isfinite(value)) throw DomainError("coefficients: non-finite value");
  values_[*idx] = value;
}

double SpectralCoefficients::norm() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return std::sqrt(sum);
}

SpectralCoefficients SpectralCoefficients::restricted(std::span<const ModeFamily> keep) const {
  SpectralCoefficients out(basis_);
  for (std::size_t j = 0; j < values_.size(); ++j) {
    const auto f = basis_->mode(j).family;
    if (std::find(keep.begin(), keep.end(), f) != keep.end()) out.values_[j] = values_[j];
  }
  return out;
}

SpectralCoefficients operator+(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  require_same_basis(a, b);
  SpectralCoefficients out(a);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += b[j];
  return out;
}

SpectralCoefficients operator-(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  require_same_basis(a, b);
  SpectralCoefficients out(a);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= b[j];
  return out;
}

SpectralCoefficients operator*(double s, const SpectralCoefficients& c) {
  SpectralCoefficients out(c);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= s;
  return out;
}

double dot(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  require_same_basis(a, b);
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * b[j];
  return sum;
}

bool grid_covers_basis(const BallGrid& grid, const Basis& basis) {
  return grid.angular_exactness() >= 2 * basis.n_max();
}

SpectralCoefficients project(const FieldSamples& f, BasisPtr basis) {
  const auto& grid = f.grid();
  const auto points = grid.points();
  const auto weights = grid.weights();
  const auto values = f.values();
  std::vector<double> acc(basis->size(), 0.0);
  std::vector<Vec3> q(basis->size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    basis->evaluate_all(points[p], q);
    const Vec3 wf = weights[p] * values[p];
    for (std::size_t j = 0; j < q.size(); ++j) acc[j] += dot(wf, q[j]);
  }
  return SpectralCoefficients(std::move(basis), std::move(acc));
}

Vec3 synthesize_at(const SpectralCoefficients& c, const Vec3& x) {
  std::vector<Vec3> q(c.size());
  c.basis().evaluate_all(x, q);
  Vec3 out{};
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (c[j] != 0.0) out += c[j] * q[j];
  }
  return out;
}

std::vector<Vec3> synthesize(const SpectralCoefficients& c, std::span<const Vec3> points) {
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(synthesize_at(c, p));
  return out;
}

PointEvaluator synthesis_evaluator(SpectralCoefficients c) {
  return [c = std::move(c)](const Vec3& x) { return synthesize_at(c, x); };
}

SpectralCoefficients apply_S(const SpectralCoefficients& c) {
  if (!has_curl(c.basis())) throw MismatchError("apply_S: basis has no curl family");
  SpectralCoefficients out(c);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& mode = c.basis().mode(j);
    if (is_curl(mode.family)) out[j] *= mode.eigenvalue;
  }
  return out;
}

SpectralCoefficients apply_S_inverse(const SpectralCoefficients& c) {
  if (!has_curl(c.basis())) throw MismatchError("apply_S_inverse: basis has no curl family");
  SpectralCoefficients out(c);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& mode = c.basis().mode(j);
    if (is_curl(mode.family)) out[j] /= mode.eigenvalue;
  }
  return out;
}

SpectralCoefficients apply_Nd(const SpectralCoefficients& c) {
  if (!c.basis().has_family(ModeFamily::graddiv)) {
    throw MismatchError("apply_Nd: basis has no graddiv family");
  }
  SpectralCoefficients out(c);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& mode = c.basis().mode(j);
    if (mode.family == ModeFamily::graddiv) out[j] *= mode.eigenvalue;
  }
  return out;
}

ResolventResult resolvent_curl(const SpectralCoefficients& c, double lambda) {
  if (!std::isfinite(lambda)) throw DomainError("resolvent_curl: lambda must be finite");
  if (!has_curl(c.basis())) throw MismatchError("resolvent_curl: basis has no curl family");
  return resolve(c, lambda, true);
}

ResolventResult resolvent_graddiv(const SpectralCoefficients& c, double nu2) {
  if (!(nu2 > 0.0) || !std::isfinite(nu2)) {
    throw DomainError("resolvent_graddiv: nu^2 must be positive");
  }
  if (!c.basis().has_family(ModeFamily::graddiv)) {
    throw MismatchError("resolvent_graddiv: basis has no graddiv family");
  }
  return resolve(c, nu2, false);
}

double parseval_defect(const FieldSamples& f, std::span<const SpectralCoefficients> coefficients) {
  const double energy = inner_product(f, f);
  double captured = 0.0;
  for (const auto& c : coefficients) {
    for (double v : c.values()) captured += v * v;
  }
  return energy - captured;
}

double parseval_defect(const FieldSamples& f, const SpectralCoefficients& c) {
  return parseval_defect(f, std::span<const SpectralCoefficients>(&c, 1));
}

double sobolev_weight(const Mode& mode, SobolevScale scale, int order) {
  if (order < 0) throw DomainError("sobolev_weight: order must be >= 0");
  return weight_of(mode.wavenumber(), scale, order);
}

SobolevDiagnostics sobolev_norm(const SpectralCoefficients& c, int order, SobolevScale scale) {
  if (order < 0) throw DomainError("sobolev_norm: order must be >= 0");
  const bool curl = scale == SobolevScale::curl_w;
  const auto& basis = c.basis();

  SobolevDiagnostics out;
  out.scale = scale;
  out.order = order;
  double top = 0.0;
  for (const auto& mode : basis.modes()) {
    if (is_curl(mode.family) == curl) top = std::max(top, mode.wavenumber());
  }

  double tail = 0.0;
  // Least squares of log|c| against log(wavenumber).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  double first_x = 0.0;
  bool distinct = false;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& mode = basis.mode(j);
    if (is_curl(mode.family) != curl) continue;
    const double c2 = c[j] * c[j];
    const double w = weight_of(mode.wavenumber(), scale, order) * c2;
    out.plain_sum += c2;
    out.weighted_sum += w;
    if (mode.wavenumber() > 0.5 * top) tail += w;
    if (c[j] != 0.0) {
      const double x = std::log(mode.wavenumber());
      const double y = std::log(std::fabs(c[j]));
      if (count == 0) first_x = x;
      if (x != first_x) distinct = true;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++count;
    }
  }
  out.tail_fraction = out.weighted_sum > 0.0 ? std::clamp(tail / out.weighted_sum, 0.0, 1.0) : 0.0;
  if (distinct) {
    const double n = static_cast<double>(count);
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.decay_exponent = -slope;
  }
  return out;
}

BoundConstants operator_bound_constants(double lambda, const Basis& basis, int m) {
  if (!std::isfinite(lambda)) throw DomainError("bound constants: lambda must be finite");
  return bound_constants(lambda, basis, m, true);
}

BoundConstants graddiv_bound_constants(double nu2, const Basis& basis, int k) {
  if (!std::isfinite(nu2)) throw DomainError("bound constants: nu^2 must be finite");
  return bound_constants(nu2, basis, k, false);
}

double GramMatrix::identity_deviation(std::size_t* row, std::size_t* col) const {
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double d = std::fabs(at(i, j) - (i == j ? 1.0 : 0.0));
      if (d > worst) {
        worst = d;
        wi = i;
        wj = j;
      }
    }
  }
  if (row) *row = wi;
  if (col) *col = wj;
  return worst;
}

GramMatrix gram_matrix(const Basis& basis, const BallGrid& grid) {
  const std::size_t n = basis.size();
  GramMatrix g;
  g.size = n;
  g.entries.assign(n * n, 0.0);
  const auto points = grid.points();
  const auto weights = grid.weights();
  std::vector<Vec3> q(n);
  std::vector<double> qx(n), qy(n), qz(n);
  for (std::size_t p = 0; p < points.size(); ++p) {
    basis.evaluate_all(points[p], q);
    const double s = std::sqrt(weights[p]);
    for (std::size_t j = 0; j < n; ++j) {
      qx[j] = s * q[j].x;
      qy[j] = s * q[j].y;
      qz[j] = s * q[j].z;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double* row = &g.entries[i * n];
      const double xi = qx[i], yi = qy[i], zi = qz[i];
      for (std::size_t j = i; j < n; ++j) row[j] += xi * qx[j] + yi * qy[j] + zi * qz[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) g.entries[i * n + j] = g.entries[j * n + i];
  }
  return g;
}

}  // namespace ballspec
