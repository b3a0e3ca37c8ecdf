#include "ballspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct PsiPair {
  double value;  // psi_n(z)
  double next;   // psi_{n+1}(z)
};

void check_args(int n, double z) {
  if (n < 0 || n > kMaxPsiOrder) {
    throw DomainError("psi: order " + std::to_string(n) + " outside [0, 64]");
  }
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError("psi: argument must be positive and finite");
  }
}

bool series_regime(int n, double z) { return z * z < 0.1 * (2 * n + 3); }

// z^n / (2n+1)!! * sum_k (-z^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)).
// Terms shrink by at least 20x per step inside the series regime.
double psi_series(int n, double z) {
  double lead = 1.0;
  for (int i = 1; i <= n; ++i) lead *= z / (2 * i + 1);
  const double x = -0.5 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= x / (k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
    if (std::fabs(term) < 0.5 * kEps * std::fabs(sum)) break;
  }
  return lead * sum;
}

double psi0(double z) { return std::sin(z) / z; }
double psi1(double z) { return (std::sin(z) / z - std::cos(z)) / z; }

PsiPair psi_upward(int n, double z) {
  double prev = psi0(z);
  double cur = psi1(z);
  if (n == 0) return {prev, cur};
  for (int k = 1; k <= n; ++k) {
    const double nxt = (2.0 * k + 1.0) / z * cur - prev;
    prev = cur;
    cur = nxt;
  }
  return {prev, cur};
}

// Miller's backward recurrence from well above n, normalized against the
// closed forms of psi_0 or psi_1, whichever has larger magnitude.
PsiPair psi_miller(int n, double z) {
  constexpr double kBig = 1e200;
  const int start = n + 60 + static_cast<int>(z);
  double above = 0.0;  // psi_{k+1}
  double cur = 1e-280;  // psi_k
  double saved_n = 0.0;
  double saved_next = 0.0;
  for (int k = start; k >= 1; --k) {
    if (k == n + 1) saved_next = cur;
    if (k == n) saved_n = cur;
    const double below = (2.0 * k + 1.0) / z * cur - above;
    above = cur;
    cur = below;
    if (std::fabs(cur) > kBig) {
      cur /= kBig;
      above /= kBig;
      saved_n /= kBig;
      saved_next /= kBig;
    }
  }
  // cur = psi_0, above = psi_1 (unnormalized)
  if (n == 0) saved_n = cur;
  const double true0 = psi0(z);
  const double true1 = psi1(z);
  const double scale = std::fabs(true0) >= std::fabs(true1) ? true0 / cur : true1 / above;
  return {saved_n * scale, saved_next * scale};
}

PsiPair psi_pair(int n, double z) {
  if (series_regime(n, z)) return {psi_series(n, z), psi_series(n + 1, z)};
  if (z >= n) return psi_upward(n, z);
  return psi_miller(n, z);
}

// psi_n'' from the radial equation z^2 f'' + 2 z f' + (z^2 - n(n+1)) f = 0.
double d2psi(int n, double z, double f, double df) {
  return -2.0 / z * df - (1.0 - n * (n + 1.0) / (z * z)) * f;
}

// Safeguarded Newton on a sign-changing bracket [lo, hi].
template <class Fn, class DFn>
double refine_root(Fn f, DFn df, double lo, double hi, double guess) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw BracketError("zero bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] has no sign change");
  }
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double slope = df(x);
    double xn = slope != 0.0 ? x - fx / slope : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    const bool converged =
        std::fabs(xn - x) <= 2.0 * kEps * std::fabs(x) || hi - lo <= 4.0 * kEps * hi;
    x = xn;
    if (converged) break;
  }
  // Return whichever candidate has the smallest residual.
  double best = x;
  double fbest = std::fabs(f(x));
  for (double c : {lo, hi}) {
    const double fc = std::fabs(f(c));
    if (fc < fbest) {
      best = c;
      fbest = fc;
    }
  }
  return best;
}

// McMahon-type asymptotic estimate for the m-th zero of psi_n.
double mcmahon_guess(int n, int m) {
  const double beta = (m + 0.5 * n) * std::numbers::pi;
  const double mu = (2.0 * n + 1.0) * (2.0 * n + 1.0);
  const double b8 = 8.0 * beta;
  return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

void certify(double residual, int n, int m, const char* what) {
  if (!(residual <= kZeroResidualBound)) {
    throw BracketError(std::string(what) + " zero (" + std::to_string(n) + ", " +
                       std::to_string(m) + ") failed residual certification");
  }
}

// levels[n] holds the first (top_count + n_max - n) zeros of psi_n; each
// level's zeros are bracketed by consecutive zeros of the level below.
std::vector<std::vector<double>> zero_ladder(int n_max, int top_count) {
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(n_max) + 1);
  const int base_count = top_count + n_max;
  auto& base = levels[0];
  base.reserve(static_cast<std::size_t>(base_count));
  for (int m = 1; m <= base_count; ++m) {
    const double guess = m * std::numbers::pi;
    const double z = refine_root([](double t) { return psi(0, t); },
                                 [](double t) { return dpsi(0, t); },
                                 guess - 0.5 * std::numbers::pi, guess + 0.5 * std::numbers::pi,
                                 guess);
    certify(std::fabs(psi(0, z)), 0, m, "psi");
    base.push_back(z);
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto& lower = levels[static_cast<std::size_t>(n - 1)];
    auto& level = levels[static_cast<std::size_t>(n)];
    const int count = top_count + n_max - n;
    level.reserve(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m) {
      const double lo = lower[static_cast<std::size_t>(m - 1)];
      const double hi = lower[static_cast<std::size_t>(m)];
      const double z = refine_root([n](double t) { return psi(n, t); },
                                   [n](double t) { return dpsi(n, t); }, lo, hi,
                                   mcmahon_guess(n, m));
      certify(std::fabs(psi(n, z)), n, m, "psi");
      level.push_back(z);
    }
  }
  return levels;
}

// Zeros of psi_n' from the zeros of psi_n (n >= 1) or psi_0 (n = 0).
std::vector<double> derivative_zeros(int n, int m_max, const std::vector<double>& psi_roots) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m_max));
  auto f = [n](double t) { return dpsi(n, t); };
  auto df = [n](double t) {
    const auto v = psi(n, t);
    return d2psi(n, t, v, dpsi(n, t));
  };
  for (int m = 1; m <= m_max; ++m) {
    double lo;
    double hi;
    if (n == 0) {
      lo = psi_roots[static_cast<std::size_t>(m - 1)];
      hi = psi_roots[static_cast<std::size_t>(m)];
    } else if (m == 1) {
      // psi_n increases on (0, sqrt(n(n+1))).
      lo = std::sqrt(n * (n + 1.0));
      hi = psi_roots[0];
    } else {
      lo = psi_roots[static_cast<std::size_t>(m - 2)];
      hi = psi_roots[static_cast<std::size_t>(m - 1)];
    }
    const double z = refine_root(f, df, lo, hi, 0.5 * (lo + hi));
    certify(std::fabs(dpsi(n, z)), n, m, "psi'");
    out.push_back(z);
  }
  return out;
}

void check_zero_request(int n, int m_max) {
  if (n < 0 || n > kMaxPsiOrder) {
    throw DomainError("zeros: order " + std::to_string(n) + " outside [0, 64]");
  }
  if (m_max < 1) throw DomainError("zeros: m_max must be >= 1");
}

}  // namespace

double psi(int n, double z) {
  check_args(n, z);
  return psi_pair(n, z).value;
}

double dpsi(int n, double z) {
  check_args(n, z);
  const auto p = psi_pair(n, z);
  return n / z * p.value - p.next;
}

double psi_over_z(int n, double z) {
  if (n < 1 || n > kMaxPsiOrder) throw DomainError("psi_over_z: requires 1 <= n <= 64");
  if (z < 0.0 || !std::isfinite(z)) throw DomainError("psi_over_z: requires z >= 0");
  if (z == 0.0) return n == 1 ? 1.0 / 3.0 : 0.0;
  return psi_pair(n, z).value / z;
}

RadialValues radial_values(int n, double z) {
  if (n < 0 || n > kMaxPsiOrder) throw DomainError("radial_values: order outside [0, 64]");
  if (z < 0.0 || !std::isfinite(z)) throw DomainError("radial_values: requires z >= 0");
  if (z == 0.0) {
    return {n == 0 ? 1.0 : 0.0, n == 1 ? 1.0 / 3.0 : 0.0, n == 1 ? 1.0 / 3.0 : 0.0};
  }
  const auto p = psi_pair(n, z);
  return {p.value, n / z * p.value - p.next, n == 0 ? 0.0 : p.value / z};
}

std::string_view to_string(ZeroFamily family) {
  return family == ZeroFamily::curl ? "curl" : "graddiv";
}

std::optional<ZeroFamily> parse_zero_family(std::string_view text) {
  if (text == "curl") return ZeroFamily::curl;
  if (text == "graddiv") return ZeroFamily::graddiv;
  return std::nullopt;
}

double ZeroTable::zero(int n, int m) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{n, m},
                                   [](const ZeroEntry& e, const std::pair<int, int>& key) {
                                     return std::pair{e.n, e.m} < key;
                                   });
  if (it == entries.end() || it->n != n || it->m != m) {
    throw DomainError("zero table has no entry (" + std::to_string(n) + ", " +
                      std::to_string(m) + ")");
  }
  return it->zero;
}

std::vector<double> psi_zeros(int n, int m_max) {
  check_zero_request(n, m_max);
  return zero_ladder(n, m_max)[static_cast<std::size_t>(n)];
}

std::vector<double> curl_zeros(int n, int m_max) {
  if (n < 1) throw DomainError("curl_zeros: the curl spectrum uses n >= 1");
  return psi_zeros(n, m_max);
}

std::vector<double> graddiv_zeros(int n, int m_max) {
  check_zero_request(n, m_max);
  const auto ladder = zero_ladder(n, n == 0 ? m_max + 1 : m_max);
  return derivative_zeros(n, m_max, ladder[static_cast<std::size_t>(n)]);
}

ZeroTable build_zero_table(ZeroFamily family, int n_max, int m_max, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("zero table: radius must be positive");
  }
  const int n_min = family_min_order(family);
  if (n_max < n_min) {
    throw DomainError(std::string("zero table: ") + std::string(to_string(family)) +
                      " family requires n_max >= " + std::to_string(n_min));
  }
  check_zero_request(n_max, m_max);

  ZeroTable table;
  table.family = family;
  table.radius = radius;
  table.n_max = n_max;
  table.m_max = m_max;
  const auto ladder = zero_ladder(n_max, n_max == 0 ? m_max + 1 : m_max);
  for (int n = n_min; n <= n_max; ++n) {
    const auto& roots = ladder[static_cast<std::size_t>(n)];
    if (family == ZeroFamily::curl) {
      for (int m = 1; m <= m_max; ++m) {
        const double z = roots[static_cast<std::size_t>(m - 1)];
        table.entries.push_back({n, m, z, std::fabs(psi(n, z))});
      }
    } else {
      const auto zs = derivative_zeros(n, m_max, roots);
      for (int m = 1; m <= m_max; ++m) {
        const double z = zs[static_cast<std::size_t>(m - 1)];
        table.entries.push_back({n, m, z, std::fabs(dpsi(n, z))});
      }
    }
  }
  return table;
}

}  // namespace ballspec
