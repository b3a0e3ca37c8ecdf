#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ballspec/eigenbasis.hpp"

namespace ballspec {

inline constexpr std::string_view kSuites[] = {"specfun", "harmonics", "grid",     "eigen",
                                               "ortho",   "parseval",  "solver",   "identities"};

struct VerifyConfig {
  double radius = 1.0;
  int n_max = 4;
  int m_max = 3;
  std::array<int, 3> grid{32, 24, 48};
  std::uint64_t seed = 20240917;
  std::size_t fd_samples = 200;
  double fd_step = 1e-4;
  ZeroTableSource zeros;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Measured quantity compared against `tolerance` (sense given by `detail`).
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
};

bool is_suite(std::string_view name);

/// Runs one suite or "all". Throws DomainError for unknown suite names.
/// Only the suites that need a grid or basis build them.
VerifyReport run_verification(std::string_view suite, const VerifyConfig& config);

/// Deterministic renderings: values printed with 6 significant digits.
std::string report_to_text(const VerifyReport& report);
std::string report_to_csv(const VerifyReport& report);
nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace ballspec
