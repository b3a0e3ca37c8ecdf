#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ballspec/eigenbasis.hpp"
#include "ballspec/presets.hpp"
#include "ballspec/spectral.hpp"

namespace ballspec {

// ---------------------------------------------------------------- field specs

struct ModeTerm {
  ModeFamily family = ModeFamily::curl_plus;
  int n = 1;
  int m = 1;
  int k = 0;
  double coefficient = 0.0;
};

/// YAML document, one of
///
///   radius: 1.0
///   units: dimensionless        # optional free text
///   modes:
///     - [curl_plus, 1, 1, 0, 1.0]  # family, n, m, k, coefficient
///
///   radius: 1.0
///   preset: {name: constant, direction: [0, 0, 1]}
struct FieldSpecDocument {
  double radius = 1.0;
  std::string units;
  std::vector<ModeTerm> modes;
  std::optional<Preset> preset;
};

/// Throws ParseError (with line/column) on malformed YAML and SchemaError
/// (with a field path) on unknown keys, bad indices, duplicates, or when not
/// exactly one of modes/preset is present.
FieldSpecDocument read_field_spec(std::string_view text);
FieldSpecDocument read_field_spec_file(const std::filesystem::path& path);

/// Largest n among the terms (0 for presets).
int max_order(const FieldSpecDocument& doc);

/// Coefficients of a mode-combination document. Throws DomainError when a
/// term falls outside the basis or the radii differ.
SpectralCoefficients to_coefficients(const FieldSpecDocument& doc, BasisPtr basis);

// ----------------------------------------------------------------- run config

/// Values from a YAML run configuration; absent keys stay unset.
///
///   radius: 1.0
///   n_max: 4
///   m_max: 3
///   grid: [32, 24, 48]
///   lambda: 1.0
///   nu2: 1.0
///   seed: 20240917
///   fd_samples: 200
///   fd_step: 1.0e-4
///   format: json
///   out: result.json
struct RunConfigFile {
  std::optional<double> radius;
  std::optional<int> n_max;
  std::optional<int> m_max;
  std::optional<std::array<int, 3>> grid;
  std::optional<double> lambda;
  std::optional<double> nu2;
  std::optional<std::uint64_t> seed;
  std::optional<int> fd_samples;
  std::optional<double> fd_step;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

RunConfigFile read_run_config(std::string_view text);
RunConfigFile read_run_config_file(const std::filesystem::path& path);

// ----------------------------------------------------------------- zero tables

inline constexpr int kZeroTableVersion = 1;

/// Text format with hex-float values and a trailing CRC-32 line.
void write_zero_table(std::ostream& out, const ZeroTable& table);
/// Throws FormatError on version mismatch, checksum failure or malformed content.
ZeroTable read_zero_table(std::istream& in);

void write_zero_table_file(const std::filesystem::path& path, const ZeroTable& table);
ZeroTable read_zero_table_file(const std::filesystem::path& path);

/// Directory of zero-table files keyed by (family, n_max, m_max, radius).
class ZeroTableCache {
 public:
  explicit ZeroTableCache(std::filesystem::path directory);

  /// Cache rooted at $BALLSPEC_CACHE_DIR, if set and non-empty.
  static std::optional<ZeroTableCache> from_environment();

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path path_for(ZeroFamily family, int n_max, int m_max, double radius) const;

  /// Reads a cached table or builds and stores one. `hit` reports which.
  /// Corrupt cache files are rebuilt and overwritten.
  ZeroTable get(ZeroFamily family, int n_max, int m_max, double radius, bool* hit = nullptr);

  std::size_t hits() const { return stats_->hits; }
  std::size_t misses() const { return stats_->misses; }

  /// Adapter for make_basis; shares the hit counters with this cache.
  ZeroTableSource source() const;

 private:
  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
  };
  std::filesystem::path directory_;
  std::shared_ptr<Stats> stats_;
};

// ------------------------------------------------------------ sample exports

enum class SampleFormat { csv, vtk };

std::optional<SampleFormat> parse_sample_format(std::string_view text);

/// CSV: header x,y,z,ux,uy,uz then one row per point, 17 significant digits.
/// VTK: legacy ASCII POLYDATA with a VECTORS attribute of type double.
void export_samples(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> values,
                    SampleFormat format, std::string_view name = "u");

struct SampleTable {
  std::vector<Vec3> points;
  std::vector<Vec3> values;
};

/// Reads the CSV written by export_samples. Throws ParseError.
SampleTable read_samples_csv(std::istream& in);

// ------------------------------------------------------- coefficient documents

/// {"format": "ballspec-coefficients", "version": 1, "radius", "n_max",
///  "m_max", "families", "modes": [{family, n, m, k, eigenvalue, coefficient}]}
nlohmann::json coefficients_to_json(const SpectralCoefficients& c);

/// Throws SchemaError on malformed documents and MismatchError when the
/// document does not describe `basis`.
SpectralCoefficients coefficients_from_json(const nlohmann::json& doc, BasisPtr basis);

}  // namespace ballspec
