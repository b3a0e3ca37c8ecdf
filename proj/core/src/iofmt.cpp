#include "ballspec/iofmt.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>
#include <zlib.h>

#include "ballspec/errors.hpp"

namespace ballspec {
namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------------ YAML

YAML::Node load_yaml(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
}

std::string where(const YAML::Node& node) {
  const auto mark = node.Mark();
  if (mark.is_null()) return "";
  return fmt::format(" (line {}, column {})", mark.line + 1, mark.column + 1);
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& path, std::string_view expected) {
  if (!node.IsScalar()) throw SchemaError(path, fmt::format("expected {}{}", expected, where(node)));
  try {
    return node.as<T>();
  } catch (const YAML::BadConversion&) {
    throw SchemaError(path, fmt::format("expected {}{}", expected, where(node)));
  }
}

double finite_scalar(const YAML::Node& node, const std::string& path) {
  const double v = scalar<double>(node, path, "a number");
  if (!std::isfinite(v)) throw SchemaError(path, "value must be finite" + where(node));
  return v;
}

double positive_scalar(const YAML::Node& node, const std::string& path) {
  const double v = finite_scalar(node, path);
  if (!(v > 0.0)) throw SchemaError(path, "value must be positive" + where(node));
  return v;
}

void reject_unknown_keys(const YAML::Node& map, std::initializer_list<std::string_view> allowed,
                         const std::string& prefix) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(prefix + key, "unknown key" + where(kv.first));
    }
  }
}

YAML::Node require_map(std::string_view text) {
  const auto root = load_yaml(text);
  if (!root.IsMap()) throw SchemaError("$", "document must be a mapping");
  return root;
}

Vec3 vec3_of(const YAML::Node& node, const std::string& path) {
  if (!node.IsSequence() || node.size() != 3) {
    throw SchemaError(path, "expected a list of 3 numbers" + where(node));
  }
  return {finite_scalar(node[0], path + "[0]"), finite_scalar(node[1], path + "[1]"),
          finite_scalar(node[2], path + "[2]")};
}

ModeTerm mode_term(const YAML::Node& node, const std::string& path) {
  if (!node.IsSequence() || node.size() != 5) {
    throw SchemaError(path, "expected [family, n, m, k, coefficient]" + where(node));
  }
  ModeTerm t;
  const auto family_text = scalar<std::string>(node[0], path + "[0]", "a family name");
  const auto family = parse_mode_family(family_text);
  if (!family) throw SchemaError(path + "[0]", "unknown family '" + family_text + "'");
  t.family = *family;
  t.n = scalar<int>(node[1], path + "[1]", "an integer");
  t.m = scalar<int>(node[2], path + "[2]", "an integer");
  t.k = scalar<int>(node[3], path + "[3]", "an integer");
  t.coefficient = finite_scalar(node[4], path + "[4]");
  const int n_min = family_min_order(zero_family(t.family));
  if (t.n < n_min || t.n > kMaxPsiOrder) {
    throw SchemaError(path + "[1]", fmt::format("n must lie in [{}, {}]", n_min, kMaxPsiOrder));
  }
  if (t.m < 1) throw SchemaError(path + "[2]", "m must be >= 1");
  if (std::abs(t.k) > t.n) throw SchemaError(path + "[3]", "|k| must not exceed n");
  return t;
}

// ------------------------------------------------------------ hex floats

std::string hex(double v) { return fmt::format("{:a}", v); }

double parse_hex(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.size() < 3 || text.substr(0, 2) != "0x") throw FormatError("bad hex float");
  text.remove_prefix(2);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v,
                                         std::chars_format::hex);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw FormatError("bad hex float");
  return negative ? -v : v;
}

std::uint32_t crc_of(std::string_view bytes) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

std::string expect_field(std::istringstream& line, std::string_view key) {
  std::string k, v;
  if (!(line >> k >> v) || k != key) throw FormatError("zero table: expected " + std::string(key));
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw FormatError("bad integer");
  return v;
}

std::string format_g17(double v) { return fmt::format("{:.17g}", v); }

double parse_decimal(std::string_view text, int line, int column) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "'", line, column);
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------- field specs

FieldSpecDocument read_field_spec(std::string_view text) {
  const auto root = require_map(text);
  reject_unknown_keys(root, {"radius", "units", "modes", "preset"}, "");

  FieldSpecDocument doc;
  if (!root["radius"]) throw SchemaError("radius", "missing");
  doc.radius = positive_scalar(root["radius"], "radius");
  if (root["units"]) doc.units = scalar<std::string>(root["units"], "units", "a string");

  const bool has_modes = static_cast<bool>(root["modes"]);
  const bool has_preset = static_cast<bool>(root["preset"]);
  if (has_modes == has_preset) throw SchemaError("$", "exactly one of 'modes' or 'preset' required");

  if (has_modes) {
    const auto modes = root["modes"];
    if (!modes.IsSequence()) throw SchemaError("modes", "expected a list" + where(modes));
    std::set<std::tuple<int, int, int, int>> seen;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      const auto path = fmt::format("modes[{}]", i);
      const auto t = mode_term(modes[i], path);
      if (!seen.emplace(static_cast<int>(t.family), t.n, t.m, t.k).second) {
        throw SchemaError(path, fmt::format("duplicate mode ({}, {}, {}, {})", to_string(t.family),
                                            t.n, t.m, t.k));
      }
      doc.modes.push_back(t);
    }
  } else {
    const auto node = root["preset"];
    if (!node.IsMap()) throw SchemaError("preset", "expected a mapping" + where(node));
    reject_unknown_keys(node, {"name", "direction"}, "preset.");
    if (!node["name"]) throw SchemaError("preset.name", "missing");
    const auto name = scalar<std::string>(node["name"], "preset.name", "a preset name");
    const auto kind = parse_preset_kind(name);
    if (!kind) throw SchemaError("preset.name", "unknown preset '" + name + "'");
    Preset preset;
    preset.kind = *kind;
    if (node["direction"]) preset.direction = vec3_of(node["direction"], "preset.direction");
    doc.preset = preset;
  }
  return doc;
}

FieldSpecDocument read_field_spec_file(const std::filesystem::path& path) {
  return read_field_spec(read_text(path));
}

int max_order(const FieldSpecDocument& doc) {
  int out = 0;
  for (const auto& t : doc.modes) out = std::max(out, t.n);
  return out;
}

SpectralCoefficients to_coefficients(const FieldSpecDocument& doc, BasisPtr basis) {
  if (doc.preset) throw DomainError("field spec: preset documents have no coefficients");
  if (doc.radius != basis->radius()) throw DomainError("field spec: radius differs from basis");
  SpectralCoefficients c(basis);
  for (const auto& t : doc.modes) {
    const auto idx = basis->find(t.family, t.n, t.m, t.k);
    if (!idx) {
      throw DomainError(fmt::format("field spec: mode ({}, {}, {}, {}) outside the basis",
                                    to_string(t.family), t.n, t.m, t.k));
    }
    c[*idx] = t.coefficient;
  }
  return c;
}

// ----------------------------------------------------------------- run config

RunConfigFile read_run_config(std::string_view text) {
  const auto root = require_map(text);
  reject_unknown_keys(root,
                      {"radius", "n_max", "m_max", "grid", "lambda", "nu2", "seed", "fd_samples",
                       "fd_step", "format", "out"},
                      "");
  RunConfigFile cfg;
  if (root["radius"]) cfg.radius = positive_scalar(root["radius"], "radius");
  if (root["n_max"]) cfg.n_max = scalar<int>(root["n_max"], "n_max", "an integer");
  if (root["m_max"]) cfg.m_max = scalar<int>(root["m_max"], "m_max", "an integer");
  if (const auto g = root["grid"]) {
    if (!g.IsSequence() || g.size() != 3) throw SchemaError("grid", "expected [n_r, n_theta, n_phi]");
    cfg.grid = std::array<int, 3>{scalar<int>(g[0], "grid[0]", "an integer"),
                                  scalar<int>(g[1], "grid[1]", "an integer"),
                                  scalar<int>(g[2], "grid[2]", "an integer")};
  }
  if (root["lambda"]) cfg.lambda = finite_scalar(root["lambda"], "lambda");
  if (root["nu2"]) cfg.nu2 = finite_scalar(root["nu2"], "nu2");
  if (root["seed"]) cfg.seed = scalar<std::uint64_t>(root["seed"], "seed", "an unsigned integer");
  if (root["fd_samples"]) cfg.fd_samples = scalar<int>(root["fd_samples"], "fd_samples", "an integer");
  if (root["fd_step"]) cfg.fd_step = positive_scalar(root["fd_step"], "fd_step");
  if (root["format"]) cfg.format = scalar<std::string>(root["format"], "format", "a string");
  if (root["out"]) cfg.out = scalar<std::string>(root["out"], "out", "a string");
  return cfg;
}

RunConfigFile read_run_config_file(const std::filesystem::path& path) {
  return read_run_config(read_text(path));
}

// ----------------------------------------------------------------- zero tables

void write_zero_table(std::ostream& out, const ZeroTable& table) {
  std::string body;
  body += fmt::format("ballspec-zero-table {}\n", kZeroTableVersion);
  body += fmt::format("family {}\n", to_string(table.family));
  body += fmt::format("radius {}\n", hex(table.radius));
  body += fmt::format("n_max {}\n", table.n_max);
  body += fmt::format("m_max {}\n", table.m_max);
  body += fmt::format("residual_bound {}\n", hex(kZeroResidualBound));
  body += fmt::format("count {}\n", table.entries.size());
  for (const auto& e : table.entries) {
    body += fmt::format("{} {} {} {}\n", e.n, e.m, hex(e.zero), hex(e.residual));
  }
  out << body << fmt::format("checksum {:08x}\n", crc_of(body));
}

ZeroTable read_zero_table(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  if (lines.size() < 8) throw FormatError("zero table: truncated");

  std::istringstream header(lines[0]);
  std::string magic;
  int version = 0;
  if (!(header >> magic >> version) || magic != "ballspec-zero-table") {
    throw FormatError("zero table: not a zero-table file");
  }
  if (version != kZeroTableVersion) {
    throw FormatError(fmt::format("zero table: version {} unsupported (expected {})", version,
                                  kZeroTableVersion));
  }

  std::string body;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) body += lines[i] + "\n";
  std::istringstream tail(lines.back());
  const auto stored = expect_field(tail, "checksum");
  if (stored != fmt::format("{:08x}", crc_of(body))) throw FormatError("zero table: checksum mismatch");

  ZeroTable table;
  auto field = [&](std::size_t i, std::string_view key) {
    std::istringstream ss(lines[i]);
    return expect_field(ss, key);
  };
  const auto family = parse_zero_family(field(1, "family"));
  if (!family) throw FormatError("zero table: unknown family");
  table.family = *family;
  table.radius = parse_hex(field(2, "radius"));
  table.n_max = parse_int(field(3, "n_max"));
  table.m_max = parse_int(field(4, "m_max"));
  const double bound = parse_hex(field(5, "residual_bound"));
  const int count = parse_int(field(6, "count"));
  if (count < 0 || lines.size() != static_cast<std::size_t>(count) + 8) {
    throw FormatError("zero table: entry count mismatch");
  }
  for (int i = 0; i < count; ++i) {
    std::istringstream ss(lines[7 + static_cast<std::size_t>(i)]);
    std::string n, m, z, r;
    if (!(ss >> n >> m >> z >> r)) throw FormatError("zero table: malformed entry");
    ZeroEntry e{parse_int(n), parse_int(m), parse_hex(z), parse_hex(r)};
    if (!(e.residual <= bound)) throw FormatError("zero table: residual above recorded bound");
    table.entries.push_back(e);
  }
  return table;
}

void write_zero_table_file(const std::filesystem::path& path, const ZeroTable& table) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    write_zero_table(out, table);
  }
  std::filesystem::rename(tmp, path);
}

ZeroTable read_zero_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("zero table: cannot open " + path.string());
  return read_zero_table(in);
}

ZeroTableCache::ZeroTableCache(std::filesystem::path directory)
    : directory_(std::move(directory)), stats_(std::make_shared<Stats>()) {}

std::optional<ZeroTableCache> ZeroTableCache::from_environment() {
  const char* dir = std::getenv("BALLSPEC_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ZeroTableCache(dir);
}

std::filesystem::path ZeroTableCache::path_for(ZeroFamily family, int n_max, int m_max,
                                               double radius) const {
  std::uint64_t bits = 0;
  static_assert(sizeof(bits) == sizeof(radius));
  std::memcpy(&bits, &radius, sizeof(bits));
  return directory_ / fmt::format("zeros-{}-n{}-m{}-r{:016x}.txt", to_string(family), n_max, m_max,
                                  bits);
}

ZeroTable ZeroTableCache::get(ZeroFamily family, int n_max, int m_max, double radius, bool* hit) {
  const auto path = path_for(family, n_max, m_max, radius);
  if (std::filesystem::exists(path)) {
    try {
      auto table = read_zero_table_file(path);
      if (table.family == family && table.n_max == n_max && table.m_max == m_max &&
          table.radius == radius) {
        ++stats_->hits;
        if (hit) *hit = true;
        return table;
      }
    } catch (const FormatError&) {
    }
  }
  auto table = build_zero_table(family, n_max, m_max, radius);
  std::filesystem::create_directories(directory_);
  write_zero_table_file(path, table);
  ++stats_->misses;
  if (hit) *hit = false;
  return table;
}

ZeroTableSource ZeroTableCache::source() const {
  return [cache = *this](ZeroFamily family, int n_max, int m_max, double radius) mutable {
    return cache.get(family, n_max, m_max, radius);
  };
}

// ------------------------------------------------------------ sample exports

std::optional<SampleFormat> parse_sample_format(std::string_view text) {
  if (text == "csv") return SampleFormat::csv;
  if (text == "vtk") return SampleFormat::vtk;
  return std::nullopt;
}

void export_samples(std::ostream& out, std::span<const Vec3> points, std::span<const Vec3> values,
                    SampleFormat format, std::string_view name) {
  if (points.size() != values.size()) throw MismatchError("export: points/values length mismatch");
  std::string text;
  if (format == SampleFormat::csv) {
    text += "x,y,z,ux,uy,uz\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      const auto& v = values[i];
      text += fmt::format("{},{},{},{},{},{}\n", format_g17(p.x), format_g17(p.y), format_g17(p.z),
                          format_g17(v.x), format_g17(v.y), format_g17(v.z));
    }
  } else {
    const auto n = points.size();
    text += "# vtk DataFile Version 3.0\nballspec samples\nASCII\nDATASET POLYDATA\n";
    text += fmt::format("POINTS {} double\n", n);
    for (const auto& p : points) {
      text += fmt::format("{} {} {}\n", format_g17(p.x), format_g17(p.y), format_g17(p.z));
    }
    if (n > 0) {
      text += fmt::format("VERTICES {} {}\n", n, 2 * n);
      for (std::size_t i = 0; i < n; ++i) text += fmt::format("1 {}\n", i);
    }
    text += fmt::format("POINT_DATA {}\nVECTORS {} double\n", n, name);
    for (const auto& v : values) {
      text += fmt::format("{} {} {}\n", format_g17(v.x), format_g17(v.y), format_g17(v.z));
    }
  }
  out << text;
}

SampleTable read_samples_csv(std::istream& in) {
  SampleTable table;
  std::string line;
  if (!std::getline(in, line) || line != "x,y,z,ux,uy,uz") {
    throw ParseError("expected header x,y,z,ux,uy,uz", 1, 1);
  }
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    double v[6];
    std::size_t start = 0;
    for (int i = 0; i < 6; ++i) {
      const auto comma = line.find(',', start);
      const bool last = i == 5;
      if (last != (comma == std::string::npos)) {
        throw ParseError("expected 6 comma-separated values", row, static_cast<int>(start) + 1);
      }
      const auto end = last ? line.size() : comma;
      v[i] = parse_decimal(std::string_view(line).substr(start, end - start), row,
                           static_cast<int>(start) + 1);
      start = end + 1;
    }
    table.points.push_back({v[0], v[1], v[2]});
    table.values.push_back({v[3], v[4], v[5]});
  }
  return table;
}

// ------------------------------------------------------- coefficient documents

nlohmann::json coefficients_to_json(const SpectralCoefficients& c) {
  const auto& basis = c.basis();
  nlohmann::json doc;
  doc["format"] = "ballspec-coefficients";
  doc["version"] = 1;
  doc["radius"] = basis.radius();
  doc["n_max"] = basis.n_max();
  doc["m_max"] = basis.m_max();
  auto families = nlohmann::json::array();
  for (auto f : basis.families()) families.push_back(std::string(to_string(f)));
  doc["families"] = families;
  auto modes = nlohmann::json::array();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& m = basis.mode(j);
    modes.push_back({{"family", std::string(to_string(m.family))},
                     {"n", m.n},
                     {"m", m.m},
                     {"k", m.k},
                     {"eigenvalue", m.eigenvalue},
                     {"coefficient", c[j]}});
  }
  doc["modes"] = modes;
  return doc;
}

SpectralCoefficients coefficients_from_json(const nlohmann::json& doc, BasisPtr basis) {
  try {
    if (doc.at("format") != "ballspec-coefficients") throw SchemaError("format", "unexpected value");
    if (doc.at("version") != 1) throw SchemaError("version", "unsupported");
    if (doc.at("radius").get<double>() != basis->radius() ||
        doc.at("n_max").get<int>() != basis->n_max() ||
        doc.at("m_max").get<int>() != basis->m_max()) {
      throw MismatchError("coefficient document describes a different basis");
    }
    const auto& modes = doc.at("modes");
    if (!modes.is_array() || modes.size() != basis->size()) {
      throw MismatchError("coefficient document: mode count differs from basis");
    }
    std::vector<double> values(basis->size(), 0.0);
    for (std::size_t j = 0; j < modes.size(); ++j) {
      const auto& e = modes[j];
      const auto family = parse_mode_family(e.at("family").get<std::string>());
      if (!family) throw SchemaError(fmt::format("modes[{}].family", j), "unknown family");
      const auto idx = basis->find(*family, e.at("n").get<int>(), e.at("m").get<int>(),
                                   e.at("k").get<int>());
      if (!idx) throw MismatchError(fmt::format("modes[{}] not in basis", j));
      values[*idx] = e.at("coefficient").get<double>();
    }
    return SpectralCoefficients(std::move(basis), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("$", e.what());
  }
}

}  // namespace ballspec
