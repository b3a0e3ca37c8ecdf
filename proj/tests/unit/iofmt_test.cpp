#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ballspec/errors.hpp"
#include "ballspec/iofmt.hpp"

using namespace ballspec;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ballspec_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(FieldSpec, MinimalModes) {
  const auto doc = read_field_spec("radius: 1\nmodes:\n  - [curl_plus, 1, 1, 0, 1.0]\n");
  EXPECT_EQ(doc.radius, 1.0);
  ASSERT_EQ(doc.modes.size(), 1u);
  EXPECT_EQ(doc.modes[0].family, ModeFamily::curl_plus);
  EXPECT_EQ(doc.modes[0].coefficient, 1.0);
  EXPECT_FALSE(doc.preset);
  EXPECT_EQ(max_order(doc), 1);
}

TEST(FieldSpec, Preset) {
  const auto doc =
      read_field_spec("radius: 2.0\npreset: {name: constant, direction: [0, 0, 1]}\n");
  ASSERT_TRUE(doc.preset);
  EXPECT_EQ(doc.preset->kind, PresetKind::constant);
  EXPECT_EQ(doc.preset->direction, (Vec3{0, 0, 1}));
  EXPECT_EQ(max_order(doc), 0);
}

TEST(FieldSpec, DuplicateModeNamed) {
  try {
    read_field_spec("radius: 1\nmodes:\n  - [graddiv, 2, 1, 1, 1.0]\n  - [graddiv, 2, 1, 1, 2.0]\n");
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "modes[1]");
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(FieldSpec, SchemaViolations) {
  EXPECT_THROW(read_field_spec("radius: 1\nmodes: []\ncolour: red\n"), SchemaError);
  EXPECT_THROW(read_field_spec("radius: 1\n"), SchemaError);
  EXPECT_THROW(read_field_spec("modes:\n  - [curl_plus, 1, 1, 0, 1.0]\n"), SchemaError);
  EXPECT_THROW(read_field_spec("radius: 1\nmodes:\n  - [curl_plus, 0, 1, 0, 1.0]\n"), SchemaError);
  EXPECT_THROW(read_field_spec("radius: 1\nmodes:\n  - [curl_plus, 1, 1, 2, 1.0]\n"), SchemaError);
  EXPECT_THROW(read_field_spec("radius: 1\nmodes:\n  - [curl, 1, 1, 0, 1.0]\n"), SchemaError);
  EXPECT_THROW(read_field_spec("radius: -1\nmodes:\n  - [graddiv, 0, 1, 0, 1.0]\n"), SchemaError);
  EXPECT_THROW(read_field_spec("radius: 1\npreset: {name: swirl}\n"), SchemaError);
}

TEST(FieldSpec, ParseErrorCarriesPosition) {
  try {
    read_field_spec("radius: 1\nmodes: [\n  [curl_plus, 1, 1, 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 2);
    EXPECT_GE(e.column(), 1);
  }
}

TEST(FieldSpec, ToCoefficients) {
  const auto basis = make_basis(kAllFamilies, 2, 2, 1.0);
  const auto doc = read_field_spec(
      "radius: 1\nmodes:\n  - [curl_minus, 2, 2, -1, 0.5]\n  - [graddiv, 0, 1, 0, -2]\n");
  const auto c = to_coefficients(doc, basis);
  EXPECT_EQ(c.at(ModeFamily::curl_minus, 2, 2, -1), 0.5);
  EXPECT_EQ(c.at(ModeFamily::graddiv, 0, 1, 0), -2.0);
  EXPECT_NEAR(c.norm(), std::sqrt(4.25), 1e-15);
  const auto small = make_basis(kAllFamilies, 1, 1, 1.0);
  EXPECT_THROW(to_coefficients(doc, small), DomainError);
}

TEST(RunConfig, AllKeys) {
  const auto cfg = read_run_config(
      "radius: 2\nn_max: 5\nm_max: 2\ngrid: [20, 12, 24]\nlambda: 1.5\nnu2: 0.5\n"
      "seed: 7\nfd_samples: 50\nfd_step: 1.0e-3\nformat: text\nout: r.txt\n");
  EXPECT_EQ(cfg.radius, 2.0);
  EXPECT_EQ(cfg.n_max, 5);
  EXPECT_EQ(cfg.grid, (std::array<int, 3>{20, 12, 24}));
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(cfg.format, "text");
  const auto empty = read_run_config("{}\n");
  EXPECT_FALSE(empty.radius);
  EXPECT_THROW(read_run_config("n_max: 4\nbogus: 1\n"), SchemaError);
  EXPECT_THROW(read_run_config("grid: [1, 2]\n"), SchemaError);
}

TEST(ZeroTableFormat, BitExactRoundTrip) {
  const auto table = build_zero_table(ZeroFamily::curl, 5, 4, 1.25);
  std::stringstream ss;
  write_zero_table(ss, table);
  const auto back = read_zero_table(ss);
  EXPECT_EQ(back, table);
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    EXPECT_EQ(std::bit_cast<std::uint64_t>(back.entries[i].zero),
              std::bit_cast<std::uint64_t>(table.entries[i].zero));
  }
}

TEST(ZeroTableFormat, TamperingRejected) {
  const auto table = build_zero_table(ZeroFamily::graddiv, 3, 2, 1.0);
  std::stringstream ss;
  write_zero_table(ss, table);
  const std::string text = ss.str();

  std::string bad_sum = text;
  const auto pos = bad_sum.rfind("checksum ");
  ASSERT_NE(pos, std::string::npos);
  char& digit = bad_sum[pos + 9];
  digit = digit == '0' ? '1' : '0';
  std::istringstream a(bad_sum);
  EXPECT_THROW(read_zero_table(a), FormatError);

  std::string bad_body = text;
  const auto p = bad_body.find("0x1.");
  ASSERT_NE(p, std::string::npos);
  bad_body[p + 4] = bad_body[p + 4] == 'f' ? 'e' : 'f';
  std::istringstream b(bad_body);
  EXPECT_THROW(read_zero_table(b), FormatError);

  std::string bad_version = text;
  bad_version.replace(bad_version.find("ballspec-zero-table 1"), 21, "ballspec-zero-table 9");
  std::istringstream c(bad_version);
  EXPECT_THROW(read_zero_table(c), FormatError);

  std::istringstream d("");
  EXPECT_THROW(read_zero_table(d), FormatError);
}

TEST(ZeroTableCache, HitAfterMiss) {
  const auto dir = fresh_dir("cache");
  ZeroTableCache cache(dir);
  bool hit = true;
  const auto first = cache.get(ZeroFamily::curl, 4, 3, 1.0, &hit);
  EXPECT_FALSE(hit);
  const auto second = cache.get(ZeroFamily::curl, 4, 3, 1.0, &hit);
  EXPECT_TRUE(hit);
  EXPECT_EQ(first, second);
  EXPECT_EQ(cache.hits(), 1u);
  EXPECT_EQ(cache.misses(), 1u);
  EXPECT_TRUE(fs::exists(cache.path_for(ZeroFamily::curl, 4, 3, 1.0)));
  EXPECT_NE(cache.path_for(ZeroFamily::curl, 4, 3, 1.0), cache.path_for(ZeroFamily::curl, 4, 3, 2.0));

  const auto basis = make_basis(kAllFamilies, 4, 3, 1.0, cache.source());
  EXPECT_EQ(cache.hits(), 2u);
  EXPECT_EQ(basis->size(), make_basis(kAllFamilies, 4, 3, 1.0)->size());
  fs::remove_all(dir);
}

TEST(ZeroTableCache, CorruptFileRebuilt) {
  const auto dir = fresh_dir("corrupt");
  ZeroTableCache cache(dir);
  const auto path = cache.path_for(ZeroFamily::graddiv, 2, 2, 1.0);
  std::ofstream(path) << "garbage\n";
  bool hit = true;
  const auto t = cache.get(ZeroFamily::graddiv, 2, 2, 1.0, &hit);
  EXPECT_FALSE(hit);
  EXPECT_EQ(t, build_zero_table(ZeroFamily::graddiv, 2, 2, 1.0));
  EXPECT_EQ(read_zero_table_file(path), t);
  fs::remove_all(dir);
}

TEST(ZeroTableCache, FromEnvironment) {
  ::unsetenv("BALLSPEC_CACHE_DIR");
  EXPECT_FALSE(ZeroTableCache::from_environment());
  ::setenv("BALLSPEC_CACHE_DIR", "/tmp/ballspec_env_cache", 1);
  const auto c = ZeroTableCache::from_environment();
  ASSERT_TRUE(c);
  EXPECT_EQ(c->directory(), fs::path("/tmp/ballspec_env_cache"));
  ::unsetenv("BALLSPEC_CACHE_DIR");
}

TEST(SampleExport, EmptySets) {
  std::ostringstream csv;
  export_samples(csv, {}, {}, SampleFormat::csv);
  EXPECT_EQ(csv.str(), "x,y,z,ux,uy,uz\n");
  std::istringstream in(csv.str());
  EXPECT_TRUE(read_samples_csv(in).points.empty());

  std::ostringstream vtk;
  export_samples(vtk, {}, {}, SampleFormat::vtk);
  EXPECT_NE(vtk.str().find("POINTS 0 double"), std::string::npos);
}

TEST(SampleExport, CsvRoundTripIsExact) {
  const std::vector<Vec3> pts = {{0.1, -0.2, 1.0 / 3.0}, {1e-300, 2.5, -7.0}};
  const std::vector<Vec3> vals = {{std::acos(-1.0), 0.0, -1e-17}, {1.0, 2.0, 3.0}};
  std::stringstream ss;
  export_samples(ss, pts, vals, SampleFormat::csv);
  const auto back = read_samples_csv(ss);
  EXPECT_EQ(back.points, pts);
  EXPECT_EQ(back.values, vals);
}

TEST(SampleExport, VtkLayout) {
  const std::vector<Vec3> pts = {{0, 0, 0}, {1, 0, 0}};
  const std::vector<Vec3> vals = {{1, 2, 3}, {4, 5, 6}};
  std::ostringstream out;
  export_samples(out, pts, vals, SampleFormat::vtk, "w");
  const auto s = out.str();
  EXPECT_EQ(s.rfind("# vtk DataFile Version", 0), 0u);
  EXPECT_NE(s.find("DATASET POLYDATA"), std::string::npos);
  EXPECT_NE(s.find("POINTS 2 double"), std::string::npos);
  EXPECT_NE(s.find("VECTORS w double"), std::string::npos);
  EXPECT_THROW(export_samples(out, pts, std::vector<Vec3>(1), SampleFormat::csv), MismatchError);
  EXPECT_EQ(parse_sample_format("vtk"), SampleFormat::vtk);
  EXPECT_FALSE(parse_sample_format("png"));
}

TEST(SampleExport, MalformedCsv) {
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(read_samples_csv(bad_header), ParseError);
  std::istringstream bad_row("x,y,z,ux,uy,uz\n1,2,3\n");
  try {
    read_samples_csv(bad_row);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(CoefficientJson, RoundTrip) {
  const auto basis = make_basis(kAllFamilies, 2, 1, 1.0);
  SpectralCoefficients c(basis);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 1.0 / (i + 3.0);
  const auto doc = coefficients_to_json(c);
  EXPECT_EQ(doc.at("format"), "ballspec-coefficients");
  const auto back = coefficients_from_json(nlohmann::json::parse(doc.dump()), basis);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(back[i], c[i]);
  const auto other = make_basis(kAllFamilies, 3, 1, 1.0);
  EXPECT_THROW(coefficients_from_json(doc, other), MismatchError);
  EXPECT_THROW(coefficients_from_json(nlohmann::json::object(), basis), SchemaError);
}

}  // namespace
