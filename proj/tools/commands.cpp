#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ballspec/errors.hpp"
#include "ballspec/iofmt.hpp"
#include "ballspec/presets.hpp"
#include "ballspec/solver.hpp"
#include "ballspec/verify.hpp"

namespace ballspec::cli {
namespace {

using nlohmann::json;

struct ZeroSource {
  std::optional<ZeroTableCache> cache = ZeroTableCache::from_environment();

  ZeroTableSource source() const { return cache ? cache->source() : ZeroTableSource{}; }

  void report(std::ostream& log) const {
    if (cache) {
      log << fmt::format("zero-table cache {}: {} hit(s), {} miss(es)\n",
                         cache->directory().string(), cache->hits(), cache->misses());
    }
  }
};

void validate(const RunConfig& cfg) {
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) throw ConfigError("radius must be positive");
  if (cfg.n_max < 0 || cfg.n_max > kMaxPsiOrder) throw ConfigError("n-max must lie in [0, 64]");
  if (cfg.m_max < 1) throw ConfigError("m-max must be >= 1");
  if (cfg.fd_samples < 1) throw ConfigError("fd-samples must be >= 1");
  if (!(cfg.fd_step > 0.0) || !(cfg.fd_step < 0.1)) throw ConfigError("fd-step must lie in (0, 0.1)");
}

std::string format_or(const RunConfig& cfg, std::string fallback,
                      std::initializer_list<std::string_view> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (auto a : allowed) {
    if (a == f) return f;
  }
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw ConfigError(fmt::format("format '{}' not supported here (use {})", f, list));
}

json mode_json(const Mode& m) {
  return {{"family", std::string(to_string(m.family))}, {"n", m.n}, {"m", m.m}, {"k", m.k}};
}

json fredholm_json(const FredholmReport& r, const Basis& basis) {
  json kernel = json::array();
  for (auto j : r.kernel) kernel.push_back(mode_json(basis.mode(j)));
  json offending = json::array();
  for (auto j : r.offending) offending.push_back(mode_json(basis.mode(j)));
  return {{"solvable", r.solvable},
          {"kernel_dimension", r.kernel_dimension()},
          {"kernel", kernel},
          {"offending", offending},
          {"tau_spec", r.tau_spec},
          {"tau_orth", r.tau_orth}};
}

json classes_json(const std::vector<SobolevDiagnostics>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    out.push_back({{"scale", c.scale == SobolevScale::curl_w ? "W" : "A"},
                   {"order", c.order},
                   {"plain_sum", c.plain_sum},
                   {"weighted_sum", c.weighted_sum},
                   {"tail_fraction", c.tail_fraction},
                   {"decay_exponent", c.decay_exponent ? json(*c.decay_exponent) : json(nullptr)}});
  }
  return out;
}

std::string render_text(const json& doc, const std::string& prefix = "") {
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out += render_text(value, prefix + key + ".");
    } else {
      out += fmt::format("{}{} = {}\n", prefix, key, value.dump());
    }
  }
  return out;
}

struct Prepared {
  FieldSpecDocument doc;
  SolverContext ctx;
  SourceField source;
};

Prepared prepare(const RunConfig& cfg, const SolveArgs& args, const ZeroSource& zeros) {
  validate(cfg);
  if (args.field.empty()) throw ConfigError("--field is required");
  auto doc = read_field_spec_file(args.field);
  if (cfg.radius_given && cfg.radius != doc.radius) {
    throw ConfigError(fmt::format("radius {} differs from the field spec radius {}", cfg.radius,
                                  doc.radius));
  }
  if (cfg.n_max < 1) throw ConfigError("n-max must be >= 1 (curl families require n >= 1)");
  auto ctx = make_context(doc.radius, cfg.n_max, cfg.m_max, cfg.grid[0], cfg.grid[1], cfg.grid[2],
                          zeros.source());
  auto source = doc.preset ? SourceField::from_evaluator(preset_evaluator(*doc.preset, doc.radius),
                                                         std::string(to_string(doc.preset->kind)))
                           : SourceField::from_modes(to_coefficients(doc, ctx.basis));
  return {std::move(doc), std::move(ctx), std::move(source)};
}

}  // namespace

int cmd_eigs(const RunConfig& cfg, const EigsArgs& args, std::ostream& out, std::ostream& log) {
  validate(cfg);
  const auto format = format_or(cfg, "csv", {"csv", "json", "text"});
  std::vector<ModeFamily> families;
  if (args.family == "curl") {
    families = {ModeFamily::curl_plus, ModeFamily::curl_minus};
  } else if (const auto f = parse_mode_family(args.family)) {
    families = {*f};
  } else {
    throw ConfigError("unknown family '" + args.family + "'");
  }
  for (auto f : families) {
    const int n_min = family_min_order(zero_family(f));
    if (cfg.n_max < n_min) {
      throw ConfigError(fmt::format("family {} requires n-max >= {}", to_string(f), n_min));
    }
  }

  const ZeroSource zeros;
  json rows = json::array();
  for (auto f : families) {
    const ModeFamily one[] = {f};
    const auto basis = make_basis(one, cfg.n_max, cfg.m_max, cfg.radius, zeros.source());
    for (const auto& mode : basis->modes()) {
      if (mode.k != -mode.n) continue;
      rows.push_back({{"family", std::string(to_string(f))},
                      {"index", mode.index},
                      {"n", mode.n},
                      {"m", mode.m},
                      {"zero", mode.wavenumber() * cfg.radius},
                      {"eigenvalue", mode.eigenvalue},
                      {"multiplicity", 2 * mode.n + 1}});
    }
  }
  zeros.report(log);

  if (format == "json") {
    out << json{{"radius", cfg.radius}, {"n_max", cfg.n_max}, {"m_max", cfg.m_max}, {"rows", rows}}
               .dump(2)
        << "\n";
    return kOk;
  }
  const bool csv = format == "csv";
  out << (csv ? "family,index,n,m,zero,eigenvalue,multiplicity\n"
              : fmt::format("{:<11} {:>5} {:>3} {:>3} {:>22} {:>24} {:>4}\n", "family", "index", "n",
                            "m", "zero", "eigenvalue", "mult"));
  for (const auto& r : rows) {
    const auto family = r["family"].get<std::string>();
    const auto zero = r["zero"].get<double>();
    const auto eig = r["eigenvalue"].get<double>();
    if (csv) {
      out << fmt::format("{},{},{},{},{},{},{}\n", family, r["index"].get<int>(), r["n"].get<int>(),
                         r["m"].get<int>(), zero, eig, r["multiplicity"].get<int>());
    } else {
      out << fmt::format("{:<11} {:>5} {:>3} {:>3} {:>22} {:>24} {:>4}\n", family,
                         r["index"].get<int>(), r["n"].get<int>(), r["m"].get<int>(), zero, eig,
                         r["multiplicity"].get<int>());
    }
  }
  return kOk;
}

int cmd_solve(int problem, const RunConfig& cfg, const SolveArgs& args, std::ostream& out,
              std::ostream& log) {
  const auto format = format_or(cfg, "json", {"json", "text", "csv", "vtk"});
  const auto& parameter = problem == 1 ? cfg.lambda : cfg.nu2;
  if (!parameter) throw ConfigError(problem == 1 ? "--lambda is required" : "--nu2 is required");

  const ZeroSource zeros;
  const auto prep = prepare(cfg, args, zeros);
  SolveOptions opts;
  opts.residual_samples = static_cast<std::size_t>(cfg.fd_samples);
  opts.relative_step = cfg.fd_step;
  opts.seed = cfg.seed;
  const auto sol = problem == 1 ? solve_problem1(prep.source, *parameter, prep.ctx, opts)
                                : solve_problem2(prep.source, *parameter, prep.ctx, opts);
  zeros.report(log);

  const auto& d = sol.diagnostics;
  json report{{"problem", std::string(to_string(sol.problem))},
              {"parameter", sol.parameter},
              {"radius", prep.doc.radius},
              {"n_max", cfg.n_max},
              {"m_max", cfg.m_max},
              {"grid", cfg.grid},
              {"seed", cfg.seed},
              {"source", prep.source.label()},
              {"solvable", sol.solvable}};
  if (sol.fredholm) report["fredholm"] = fredholm_json(*sol.fredholm, *prep.ctx.basis);
  if (sol.solvable) {
    report["diagnostics"] = {
        {"source_norm", d.source_norm},
        {"relative_span_defect", d.relative_span_defect},
        {"coefficient_residual", d.coefficient_residual},
        {"fd_residual", d.fd_residual ? json(*d.fd_residual) : json(nullptr)},
        {"fd_samples", d.fd_samples},
        {"fd_step", d.fd_step},
    };
    report["source_classes"] = classes_json(d.source_classes);
    report["solution_classes"] = classes_json(d.solution_classes);
  }

  if (!args.coefficients_out.empty() && sol.coefficients) {
    std::ofstream co(args.coefficients_out);
    if (!co) throw ConfigError("cannot write " + args.coefficients_out);
    co << coefficients_to_json(*sol.coefficients).dump(2) << "\n";
  }

  if (format == "csv" || format == "vtk") {
    if (!sol.solvable) {
      log << render_text(report);
    } else {
      const auto u = sol.evaluator();
      const auto points = prep.ctx.grid->points();
      std::vector<Vec3> values;
      values.reserve(points.size());
      for (const auto& p : points) values.push_back(u(p));
      export_samples(out, points, values, *parse_sample_format(format), "u");
      log << render_text(report);
    }
  } else if (format == "text") {
    out << render_text(report);
  } else {
    out << report.dump(2) << "\n";
  }

  if (!sol.solvable) {
    log << fmt::format("not solvable: the source is not orthogonal to the {}-dimensional kernel\n",
                       sol.fredholm->kernel_dimension());
    return kNotSolvable;
  }
  if (args.max_residual && d.fd_residual && *d.fd_residual > *args.max_residual) {
    log << fmt::format("fd residual {:.3e} exceeds {:.3e}\n", *d.fd_residual, *args.max_residual);
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_decompose(const RunConfig& cfg, const SolveArgs& args, std::ostream& out, std::ostream& log) {
  const auto format = format_or(cfg, "json", {"json", "text", "csv"});
  const ZeroSource zeros;
  const auto prep = prepare(cfg, args, zeros);
  const auto split = helmholtz_decompose(prep.source, prep.ctx);
  zeros.report(log);

  const double e = split.energy;
  auto frac = [e](double v) { return e > 0.0 ? v / e : 0.0; };
  json report{{"radius", prep.doc.radius},
              {"n_max", cfg.n_max},
              {"m_max", cfg.m_max},
              {"source", prep.source.label()},
              {"energy", e},
              {"graddiv_energy", split.graddiv_energy()},
              {"curl_energy", split.curl_energy()},
              {"span_defect", split.span_defect},
              {"graddiv_fraction", frac(split.graddiv_energy())},
              {"curl_fraction", frac(split.curl_energy())},
              {"defect_fraction", frac(split.span_defect)},
              {"grid_covers_basis", split.grid_covers_basis}};
  if (!args.coefficients_out.empty()) {
    std::ofstream co(args.coefficients_out);
    if (!co) throw ConfigError("cannot write " + args.coefficients_out);
    co << coefficients_to_json(split.graddiv + split.curl).dump(2) << "\n";
  }
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else if (format == "text") {
    out << render_text(report);
  } else {
    out << "quantity,value\n";
    for (const auto& [k, v] : report.items()) out << k << "," << v.dump() << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& args, std::ostream& out, std::ostream& log) {
  validate(cfg);
  const auto format = format_or(cfg, "text", {"text", "json", "csv"});
  if (!is_suite(args.suite)) throw ConfigError("unknown suite '" + args.suite + "'");
  if (cfg.n_max < 1) throw ConfigError("verify needs n-max >= 1");
  const ZeroSource zeros;
  VerifyConfig vc;
  vc.radius = cfg.radius;
  vc.n_max = cfg.n_max;
  vc.m_max = cfg.m_max;
  vc.grid = cfg.grid;
  vc.seed = cfg.seed;
  vc.fd_samples = static_cast<std::size_t>(cfg.fd_samples);
  vc.fd_step = cfg.fd_step;
  vc.zeros = zeros.source();
  const auto report = run_verification(args.suite, vc);
  zeros.report(log);
  if (format == "json") {
    out << report_to_json(report).dump(2) << "\n";
  } else if (format == "csv") {
    out << report_to_csv(report);
  } else {
    out << report_to_text(report);
  }
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace ballspec::cli
