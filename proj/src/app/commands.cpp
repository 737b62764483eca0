#include "lpspec/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "lpspec/app/config.hpp"
#include "lpspec/app/output.hpp"
#include "lpspec/curvature.hpp"
#include "lpspec/eigenforms.hpp"
#include "lpspec/error.hpp"
#include "lpspec/kernels.hpp"
#include "lpspec/regions.hpp"
#include "lpspec/volume.hpp"
#include "lpspec/warping.hpp"

namespace lpspec::app {

namespace {

using Points = std::vector<std::pair<double, double>>;

const char* const kBlue = "#1f5fa8";
const char* const kRed = "#c0392b";
const char* const kGreen = "#2e8b57";
const char* const kGray = "#777777";

json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

/// Collects outputs of one run and writes the manifest last.
class Emitter {
 public:
  Emitter(std::string subcommand, const json& config, const RunOptions& opt)
      : subcommand_(std::move(subcommand)), config_(config), opt_(opt) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec || !std::filesystem::is_directory(opt.out_dir)) {
      throw Error(ErrorCode::IoError, "cannot create output directory " + opt.out_dir.string());
    }
    if (!opt.no_timestamp) stamp_ = utc_timestamp();
  }

  void csv(const std::string& name, const CsvTable& table) {
    write_atomic(opt_.out_dir / name, table.str());
    files_.push_back(name);
  }

  void svg(const std::string& name, const SvgPlot& plot) {
    write_atomic(opt_.out_dir / name, plot.render(stamp_));
    files_.push_back(name);
  }

  json& tolerances() { return tolerances_; }
  json& grid() { return grid_; }
  json& results() { return results_; }

  void finish(int exit_code) {
    json m;
    m["tool"] = "lpspec";
    m["version"] = kToolVersion;
    m["subcommand"] = subcommand_;
    const std::string canonical = config_.dump();
    m["config_hash"] = "fnv1a64:" + hex64(fnv1a64(canonical));
    m["config"] = config_;
    json versions;
    versions["compiler"] = __VERSION__;
    versions["cplusplus"] = static_cast<long>(__cplusplus);
#ifdef _OPENMP
    versions["openmp"] = _OPENMP;
#endif
    versions["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH);
    m["versions"] = versions;
    m["threads_requested"] = opt_.threads;
    m["tolerances"] = tolerances_.is_null() ? json::object() : tolerances_;
    m["grid"] = grid_.is_null() ? json::object() : grid_;
    m["results"] = results_.is_null() ? json::object() : results_;
    m["outputs"] = files_;
    m["exit_code"] = exit_code;
    if (!stamp_.empty()) m["timestamp"] = stamp_;
    write_atomic(opt_.out_dir / "manifest.json", m.dump(2) + "\n");
  }

 private:
  std::string subcommand_;
  json config_;
  RunOptions opt_;
  std::string stamp_;
  json tolerances_;
  json grid_;
  json results_;
  std::vector<std::string> files_;
};

Points boundary_points(const ParabolicRegion& region, double x_max, int samples) {
  Points pts;
  for (int i = 0; i < samples; ++i) {
    const double x = -x_max + 2.0 * x_max * i / (samples - 1);
    const cplx z = region.boundary_point(x);
    pts.emplace_back(z.real(), z.imag());
  }
  return pts;
}

int sample_count(const Section& cfg, std::string_view key, int fallback, int minimum) {
  const int n = cfg.integer(key, fallback);
  if (n < minimum) {
    throw Error(ErrorCode::ConfigError,
                "'" + std::string(key) + "' must be at least " + std::to_string(minimum));
  }
  return n;
}

quad::SimpsonOptions parse_quadrature(const Section& cfg) {
  quad::SimpsonOptions opt;
  if (!cfg.has("quadrature")) return opt;
  const Section q = cfg.child("quadrature", {"rel_tol", "abs_tol", "max_depth"});
  opt.rel_tol = q.number("rel_tol", opt.rel_tol);
  opt.abs_tol = q.number("abs_tol", opt.abs_tol);
  opt.max_depth = q.integer("max_depth", opt.max_depth);
  if (!(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0) || opt.max_depth < opt.min_depth) {
    throw Error(ErrorCode::ConfigError, "quadrature tolerances must be positive");
  }
  return opt;
}

int cmd_region(const json& raw, const std::filesystem::path&, Emitter& out) {
  const Section cfg(raw, "", {"mode", "n", "N", "k", "p", "a0", "canonicalize", "eigenvalues",
                              "s_max", "samples"});
  const std::string mode = cfg.string("mode", "warped");
  SpectralParams params;
  if (mode == "warped") {
    if (cfg.has("N")) throw Error(ErrorCode::ConfigError, "'N' applies to quotient mode");
    params = {cfg.integer("n"), cfg.integer("k"), cfg.exponent("p"), cfg.number("a0", 1.0)};
  } else if (mode == "quotient") {
    if (cfg.has("n") || cfg.has("a0")) {
      throw Error(ErrorCode::ConfigError, "quotient mode takes 'N' and fixes a0 = 1");
    }
    params = SpectralParams::quotient(cfg.integer("N"), cfg.integer("k"), cfg.exponent("p"));
  } else {
    throw Error(ErrorCode::ConfigError, "'mode' must be warped or quotient");
  }
  params.validate();
  const bool canonicalize = cfg.boolean("canonicalize", false);
  const int k_input = params.k;
  if (canonicalize) params.k = canonical_degree(params.k, params.n);
  const ParabolicRegion region = region_params(params);

  const int samples = sample_count(cfg, "samples", 401, 3);
  const double x_max =
      cfg.number("s_max", 2.0 + std::sqrt(std::max(0.0, region.vertex)) + region.im_half_width);
  if (!(x_max > 0.0)) throw Error(ErrorCode::ConfigError, "'x_max' must be positive");
  const std::vector<double> eigs = cfg.has("eigenvalues") ? cfg.numbers("eigenvalues")
                                                          : std::vector<double>{};

  CsvTable table({"s", "re", "im"});
  const Points pts = boundary_points(region, x_max, samples);
  for (int i = 0; i < samples; ++i) {
    const double x = -x_max + 2.0 * x_max * i / (samples - 1);
    table.add_row({x, pts[i].first, pts[i].second});
  }
  out.csv("region_boundary.csv", table);

  char title[160];
  std::snprintf(title, sizeof title, "Parabolic region: n=%d k=%d p=%s a0=%g", params.n, params.k,
                format_double(params.p).c_str(), params.a0);
  SvgPlot plot(title, "Re lambda", "Im lambda");
  plot.add_area(pts, kBlue, "region");
  plot.add_points({{region.vertex, 0.0}}, kRed, "vertex");
  if (!eigs.empty()) {
    Points marks;
    for (double e : eigs) marks.emplace_back(e, 0.0);
    plot.add_points(marks, kGreen, "eigenvalues");
  }
  out.svg("region.svg", plot);

  out.grid() = {{"s_max", x_max}, {"samples", samples}};
  out.results() = {{"n", params.n},
                   {"k", params.k},
                   {"k_input", k_input},
                   {"p", number_or_string(params.p)},
                   {"a0", params.a0},
                   {"vertex", region.vertex},
                   {"im_half_width", region.im_half_width},
                   {"real_minimum", region.real_minimum()}};
  return 0;
}

AngularData parse_angular(const Section& cfg) {
  AngularData ang;
  if (!cfg.has("angular")) return ang;
  const Section a = cfg.child(
      "angular", {"eta_norm_const", "chi_lap", "chi_grad", "chi_lower", "chi_upper"});
  ang.eta_norm_const = a.number("eta_norm_const", ang.eta_norm_const);
  ang.chi_lap = a.number("chi_lap", ang.chi_lap);
  ang.chi_grad = a.number("chi_grad", ang.chi_grad);
  ang.chi_lower = a.number("chi_lower", ang.chi_lower);
  ang.chi_upper = a.number("chi_upper", ang.chi_upper);
  ang.validate();
  return ang;
}

int cmd_residual(const json& raw, const std::filesystem::path& base, Emitter& out) {
  const Section cfg(raw, "", {"warping", "mode", "n", "N", "k", "p", "lambda0", "s", "schedule",
                              "angular", "quadrature"});
  const std::string mode_name = cfg.string("mode", "warped");
  ResidualMode mode;
  OperatorContext ctx;
  std::optional<WarpingFunction> f;
  if (mode_name == "warped") {
    mode = ResidualMode::Warped;
    if (cfg.has("N")) throw Error(ErrorCode::ConfigError, "'N' applies to hyperbolic mode");
    ctx.n = cfg.integer("n");
    f = parse_warping(cfg.child("warping", kWarpingKeys), base);
  } else if (mode_name == "hyperbolic") {
    mode = ResidualMode::Hyperbolic;
    if (cfg.has("n")) throw Error(ErrorCode::ConfigError, "hyperbolic mode takes 'N'");
    ctx.n = cfg.integer("N") + 1;
    f = cfg.has("warping") ? parse_warping(cfg.child("warping", kWarpingKeys), base)
                           : WarpingFunction::hyperbolic_sine(1.0);
  } else {
    throw Error(ErrorCode::ConfigError, "'mode' must be warped or hyperbolic");
  }
  ctx.k = cfg.integer("k");
  ctx.lambda0 = cfg.number("lambda0", 0.0);
  ctx.a0 = f->a0();
  ctx.validate();
  const double p = cfg.exponent("p");
  const double s = cfg.number("s", 0.0);
  const auto schedule = cfg.pairs("schedule");
  const AngularData ang = parse_angular(cfg);
  const quad::SimpsonOptions qopt = parse_quadrature(cfg);

  const SweepResult sweep =
      decay_sweep_table(*f, p, ctx, ang, mode, schedule, s, Execution::Parallel, qopt);

  CsvTable table({"A", "B", "s", "I", "II", "III", "IV", "V", "A1", "A2", "A3",
                  "direct_residual", "norm", "ratio"});
  Points ratio_pts, direct_pts;
  json ratios = json::array();
  for (const auto& row : sweep.rows) {
    const auto& b = row.breakdown;
    std::vector<double> values{row.A, row.B, row.s};
    values.insert(values.end(), b.terms.begin(), b.terms.end());
    values.push_back(b.direct_residual);
    values.push_back(b.omega_norm_p);
    values.push_back(b.ratio);
    table.add_row(values);
    ratio_pts.emplace_back(row.B - row.A, b.ratio);
    direct_pts.emplace_back(row.B - row.A, b.direct_ratio);
    ratios.push_back({{"A", row.A}, {"B", row.B}, {"ratio", b.ratio},
                      {"direct_ratio", b.direct_ratio}, {"triangle_bound", b.triangle_bound}});
  }
  out.csv("residual_sweep.csv", table);

  SvgPlot plot("Residual decay (" + std::string(to_string(mode)) + ")", "B - A",
               "||D w - lambda w||_p / ||w||_p");
  plot.set_log_x(true);
  plot.set_log_y(true);
  plot.add_line(ratio_pts, kBlue, "term sum");
  plot.add_points(ratio_pts, kBlue);
  plot.add_line(direct_pts, kRed, "direct");
  plot.add_points(direct_pts, kRed);
  out.svg("residual_decay.svg", plot);

  const cplx lambda = sweep.rows.front().breakdown.lambda;
  out.tolerances() = {{"quadrature_rel_tol", qopt.rel_tol},
                      {"quadrature_abs_tol", qopt.abs_tol},
                      {"quadrature_max_depth", qopt.max_depth},
                      {"decay_slack", 1.05}};
  out.grid() = {{"schedule", schedule}};
  out.results() = {{"mode", to_string(mode)},
                   {"n", ctx.n},
                   {"k", ctx.k},
                   {"p", p},
                   {"s", s},
                   {"lambda", {lambda.real(), lambda.imag()}},
                   {"rows", ratios},
                   {"decaying", sweep.decaying},
                   {"strictly_decreasing", sweep.strictly_decreasing}};
  return sweep.decaying ? 0 : exit_code_for(ErrorCode::NotDecaying);
}

int cmd_volume(const json& raw, const std::filesystem::path&, Emitter& out) {
  const Section cfg(raw, "", {"a0", "eps", "K", "s", "t", "n", "r_max", "step", "window",
                              "ratio_r", "csv_stride", "bounds_tol"});
  PiecewiseQ q;
  q.a0 = cfg.number("a0", 1.0);
  q.eps = cfg.number("eps", 0.0);
  q.K = cfg.number("K", std::sqrt(q.a0 + q.eps));
  q.s = cfg.number("s", 0.0);
  q.t = cfg.number("t", q.s);
  q.validate();
  const int n = cfg.integer("n");
  const double r_max = cfg.number("r_max", 50.0);
  const double step = cfg.number("step", 0.0);
  const int stride = sample_count(cfg, "csv_stride", 100, 1);
  const double bounds_tol = cfg.number("bounds_tol", 1e-8);

  const SturmSolution sol = solve_sturm(q, r_max, step);
  const auto window = cfg.has("window") ? cfg.pair("window")
                                        : std::pair{r_max * 2.0 / 3.0, r_max};
  const GrowthEstimate growth = growth_rate(sol, n, window);
  const BoundsCheck bounds = check_bounds(sol, q, bounds_tol);

  std::vector<double> y(sol.u.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::pow(sol.u[i], n - 1);
  std::vector<double> cumulative(y.size());
  quad::cumulative_simpson(y, sol.step, cumulative);

  CsvTable table({"r", "u", "log_volume_integral"});
  Points log_vol;
  for (std::size_t i = 0; i < sol.r.size(); i += static_cast<std::size_t>(stride)) {
    const double lv = std::log(cumulative[i]);
    table.add_row({sol.r[i], sol.u[i], lv});
    if (std::isfinite(lv)) log_vol.emplace_back(sol.r[i], lv);
  }
  out.csv("volume.csv", table);

  SvgPlot plot("Volume integral growth", "r", "log int_0^r u^(n-1)");
  plot.add_line(log_vol, kBlue, "log volume integral");
  const double target = (n - 1) * std::sqrt(q.b());
  if (!log_vol.empty()) {
    const auto& [r_end, v_end] = log_vol.back();
    const double r_start = window.first;
    plot.add_line({{r_start, v_end - target * (r_end - r_start)}, {r_end, v_end}}, kRed,
                  "slope (n-1)sqrt(a0+eps)");
  }
  out.svg("volume.svg", plot);

  out.tolerances() = {{"bounds_tol", bounds_tol}};
  out.grid() = {{"r_max", r_max}, {"step", sol.step}, {"nodes", sol.r.size()},
                {"csv_stride", stride}, {"window", {window.first, window.second}}};
  json results = {{"gamma_hat", growth.gamma_hat},
                  {"gamma_target", target},
                  {"gamma_relative_error", growth.gamma_hat / target - 1.0},
                  {"fit_residual", growth.fit_residual},
                  {"fit_points", growth.points},
                  {"lower_ok", bounds.lower_ok},
                  {"upper_ok", bounds.upper_ok},
                  {"max_violation", bounds.max_violation}};
  if (cfg.has("ratio_r")) results["volume_ratio"] = volume_ratio(sol, n, cfg.number("ratio_r"));
  out.results() = results;
  return 0;
}

int cmd_curvature(const json& raw, const std::filesystem::path& base, Emitter& out) {
  const Section cfg(raw, "", {"warping", "secN", "n", "r_range", "samples", "conformal_x",
                              "heat_kernel"});
  const WarpingFunction f = parse_warping(cfg.child("warping", kWarpingKeys), base);
  const auto secN = cfg.pair("secN");
  const int n = cfg.integer("n");
  const auto [r0, r1] = cfg.pair("r_range");
  if (!(r1 > r0)) throw Error(ErrorCode::ConfigError, "'r_range' needs r1 > r0");
  const int samples = sample_count(cfg, "samples", 101, 2);

  CsvTable table({"r", "sec_radial", "sph_lo", "sph_hi"});
  Points radial, lo, hi;
  double tail_dev = 0.0;
  double ricci_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double r = r0 + (r1 - r0) * i / (samples - 1);
    const CurvatureReport rep = sectional(f, r, secN, n);
    table.add_row({r, rep.sec_radial, rep.sec_spherical.first, rep.sec_spherical.second});
    radial.emplace_back(r, rep.sec_radial);
    lo.emplace_back(r, rep.sec_spherical.first);
    hi.emplace_back(r, rep.sec_spherical.second);
    ricci_min = std::min(ricci_min, rep.ricci_lower);
    if (i == samples - 1) {
      tail_dev = std::max({std::abs(rep.sec_radial + f.a0()),
                           std::abs(rep.sec_spherical.first + f.a0()),
                           std::abs(rep.sec_spherical.second + f.a0())});
    }
  }
  out.csv("curvature.csv", table);

  SvgPlot plot("Sectional curvature bracket", "r", "sectional curvature");
  plot.add_line(radial, kBlue, "radial");
  plot.add_line(lo, kRed, "spherical lo");
  plot.add_line(hi, kGreen, "spherical hi");
  out.svg("curvature.svg", plot);

  json results = {{"family", to_string(f.family())},
                  {"a0", f.a0()},
                  {"ricci_lower_min", ricci_min},
                  {"tail_deviation_from_minus_a0", tail_dev}};
  if (cfg.has("conformal_x")) {
    json values = json::array();
    for (double x : cfg.numbers("conformal_x")) {
      values.push_back({{"x", x}, {"value", conformal_factor(f, f.a0(), x)}});
    }
    results["conformal_factor"] = values;
  }
  if (cfg.has("heat_kernel")) {
    const Section h = cfg.child("heat_kernel", {"K2", "t", "scalar"});
    results["heat_kernel_bound"] =
        heat_kernel_bound(h.number("K2"), h.number("t"), h.number("scalar"));
  }
  out.grid() = {{"r_range", {r0, r1}}, {"samples", samples}};
  out.results() = results;
  return 0;
}

int cmd_classb(const json& raw, const std::filesystem::path& base, Emitter& out) {
  const Section cfg(raw, "", {"warping", "window", "tol", "growth_floor", "samples", "hartman"});
  const WarpingFunction f = parse_warping(cfg.child("warping", kWarpingKeys), base);
  const auto window = cfg.pair("window");
  const double tol = cfg.number("tol", 1e-6);
  const double floor = cfg.number("growth_floor", 1e3);
  const int samples = sample_count(cfg, "samples", 2001, 2);
  const ClassBReport rep = class_b_report(f, window, tol, floor, static_cast<std::size_t>(samples));

  CsvTable table({"r", "dev_first", "dev_second"});
  Points d1, d2;
  const int rows = std::min(samples, 501);
  for (int i = 0; i < rows; ++i) {
    const double r = window.first + (window.second - window.first) * i / (rows - 1);
    const double a = f.first_deviation(r);
    const double b = f.second_deviation(r);
    table.add_row({r, a, b});
    d1.emplace_back(r, std::abs(a));
    d2.emplace_back(r, std::abs(b));
  }
  out.csv("classb.csv", table);
  SvgPlot plot("Class B deviations", "r", "|deviation|");
  plot.set_log_y(true);
  plot.add_line(d1, kBlue, "|(f'/f)^2 - a0|");
  plot.add_line(d2, kRed, "|f''/f - a0|");
  out.svg("classb.svg", plot);

  json results = {{"family", to_string(f.family())},
                  {"verdict", rep.verdict},
                  {"sup_dev_first", rep.sup_dev_first},
                  {"sup_dev_second", rep.sup_dev_second},
                  {"min_tail_value", rep.min_tail_value},
                  {"samples", rep.samples}};
  json grid = {{"window", {window.first, window.second}}, {"samples", samples}};
  if (cfg.has("hartman")) {
    const Section h = cfg.child("hartman", {"q", "lambda", "T0", "t_end", "count"});
    const RadialFunction q = parse_perturbation(h.child("q", kPerturbationKeys));
    const double lambda = h.number("lambda");
    const double T0 = h.number("T0", 0.0);
    const HartmanGrid hg{h.number("t_end"), static_cast<std::size_t>(sample_count(h, "count", 201, 2))};
    const HartmanReport hr = hartman_check(q, lambda, T0, hg);
    CsvTable ht({"t", "Q", "scaled", "ratio_bound"});
    for (std::size_t i = 0; i < hr.t.size(); ++i) {
      ht.add_row({hr.t[i], hr.Q_values[i], hr.scaled_values[i],
                  std::abs(q(hr.t[i])) / (2.0 * lambda)});
    }
    out.csv("hartman.csv", ht);
    results["hartman"] = {{"existence_ok", hr.existence_ok},
                          {"ratio_bound_ok", hr.ratio_bound_ok},
                          {"integrability_ok", hr.integrability_ok},
                          {"square_integrability_ok", hr.square_integrability_ok},
                          {"decay_ok", hr.decay_ok},
                          {"all_ok", hr.all_ok()}};
    grid["hartman"] = {{"T0", T0}, {"t_end", hg.t_end}, {"count", hg.count}};
  }
  out.tolerances() = {{"tol", tol}, {"growth_floor", floor}};
  out.grid() = grid;
  out.results() = results;
  return 0;
}

std::vector<cplx> read_queries(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read query file " + path.string());
  std::vector<cplx> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im)) {
      if (first) {
        first = false;
        continue;
      }
      throw Error(ErrorCode::ConfigError, "malformed query row: " + line);
    }
    first = false;
    out.emplace_back(re, im);
  }
  return out;
}

int cmd_spectrum(const json& raw, const std::filesystem::path& base, Emitter& out) {
  const Section cfg(raw, "", {"N", "k", "p", "eigenvalues", "queries", "query_file", "tol",
                              "s_max", "samples"});
  const SpectralParams params =
      SpectralParams::quotient(cfg.integer("N"), cfg.integer("k"), cfg.exponent("p"));
  const std::vector<double> eigs =
      cfg.has("eigenvalues") ? cfg.numbers("eigenvalues") : std::vector<double>{};
  const SpectrumModel model = assemble_spectrum(params, eigs);
  const double tol = cfg.number("tol", 1e-9);

  std::vector<cplx> queries;
  if (cfg.has("queries")) {
    for (const auto& [re, im] : cfg.pairs("queries")) queries.emplace_back(re, im);
  }
  if (cfg.has("query_file")) {
    std::filesystem::path file = cfg.string("query_file");
    if (file.is_relative()) file = base / file;
    const auto more = read_queries(file);
    queries.insert(queries.end(), more.begin(), more.end());
  }

  const std::vector<unsigned char> inside =
      kernels::omp::contains_batch(model.region, queries, tol);
  CsvTable table({"re", "im", "in_region", "near_eigenvalue", "member"});
  Points hit, miss;
  std::size_t members = 0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    bool near = false;
    for (double e : model.isolated_eigenvalues) near = near || std::abs(queries[i] - e) <= tol;
    const bool member = inside[i] || near;
    members += member;
    table.add_row({queries[i].real(), queries[i].imag(), inside[i] ? 1.0 : 0.0, near ? 1.0 : 0.0,
                   member ? 1.0 : 0.0});
    (member ? hit : miss).emplace_back(queries[i].real(), queries[i].imag());
  }
  out.csv("spectrum_membership.csv", table);

  const int samples = sample_count(cfg, "samples", 401, 3);
  const double x_max = cfg.number("s_max", 2.0 + std::sqrt(std::max(0.0, model.region.vertex)) +
                                               model.region.im_half_width);
  CsvTable boundary({"s", "re", "im"});
  const Points pts = boundary_points(model.region, x_max, samples);
  for (int i = 0; i < samples; ++i) {
    boundary.add_row({-x_max + 2.0 * x_max * i / (samples - 1), pts[i].first, pts[i].second});
  }
  out.csv("spectrum_boundary.csv", boundary);

  SvgPlot plot("Spectrum of the quotient", "Re lambda", "Im lambda");
  plot.add_area(pts, kBlue, "essential region");
  if (!eigs.empty()) {
    Points marks;
    for (double e : model.isolated_eigenvalues) marks.emplace_back(e, 0.0);
    plot.add_points(marks, kRed, "eigenvalues");
  }
  if (!hit.empty()) plot.add_points(hit, kGreen, "member queries");
  if (!miss.empty()) plot.add_points(miss, kGray, "non-member queries");
  out.svg("spectrum.svg", plot);

  out.tolerances() = {{"membership_tol", tol}};
  out.grid() = {{"s_max", x_max}, {"samples", samples}};
  out.results() = {{"N", params.n - 1},
                   {"k", params.k},
                   {"p", number_or_string(params.p)},
                   {"vertex", model.region.vertex},
                   {"im_half_width", model.region.im_half_width},
                   {"eigenvalues", model.isolated_eigenvalues},
                   {"queries", queries.size()},
                   {"members", members}};
  return 0;
}

using Handler = std::function<int(const json&, const std::filesystem::path&, Emitter&)>;

struct Entry {
  SubcommandInfo info;
  Handler handler;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"region", "Boundary and plot of the parabolic L^p region",
        "region_boundary.csv: s,re,im (boundary point vertex + (s + i w)^2)"},
       cmd_region},
      {{"residual", "Approximate eigenform residual sweep",
        "residual_sweep.csv: A,B,s,I,II,III,IV,V,A1,A2,A3,direct_residual,norm,ratio"},
       cmd_residual},
      {{"volume", "Sturm comparison solution and volume growth rate",
        "volume.csv: r,u,log_volume_integral"},
       cmd_volume},
      {{"curvature", "Sectional curvature bracket of the warped product",
        "curvature.csv: r,sec_radial,sph_lo,sph_hi"},
       cmd_curvature},
      {{"classb", "Class B tail report and optional Hartman conditions",
        "classb.csv: r,dev_first,dev_second; hartman.csv: t,Q,scaled,ratio_bound"},
       cmd_classb},
      {{"spectrum", "Spectrum of a cusp-free quotient and query membership",
        "spectrum_membership.csv: re,im,in_region,near_eigenvalue,member; "
        "spectrum_boundary.csv: s,re,im"},
       cmd_spectrum},
  };
  return table;
}

}  // namespace

const std::vector<SubcommandInfo>& subcommands() {
  static const std::vector<SubcommandInfo> infos = [] {
    std::vector<SubcommandInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

int run_subcommand(std::string_view name, const RunOptions& options, std::ostream& err) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.info.name == name) entry = &e;
  }
  if (entry == nullptr) {
    err << "error: unknown subcommand '" << name << "'\n";
    return exit_code_for(ErrorCode::ConfigError);
  }
  try {
    if (options.threads < 0) throw Error(ErrorCode::ConfigError, "--threads must be >= 0");
    kernels::set_threads(options.threads);
    const json config = load_config(options.config);
    Emitter out(std::string(name), config, options);
    const int code = entry->handler(config, options.config.parent_path(), out);
    out.finish(code);
    if (code != 0) err << "error: " << name << " finished with exit code " << code << "\n";
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return exit_code_for(ErrorCode::ConfigError);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(ErrorCode::IoError);
  }
}

}  // namespace lpspec::app
