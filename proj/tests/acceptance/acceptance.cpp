// Acceptance checks. `acceptance N` runs criterion N; no argument runs all.
// Exit status is 0 only if every selected criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "lpspec/curvature.hpp"
#include "lpspec/eigenforms.hpp"
#include "lpspec/error.hpp"
#include "lpspec/radialop.hpp"
#include "lpspec/regions.hpp"
#include "lpspec/volume.hpp"
#include "lpspec/warping.hpp"

namespace fs = std::filesystem;
using namespace lpspec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<double> s_grid(int count, double lo, double hi) {
  std::vector<double> s(count);
  for (int i = 0; i < count; ++i) s[i] = lo + (hi - lo) * i / (count - 1);
  return s;
}

const std::vector<SpectralParams> kRegionTuples = {
    {3, 0, 1.0, 1.0},       {3, 1, 4.0 / 3.0, 2.0}, {3, 1, 2.0, 1.0}, {3, 0, 2.0, 2.0},
    {4, 0, 4.0 / 3.0, 1.0}, {4, 1, 1.0, 2.0},       {4, 2, 1.0, 1.0}, {4, 2, 2.0, 2.0},
    {6, 0, 2.0, 1.0},       {6, 1, 1.0, 1.0},       {6, 2, 4.0 / 3.0, 2.0}, {6, 3, 1.0, 2.0}};

Outcome region_identity() {
  double worst = 0.0;
  for (const auto& par : kRegionTuples) {
    const auto region = region_params(par);
    const double w = region.im_half_width;
    for (double s : s_grid(200, -5.0, 5.0)) {
      const cplx z = curve_point(par, s);
      const double u = z.real() - region.vertex;
      const double v = z.imag();
      worst = std::max(worst, std::abs(v * v - 4 * w * w * (u + w * w)));
    }
  }
  return {worst <= 1e-10, fmt("max |v^2 - 4w^2(u+w^2)| = %.3e over 12 tuples x 200 s", worst)};
}

Outcome relabel_identity() {
  double worst = 0.0;
  bool unions = true;
  for (const auto& par : kRegionTuples) {
    const OperatorContext ctx{par.n, par.n - par.k, 0.0, par.a0};
    for (double s : s_grid(200, -5.0, 5.0)) {
      const cplx lhs = candidate_lambda(mu_for(par.p, par.n - par.k, par.n, s), ctx);
      // the relabelled curve is traversed with s reversed
      worst = std::max(worst, std::abs(lhs - curve_point(par, -s)));
      worst = std::max(worst, std::abs(lhs - oracle::curve(par.n, par.k, par.p, par.a0, -s)));
    }
    unions = unions && union_identity_check(par.p, par.k, par.n, par.a0, 9, 81, 1e-6);
  }
  return {worst <= 1e-12 && unions,
          fmt("max relabel error %.3e, union identity %s", worst, unions ? "holds" : "FAILS")};
}

Outcome residual_decay() {
  int cases = 0, failures = 0;
  double worst_final = 0.0, worst_direct = 0.0;
  std::string first_failure;
  for (double a0 : {1.0, 2.0}) {
    const auto f = WarpingFunction::hyperbolic_sine(a0);
    std::vector<std::pair<double, double>> schedule;
    const double lens[] = {1e2, 4e2, 1.6e3};
    const double starts[] = {6.0, 12.0, 24.0};
    for (int i = 0; i < 3; ++i) {
      const double A = starts[i] / std::sqrt(a0);
      schedule.emplace_back(A, A + lens[i]);
    }
    for (const auto [n, k] : {std::pair{3, 3}, {4, 3}, {5, 4}}) {
      for (double p : {1.0, 1.5, 2.0}) {
        for (double s : {0.0, 1.0, 3.0}) {
          ++cases;
          const auto t = decay_sweep_table(f, p, {n, k, 0.0, a0}, {}, ResidualMode::Warped, schedule, s);
          const auto& last = t.rows.back().breakdown;
          worst_final = std::max(worst_final, last.ratio);
          worst_direct = std::max(worst_direct, last.direct_ratio);
          const bool ok = t.strictly_decreasing && last.ratio < 0.05 && last.direct_ratio < 0.05;
          if (!ok) {
            ++failures;
            if (first_failure.empty()) {
              first_failure = fmt("; first failure a0=%g n=%d k=%d p=%g s=%g final=%.3f direct=%.3f", a0,
                                  n, k, p, s, last.ratio, last.direct_ratio);
            }
          }
        }
      }
    }
  }
  return {failures == 0, fmt("%d/%d sweeps pass, worst final ratio %.3f, worst direct ratio %.3f", cases - failures,
                             cases, worst_final, worst_direct) +
                             first_failure};
}

Outcome exponential_exactness() {
  double worst_term = 0.0, worst_slope_dev = 0.0;
  for (double a0 : {1.0, 2.0}) {
    const auto f = WarpingFunction::exponential(a0);
    for (const auto [n, k] : {std::pair{3, 1}, {4, 3}, {5, 2}}) {
      for (double p : {1.0, 1.5, 2.0}) {
        std::vector<std::pair<double, double>> schedule;
        double A = 6.0;
        for (double len : {1e2, 4e2, 1.6e3, 6.4e3}) {
          schedule.emplace_back(A, A + len);
          A *= 2.0;
        }
        const auto t = decay_sweep_table(f, p, {n, k, 0.0, a0}, {}, ResidualMode::Warped, schedule, 1.0);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& row : t.rows) {
          for (auto term : {ResidualTerm::I, ResidualTerm::II, ResidualTerm::V}) {
            worst_term = std::max(worst_term, row.breakdown.term(term));
          }
          const double x = std::log(row.B - row.A), y = std::log(row.breakdown.ratio);
          sx += x;
          sy += y;
          sxx += x * x;
          sxy += x * y;
        }
        const double m = static_cast<double>(t.rows.size());
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        worst_slope_dev = std::max(worst_slope_dev, std::abs(slope * p + 1.0));
      }
    }
  }
  return {worst_term < 1e-13 && worst_slope_dev <= 0.1,
          fmt("max I/II/V = %.3e, max |slope/(-1/p) - 1| = %.4f", worst_term, worst_slope_dev)};
}

Outcome fd_oracle() {
  struct Case {
    WarpingFunction f;
    OperatorContext ctx;
    cplx mu;
  };
  const std::vector<Case> corpus = {
      {WarpingFunction::hyperbolic_sine(1.0), {3, 1, 0.0, 1.0}, {-1.0, 0.5}},
      {WarpingFunction::hyperbolic_sine(2.0), {4, 3, 1.5, 2.0}, {0.5, 2.0}},
      {WarpingFunction::hyperbolic_cosine(4.0), {5, 2, 0.0, 4.0}, {-2.0, 1.0}},
      {WarpingFunction::exponential(1.0), {3, 0, 2.0, 1.0}, {-0.5, 3.0}},
      {WarpingFunction::exponential(2.0, 0.5), {6, 2, 0.0, 2.0}, {0.25, -1.0}}};
  double lo = 1e9, hi = 0.0;
  for (const auto& c : corpus) {
    const RadialProfile prof{std::nullopt, c.mu, c.f};
    auto max_err = [&](std::size_t m) {
      const UniformGrid grid{0.5, 3.5, m};
      std::vector<cplx> h(m);
      for (std::size_t i = 0; i < m; ++i) h[i] = std::exp(c.mu * c.f.log_value(grid.node(i)));
      const auto out = delta2_apply_fd(h, c.f, c.ctx, grid);
      double err = 0.0;
      for (std::size_t i = 1; i + 1 < m; ++i) {
        err = std::max(err, std::abs(out[i - 1] - delta2_apply_analytic(prof, c.ctx, grid.node(i))));
      }
      return err;
    };
    const double ratio = max_err(201) / max_err(401);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo >= 3.5 && hi <= 4.5, fmt("error ratios under halving in [%.4f, %.4f] over %zu profiles", lo, hi,
                                      corpus.size())};
}

Outcome volume_growth() {
  double worst_rel = 0.0, worst_violation = 0.0;
  bool bounds = true;
  int count = 0;
  for (double eps : {0.1, 0.01}) {
    for (const auto& [K, s, t, n] : {std::tuple{2.0, 1.0, 2.0, 3}, {3.0, 5.0, 8.0, 3}, {1.5, 2.0, 6.0, 4}}) {
      ++count;
      const PiecewiseQ q{1.0, eps, K, s, t};
      const auto sol = solve_sturm(q, 50.0);
      const auto g = growth_rate(sol, n, {30.0, 50.0});
      const double target = (n - 1) * std::sqrt(1.0 + eps);
      worst_rel = std::max(worst_rel, std::abs(g.gamma_hat / target - 1.0));
      const auto c = check_bounds(sol, q, 1e-8);
      bounds = bounds && c.lower_ok && c.upper_ok;
      worst_violation = std::max(worst_violation, c.max_violation);
    }
  }
  return {worst_rel <= 0.01 && bounds && worst_violation < 1e-8,
          fmt("%d instances, max relative gamma error %.3e, bounds %s, max violation %.3e", count, worst_rel,
              bounds ? "hold" : "FAIL", worst_violation)};
}

Outcome hyperbolic_assembly() {
  constexpr double kTol = 1e-6;
  const std::vector<double> eigenvalues{0.1, 0.2};
  int disagreements = 0, members = 0, total = 0;
  std::mt19937_64 rng(2024);
  for (double p : {1.0, 2.0}) {
    const auto model = assemble_spectrum(SpectralParams::quotient(3, 1, p), eigenvalues);
    const double w = 3.0 * std::abs(1.0 / p - 0.5);
    std::uniform_real_distribution<double> x(0.0, 3.0), y(-1.5 * w - 0.2, 1.5 * w + 0.2);
    std::uniform_real_distribution<double> re(-2.0, 8.0);
    for (int i = 0; i < 1000; ++i) {
      cplx lambda;
      if (i % 4 == 3) {
        lambda = {re(rng), 0.0};
      } else {
        const cplx z(x(rng), y(rng));
        lambda = model.region.vertex + z * z;
      }
      bool brute = oracle::parabola_gap(model.region.vertex, w, lambda) <= kTol;
      for (double e : eigenvalues) brute = brute || std::abs(lambda - e) <= kTol;
      const bool got = model.contains(lambda, kTol);
      members += got;
      disagreements += (got != brute);
      ++total;
    }
  }
  bool rejected = false;
  try {
    assemble_spectrum(SpectralParams::quotient(3, 2, 1.0), eigenvalues);
  } catch (const Error&) {
    rejected = true;
  }
  return {disagreements == 0 && rejected, fmt("%d disagreements on %d queries (%d members), middle degree %s",
                                              disagreements, total, members, rejected ? "rejected" : "ACCEPTED")};
}

Outcome curvature_forms() {
  double worst_form = 0.0, worst_tail = 0.0;
  const std::pair<WarpingFunction, double> forms[] = {{WarpingFunction::hyperbolic_sine(1.0), 1.0},
                                                      {WarpingFunction::exponential(1.0), 0.0},
                                                      {WarpingFunction::hyperbolic_cosine(1.0), -1.0}};
  for (const auto& [f, secN] : forms) {
    for (int i = 0; i < 100; ++i) {
      const double r = 0.1 + 0.3 * i;
      const auto rep = sectional(f, r, {secN, secN}, 4);
      for (double v : {rep.sec_radial, rep.sec_spherical.first, rep.sec_spherical.second}) {
        worst_form = std::max(worst_form, std::abs(v + 1.0));
      }
    }
  }
  const WarpingFunction corpus[] = {
      WarpingFunction::hyperbolic_sine(1.0), WarpingFunction::hyperbolic_sine(2.0, 3.0),
      WarpingFunction::hyperbolic_cosine(2.0, 3.0), WarpingFunction::exponential(0.5, 2.0),
      integrate_perturbed(1.0, [](double t) { return std::exp(-t); }, {0.0, 1.0}, {0.0, 30.0}, 1e-3)};
  for (const auto& f : corpus) {
    const auto rep = sectional(f, 29.0, {-1.0, 1.0}, 3);
    for (double v : {rep.sec_radial, rep.sec_spherical.first, rep.sec_spherical.second}) {
      worst_tail = std::max(worst_tail, std::abs(v + f.a0()));
    }
  }
  return {worst_form <= 1e-12 && worst_tail <= 1e-6,
          fmt("space forms max |sec + 1| = %.3e, class B tail max |sec + a0| = %.3e", worst_form, worst_tail)};
}

Outcome hartman() {
  struct Case {
    const char* name;
    RadialFunction q;
    double T0;
  };
  const Case cases[] = {{"exp(-t)", [](double t) { return std::exp(-t); }, 0.0},
                        {"1/(1+t^2)", [](double t) { return 1.0 / (1.0 + t * t); }, 1.0}};
  bool flags = true, bound = true;
  for (const auto& c : cases) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      const auto rep = hartman_check(c.q, lambda, c.T0, {c.T0 + 20.0, 201});
      flags = flags && rep.all_ok();
      for (std::size_t i = 0; i < rep.t.size(); ++i) {
        const double t = rep.t[i];
        const double cap = std::abs(c.q(t)) * std::exp(-2 * lambda * t) / (2 * lambda);
        bound = bound && std::abs(rep.Q_values[i]) <= cap * (1 + 1e-12);
      }
    }
  }
  const auto f = integrate_perturbed(1.0, [](double t) { return std::exp(-t); }, {0.0, 1.0}, {0.0, 40.0}, 1e-3);
  const bool classb = class_b_report(f, {25.0, 40.0}, 1e-6).verdict;
  return {flags && bound && classb, fmt("Hartman flags %s, ratio bound %s, perturbed profile class B %s",
                                        flags ? "all true" : "FAIL", bound ? "holds" : "FAILS",
                                        classb ? "true" : "false")};
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    files[e.path().filename().string()] = {std::istreambuf_iterator<char>(in), {}};
  }
  return files;
}

Outcome determinism() {
  const fs::path configs = LPSPEC_CONFIG_DIR;
  const fs::path root = fs::temp_directory_path() / "lpspec_acceptance_determinism";
  fs::remove_all(root);
  int identical = 0, total = 0;
  std::string bad;
  for (const char* cmd : {"region", "residual", "volume", "curvature", "classb", "spectrum"}) {
    std::map<std::string, std::string> runs[2];
    for (int i = 0; i < 2; ++i) {
      const fs::path out = root / (std::string(cmd) + std::to_string(i));
      fs::create_directories(out);
      const std::string line = std::string(LPSPEC_CLI_PATH) + " " + cmd + " --config " +
                               (configs / (std::string(cmd) + ".json")).string() + " --out " + out.string() +
                               " --no-timestamp >/dev/null 2>&1";
      const int status = std::system(line.c_str());
      if (WEXITSTATUS(status) != 0) bad += std::string(" ") + cmd + "(exit)";
      runs[i] = snapshot(out);
    }
    ++total;
    if (!runs[0].empty() && runs[0] == runs[1]) {
      ++identical;
    } else {
      bad += std::string(" ") + cmd;
    }
  }
  fs::remove_all(root);
  return {identical == total && bad.empty(),
          fmt("%d/%d subcommands byte-identical across runs", identical, total) + (bad.empty() ? "" : ";" + bad)};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
  double budget_s;  ///< runtime limit, 0 if none
};

const Criterion kCriteria[] = {
    {"region identity", region_identity, 1.0},
    {"relabel identity", relabel_identity, 5.0},
    {"residual decay", residual_decay, 120.0},
    {"exponential exactness", exponential_exactness, 0.0},
    {"finite-difference convergence", fd_oracle, 10.0},
    {"volume growth", volume_growth, 30.0},
    {"hyperbolic assembly", hyperbolic_assembly, 10.0},
    {"curvature space forms", curvature_forms, 0.0},
    {"Hartman conditions", hartman, 10.0},
    {"determinism", determinism, 0.0},
};

bool run_one(int index) {
  const Criterion& c = kCriteria[index - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = c.budget_s <= 0.0 || secs < c.budget_s;
  const bool pass = out.pass && in_time;
  std::printf("[%s] criterion %d: %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", index, c.title, out.detail.c_str(),
              secs, in_time ? "" : ", over budget");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr int kCount = static_cast<int>(std::size(kCriteria));
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int index = std::atoi(argv[i]);
    if (index < 1 || index > kCount) {
      std::fprintf(stderr, "usage: %s [criterion 1..%d]...\n", argv[0], kCount);
      return 2;
    }
    selected.push_back(index);
  }
  if (selected.empty()) {
    for (int i = 1; i <= kCount; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int index : selected) all = run_one(index) && all;
  return all ? 0 : 1;
}
