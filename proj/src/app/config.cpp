#include "lpspec/app/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lpspec/error.hpp"

namespace lpspec::app {

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, path.string() + ": " + e.what());
  }
}

Section::Section(const json& value, std::string path, std::span<const std::string_view> allowed)
    : value_(&value), path_(std::move(path)) {
  if (!value.is_object()) {
    throw Error(ErrorCode::ConfigError, (path_.empty() ? "config" : path_) + " must be an object");
  }
  for (const auto& item : value.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw Error(ErrorCode::ConfigError,
                  "unknown key '" + (path_.empty() ? "" : path_ + ".") + item.key() + "'");
    }
  }
}

void Section::fail(std::string_view key, std::string_view what) const {
  throw Error(ErrorCode::ConfigError, "'" + (path_.empty() ? "" : path_ + ".") +
                                          std::string(key) + "' " + std::string(what));
}

bool Section::has(std::string_view key) const { return value_->contains(key); }

const json& Section::at(std::string_view key) const {
  const auto it = value_->find(key);
  if (it == value_->end()) fail(key, "is required");
  return *it;
}

const json& Section::raw(std::string_view key) const { return at(key); }

Section Section::child(std::string_view key, std::span<const std::string_view> allowed) const {
  return Section(at(key), (path_.empty() ? "" : path_ + ".") + std::string(key), allowed);
}

double Section::number(std::string_view key) const {
  const json& v = at(key);
  if (!v.is_number()) fail(key, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(key, "must be finite");
  return x;
}

double Section::number(std::string_view key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

int Section::integer(std::string_view key) const {
  const json& v = at(key);
  if (!v.is_number_integer()) fail(key, "must be an integer");
  return v.get<int>();
}

int Section::integer(std::string_view key, int fallback) const {
  return has(key) ? integer(key) : fallback;
}

bool Section::boolean(std::string_view key, bool fallback) const {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (!v.is_boolean()) fail(key, "must be true or false");
  return v.get<bool>();
}

std::string Section::string(std::string_view key) const {
  const json& v = at(key);
  if (!v.is_string()) fail(key, "must be a string");
  return v.get<std::string>();
}

std::string Section::string(std::string_view key, std::string fallback) const {
  return has(key) ? string(key) : fallback;
}

double Section::exponent(std::string_view key) const {
  const json& v = at(key);
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    fail(key, "must be a number >= 1 or \"inf\"");
  }
  const double p = number(key);
  if (!(p >= 1.0)) fail(key, "must be >= 1");
  return p;
}

std::pair<double, double> Section::pair(std::string_view key) const {
  const json& v = at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(key, "must be a two-element numeric array");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<double> Section::numbers(std::string_view key) const {
  const json& v = at(key);
  if (!v.is_array()) fail(key, "must be an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) fail(key, "must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::pair<double, double>> Section::pairs(std::string_view key) const {
  const json& v = at(key);
  if (!v.is_array()) fail(key, "must be an array of [a, b] pairs");
  std::vector<std::pair<double, double>> out;
  for (const auto& x : v) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number() || !x[1].is_number()) {
      fail(key, "must be an array of [a, b] pairs");
    }
    out.emplace_back(x[0].get<double>(), x[1].get<double>());
  }
  return out;
}

RadialFunction parse_perturbation(const Section& q) {
  const std::string kind = q.string("kind");
  const double amplitude = q.number("amplitude", 1.0);
  if (kind == "exp_decay") {
    const double rate = q.number("rate", 1.0);
    if (!(rate > 0.0)) throw Error(ErrorCode::ConfigError, "exp_decay rate must be positive");
    return [amplitude, rate](double t) { return amplitude * std::exp(-rate * t); };
  }
  if (q.has("rate")) throw Error(ErrorCode::ConfigError, "'rate' only applies to exp_decay");
  if (kind == "inverse_square") {
    return [amplitude](double t) { return amplitude / (1.0 + t * t); };
  }
  if (kind == "zero") return [](double) { return 0.0; };
  throw Error(ErrorCode::ConfigError, "unknown perturbation kind '" + kind + "'");
}

namespace {

std::vector<std::vector<double>> read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read table " + path.string());
  std::vector<std::vector<double>> cols(4);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double v[4];
    if (!(row >> v[0] >> v[1] >> v[2] >> v[3])) {
      if (header) {
        header = false;
        continue;
      }
      throw Error(ErrorCode::ConfigError, "malformed row in " + path.string() + ": " + line);
    }
    header = false;
    for (int i = 0; i < 4; ++i) cols[i].push_back(v[i]);
  }
  return cols;
}

}  // namespace

WarpingFunction parse_warping(const Section& w, const std::filesystem::path& base_dir) {
  const std::string family = w.string("family");
  const double a0 = w.number("a0", 1.0);
  auto reject = [&](std::initializer_list<std::string_view> keys) {
    for (auto key : keys) {
      if (w.has(key)) {
        throw Error(ErrorCode::ConfigError,
                    "'" + std::string(key) + "' does not apply to family " + family);
      }
    }
  };
  if (family == "exp" || family == "sinh" || family == "cosh") {
    reject({"q", "init", "r_span", "step", "tolerance", "file", "r", "f", "df", "d2f"});
    const double c = w.number("c", 1.0);
    const double c0 = w.number("c0", 0.0);
    if (family == "exp") return WarpingFunction::exponential(a0, c, c0);
    if (family == "sinh") return WarpingFunction::hyperbolic_sine(a0, c, c0);
    return WarpingFunction::hyperbolic_cosine(a0, c, c0);
  }
  if (family == "perturbed") {
    reject({"c", "c0", "file", "r", "f", "df", "d2f"});
    RadialFunction q = parse_perturbation(w.child("q", kPerturbationKeys));
    return integrate_perturbed(a0, std::move(q), w.pair("init"), w.pair("r_span"),
                               w.number("step"), w.number("tolerance", 1e-8));
  }
  if (family == "tabulated") {
    reject({"c", "c0", "q", "init", "r_span", "step", "tolerance"});
    if (w.has("file")) {
      reject({"r", "f", "df", "d2f"});
      std::filesystem::path file = w.string("file");
      if (file.is_relative()) file = base_dir / file;
      auto cols = read_table(file);
      return WarpingFunction::tabulated(a0, std::move(cols[0]), std::move(cols[1]),
                                        std::move(cols[2]), std::move(cols[3]));
    }
    return WarpingFunction::tabulated(a0, w.numbers("r"), w.numbers("f"), w.numbers("df"),
                                      w.numbers("d2f"));
  }
  throw Error(ErrorCode::ConfigError, "unknown warping family '" + family + "'");
}

}  // namespace lpspec::app
