#pragma once

#include <array>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lpspec/warping.hpp"

namespace lpspec::app {

using json = nlohmann::json;

/// Reads and parses a JSON config; ConfigError on malformed input, IoError if
/// the file cannot be read.
json load_config(const std::filesystem::path& path);

/// View over a JSON object that rejects unknown keys and ill-typed values.
class Section {
 public:
  Section(const json& value, std::string path, std::span<const std::string_view> allowed);
  Section(const json& value, std::string path, std::initializer_list<std::string_view> allowed)
      : Section(value, std::move(path), std::span(allowed.begin(), allowed.size())) {}

  bool has(std::string_view key) const;
  const json& raw(std::string_view key) const;
  Section child(std::string_view key, std::span<const std::string_view> allowed) const;
  Section child(std::string_view key, std::initializer_list<std::string_view> allowed) const {
    return child(key, std::span(allowed.begin(), allowed.size()));
  }

  double number(std::string_view key) const;
  double number(std::string_view key, double fallback) const;
  int integer(std::string_view key) const;
  int integer(std::string_view key, int fallback) const;
  bool boolean(std::string_view key, bool fallback) const;
  std::string string(std::string_view key) const;
  std::string string(std::string_view key, std::string fallback) const;
  /// Finite p >= 1, or the string "inf".
  double exponent(std::string_view key) const;
  std::pair<double, double> pair(std::string_view key) const;
  std::vector<double> numbers(std::string_view key) const;
  std::vector<std::pair<double, double>> pairs(std::string_view key) const;

  const std::string& path() const noexcept { return path_; }

 private:
  const json& at(std::string_view key) const;
  [[noreturn]] void fail(std::string_view key, std::string_view what) const;

  const json* value_;
  std::string path_;
};

/// Perturbation named in a config: exp_decay a e^{-rate t}, inverse_square
/// a / (1 + t^2), zero.
RadialFunction parse_perturbation(const Section& q);

/// Warping block: family exp | sinh | cosh | perturbed | tabulated. Relative
/// tabulated file paths resolve against base_dir.
WarpingFunction parse_warping(const Section& w, const std::filesystem::path& base_dir);

inline constexpr std::array<std::string_view, 14> kWarpingKeys = {
    "family", "a0", "c", "c0", "q", "init", "r_span", "step", "tolerance",
    "file", "r", "f", "df", "d2f"};
inline constexpr std::array<std::string_view, 3> kPerturbationKeys = {"kind", "amplitude", "rate"};

}  // namespace lpspec::app
