#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lpspec::app {

/// Round-trip decimal form ("%.17g"); inf and nan spelled out.
std::string format_double(double x);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

/// Writes to a temporary sibling, then renames over the target.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_row(std::initializer_list<double> values);
  void add_row(const std::vector<double>& values);
  std::string str() const;
  std::size_t rows() const noexcept { return rows_; }

 private:
  std::size_t width_;
  std::size_t rows_ = 0;
  std::string body_;
};

/// Minimal self-contained SVG line/scatter chart.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void set_log_x(bool on) { log_x_ = on; }
  void set_log_y(bool on) { log_y_ = on; }
  void add_line(std::vector<std::pair<double, double>> pts, std::string color,
                std::string label = {});
  void add_points(std::vector<std::pair<double, double>> pts, std::string color,
                  std::string label = {});
  /// Closed polygon with translucent fill.
  void add_area(std::vector<std::pair<double, double>> pts, std::string color,
                std::string label = {});

  /// `timestamp` empty omits the generation comment.
  std::string render(std::string_view timestamp) const;

 private:
  enum class Kind { Line, Points, Area };
  struct Series {
    Kind kind;
    std::vector<std::pair<double, double>> pts;
    std::string color;
    std::string label;
  };

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  bool log_x_ = false;
  bool log_y_ = false;
  std::vector<Series> series_;
};

/// UTC time in ISO 8601, for SVG and manifest stamps.
std::string utc_timestamp();

}  // namespace lpspec::app
