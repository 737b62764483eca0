#include "lpspec/app/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <system_error>

#include <unistd.h>

#include "lpspec/error.hpp"

namespace lpspec::app {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  const auto tmp = path.parent_path() /
                   ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto " + path.string());
  }
}

CsvTable::CsvTable(std::vector<std::string> columns) : width_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) body_ += ',';
    body_ += columns[i];
  }
  body_ += '\n';
}

void CsvTable::add_row(std::initializer_list<double> values) {
  add_row(std::vector<double>(values));
}

void CsvTable::add_row(const std::vector<double>& values) {
  if (values.size() != width_) {
    throw Error(ErrorCode::InvalidArgument, "CSV row width does not match the header");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) body_ += ',';
    body_ += format_double(values[i]);
  }
  body_ += '\n';
  ++rows_;
}

std::string CsvTable::str() const { return body_; }

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const { return log ? std::log10(v) : v; }
  double frac(double v) const { return (map(v) - lo) / (hi - lo); }
};

Axis fit_axis(const std::vector<double>& values, bool log) {
  Axis a;
  a.log = log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    if (!std::isfinite(v) || (log && !(v > 0.0))) continue;
    const double m = log ? std::log10(v) : v;
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  if (!std::isfinite(lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  a.lo = lo - pad;
  a.hi = hi + pad;
  return a;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_line(std::vector<std::pair<double, double>> pts, std::string color,
                       std::string label) {
  series_.push_back({Kind::Line, std::move(pts), std::move(color), std::move(label)});
}

void SvgPlot::add_points(std::vector<std::pair<double, double>> pts, std::string color,
                         std::string label) {
  series_.push_back({Kind::Points, std::move(pts), std::move(color), std::move(label)});
}

void SvgPlot::add_area(std::vector<std::pair<double, double>> pts, std::string color,
                       std::string label) {
  series_.push_back({Kind::Area, std::move(pts), std::move(color), std::move(label)});
}

std::string SvgPlot::render(std::string_view timestamp) const {
  std::vector<double> xs, ys;
  for (const auto& s : series_) {
    for (const auto& [x, y] : s.pts) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  const Axis ax = fit_axis(xs, log_x_);
  const Axis ay = fit_axis(ys, log_y_);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + ax.frac(x) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - ay.frac(y)) * ph; };
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_x_ || x > 0.0) && (!log_y_ || y > 0.0);
  };

  std::string o;
  o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!timestamp.empty()) o += "<!-- generated " + std::string(timestamp) + " -->\n";
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
       "viewBox=\"0 0 720 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  o += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" + escape(title_) +
       "</text>\n";
  o += "<rect x=\"" + fmt("%.2f", kLeft) + "\" y=\"" + fmt("%.2f", kTop) + "\" width=\"" +
       fmt("%.2f", pw) + "\" height=\"" + fmt("%.2f", ph) +
       "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = i / 5.0;
    const double vx = ax.lo + fx * (ax.hi - ax.lo);
    const double sx = kLeft + fx * pw;
    o += "<line x1=\"" + fmt("%.2f", sx) + "\" y1=\"" + fmt("%.2f", kTop + ph) + "\" x2=\"" +
         fmt("%.2f", sx) + "\" y2=\"" + fmt("%.2f", kTop + ph + 5) + "\" stroke=\"#444\"/>\n";
    o += "<text x=\"" + fmt("%.2f", sx) + "\" y=\"" + fmt("%.2f", kTop + ph + 18) +
         "\" text-anchor=\"middle\">" + fmt("%.4g", log_x_ ? std::pow(10.0, vx) : vx) +
         "</text>\n";
    const double vy = ay.lo + fx * (ay.hi - ay.lo);
    const double sy = kTop + (1.0 - fx) * ph;
    o += "<line x1=\"" + fmt("%.2f", kLeft - 5) + "\" y1=\"" + fmt("%.2f", sy) + "\" x2=\"" +
         fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", sy) + "\" stroke=\"#444\"/>\n";
    o += "<text x=\"" + fmt("%.2f", kLeft - 8) + "\" y=\"" + fmt("%.2f", sy + 4) +
         "\" text-anchor=\"end\">" + fmt("%.4g", log_y_ ? std::pow(10.0, vy) : vy) +
         "</text>\n";
  }
  o += "<text x=\"" + fmt("%.2f", kLeft + pw / 2) + "\" y=\"" + fmt("%.2f", kHeight - 14) +
       "\" text-anchor=\"middle\">" + escape(x_label_) + "</text>\n";
  o += "<text x=\"18\" y=\"" + fmt("%.2f", kTop + ph / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt("%.2f", kTop + ph / 2) +
       ")\">" + escape(y_label_) + "</text>\n";

  int legend = 0;
  for (const auto& s : series_) {
    std::string coords;
    for (const auto& [x, y] : s.pts) {
      if (!usable(x, y)) continue;
      if (s.kind == Kind::Points) {
        o += "<circle cx=\"" + fmt("%.2f", px(x)) + "\" cy=\"" + fmt("%.2f", py(y)) +
             "\" r=\"2.5\" fill=\"" + s.color + "\"/>\n";
      } else {
        coords += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y)) + " ";
      }
    }
    if (s.kind == Kind::Line && !coords.empty()) {
      o += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.6\" points=\"" +
           coords + "\"/>\n";
    } else if (s.kind == Kind::Area && !coords.empty()) {
      o += "<polygon fill=\"" + s.color + "\" fill-opacity=\"0.25\" stroke=\"" + s.color +
           "\" points=\"" + coords + "\"/>\n";
    }
    if (!s.label.empty()) {
      const double ly = kTop + 16 + 16 * legend++;
      o += "<rect x=\"" + fmt("%.2f", kLeft + pw - 150) + "\" y=\"" + fmt("%.2f", ly - 9) +
           "\" width=\"10\" height=\"10\" fill=\"" + s.color + "\"/>\n";
      o += "<text x=\"" + fmt("%.2f", kLeft + pw - 134) + "\" y=\"" + fmt("%.2f", ly) + "\">" +
           escape(s.label) + "</text>\n";
    }
  }
  o += "</svg>\n";
  return o;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace lpspec::app
