#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lpspec::app {

struct RunOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir = ".";
  bool no_timestamp = false;
  int threads = 0;  ///< 0 keeps the OpenMP default
};

struct SubcommandInfo {
  std::string_view name;
  std::string_view summary;
  std::string_view columns;  ///< CSV layout, shown in --help
};

const std::vector<SubcommandInfo>& subcommands();

/// Runs one subcommand and returns its exit code: 0 ok, 2 config, 3 domain
/// guard, 4 decay failure, 5 numeric failure, 6 I/O. Diagnostics go to `err`.
int run_subcommand(std::string_view name, const RunOptions& options, std::ostream& err);

inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace lpspec::app
