#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpspec/app/commands.hpp"

int main(int argc, char** argv) {
  namespace app = lpspec::app;
  CLI::App cli{"Numerical laboratory for L^p spectra of the Hodge Laplacian on warped products"};
  cli.set_version_flag("--version", std::string(app::kToolVersion));
  cli.require_subcommand(1);

  app::RunOptions options;
  std::string config;
  std::string out_dir = ".";
  for (const auto& info : app::subcommands()) {
    CLI::App* sub = cli.add_subcommand(std::string(info.name), std::string(info.summary));
    sub->add_option("--config", config, "JSON config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory (created if missing)");
    sub->add_flag("--no-timestamp", options.no_timestamp, "Omit timestamps from SVG and manifest");
    sub->add_option("--threads", options.threads, "OpenMP threads, 0 = auto")
        ->check(CLI::NonNegativeNumber);
    sub->footer("CSV columns: " + std::string(info.columns));
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  options.config = config;
  options.out_dir = out_dir;
  const auto chosen = cli.get_subcommands();
  return app::run_subcommand(chosen.front()->get_name(), options, std::cerr);
}
