#include <algorithm>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ghz/parameters.hpp"

namespace {

using ghz::cli::CommonOptions;

void add_common(CLI::App* cmd, CommonOptions& opts, bool outputs, bool parallel) {
  if (outputs) cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--set", opts.overrides, "Override a parameter (key=value), repeatable");
  cmd->add_option("--tol", opts.rel_tol, "Relative integration tolerance")
      ->check(CLI::PositiveNumber);
  if (parallel) {
    cmd->add_option("--jobs", opts.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rydberg-blockade GHZ state preparation simulator"};
  app.require_subcommand(1);
  const std::string footer = ghz::cli::parameter_help();
  app.footer(footer);

  CommonOptions opts;
  opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string figure_id;
  std::filesystem::path config;

  auto* figure = app.add_subcommand("figure", "Regenerate the data behind a figure");
  figure->add_option("id", figure_id, "Figure id (fig2..fig7)")->required();
  add_common(figure, opts, true, true);
  figure->footer(footer);

  auto* protocol = app.add_subcommand("protocol", "Run the full protocol for one config");
  protocol->add_option("config", config, "Config file (key = value or JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(protocol, opts, true, false);
  protocol->footer(footer);

  auto* sweep = app.add_subcommand("sweep", "Run the [sweep] section of a config");
  sweep->add_option("config", config, "Config file with a [sweep] section")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(sweep, opts, true, true);
  sweep->footer(footer);

  auto* check = app.add_subcommand("check", "Regime and adiabaticity diagnostics");
  check->add_option("config", config, "Config file")->required()->check(CLI::ExistingFile);
  add_common(check, opts, false, false);
  check->footer(footer);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ghz::cli::kOk : ghz::cli::kUsage;
  }

  try {
    if (*figure) return ghz::cli::run_figure(figure_id, opts, std::cout);
    if (*protocol) return ghz::cli::run_protocol(config, opts, std::cout);
    if (*sweep) return ghz::cli::run_sweep_command(config, opts, std::cout);
    if (*check) return ghz::cli::run_check(config, opts, std::cout);
  } catch (const ghz::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ghz::cli::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ghz::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return ghz::cli::kRuntime;
  }
  return ghz::cli::kUsage;
}
