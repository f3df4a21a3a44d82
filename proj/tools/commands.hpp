#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ghz::cli {

enum ExitCode : int { kOk = 0, kDiagnosticFailure = 1, kUsage = 2, kRuntime = 3 };

struct CommonOptions {
  std::filesystem::path out_dir = ".";
  std::vector<std::string> overrides;  // key=value
  int jobs = 1;
  std::optional<double> rel_tol;
};

int run_figure(const std::string& id, const CommonOptions& opts, std::ostream& out);
int run_protocol(const std::filesystem::path& config, const CommonOptions& opts,
                 std::ostream& out);
int run_sweep_command(const std::filesystem::path& config, const CommonOptions& opts,
                      std::ostream& out);
int run_check(const std::filesystem::path& config, const CommonOptions& opts,
              std::ostream& out);

/// Key table with defaults, used as the --help footer.
std::string parameter_help();

}  // namespace ghz::cli
