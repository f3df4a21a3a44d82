#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ghz/parameters.hpp"
#include "ghz/sweeps.hpp"

namespace ghz::cli {

/// Parsed configuration file: protocol parameters plus an optional sweep.
struct CliConfig {
  ProtocolParameters params;
  std::optional<SweepSpec> sweep;
};

/// key = value text with optional [section] headers, or JSON when the text
/// starts with '{'. Unknown keys raise ParameterError naming the key.
CliConfig parse_config(const std::string& text);
CliConfig load_config(const std::filesystem::path& path);

/// Applies a "key=value" override.
void apply_override(ProtocolParameters& params, const std::string& assignment);

}  // namespace ghz::cli
