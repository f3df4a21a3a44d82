#pragma once

#include <filesystem>
#include <string>

#include "ghz/sweeps.hpp"

namespace ghz {

/// '#'-prefixed metadata preamble, header row, then rows at 15 significant
/// digits; LF line endings.
std::string format_csv(const SweepResult& result);
/// Header and data rows only; the part covered by the determinism contract.
std::string format_csv_body(const SweepResult& result);

/// Throws std::runtime_error naming the path on I/O failure.
void write_csv(const SweepResult& result, const std::filesystem::path& path);
SweepResult read_csv(const std::filesystem::path& path);
SweepResult parse_csv(const std::string& text);

}  // namespace ghz
