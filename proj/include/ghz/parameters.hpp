#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ghz/hamiltonians.hpp"

namespace ghz {

/// How quoted Rabi frequencies map onto the Hamiltonian couplings.
///
/// `full`: a quoted peak Omega couples its transition with amplitude Omega, the
/// convention of the published figure captions (Omega_c0 T = 6.2 is a pi pulse
/// at T_c = 0.1 T). `half`: the quoted value enters the Hamiltonian as Omega/2.
/// Library Hamiltonians always use the half form, so `full` doubles the
/// quoted values on resolve.
enum class CouplingConvention { full, half };

std::string_view to_string(CouplingConvention c);

/// Invalid or unknown user-facing parameter; key() names it.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct ParameterInfo {
  std::string_view key;
  std::string_view default_text;
  std::string_view help;
};

/// User-facing, dimensionless parameter set with the Fig. 5 operating point
/// as defaults. Optional fields are derived on resolve() when unset.
struct ProtocolParameters {
  int atoms = 5;
  double omega = 5.0;
  double delta = 0.0;
  double tau = 1.4;
  std::optional<double> omega_c0;  // default: pi pulse for control_width
  double delta_R = 0.0;
  double control_width = 0.1;
  std::optional<double> control_center;  // default: tau + 4 (1 + T_c)
  double blockade = 500.0;
  double gamma_R = 0.0;
  double gamma_r = 0.0;
  std::optional<double> t_start;
  std::optional<double> t_end;
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  int samples = 2000;
  CouplingConvention coupling = CouplingConvention::full;
  double t_microseconds = 1.0;  // echoed in metadata only
  double kappa = 2.0;           // dominance factor for regime diagnostics

  static std::span<const ParameterInfo> keys();
  static bool is_key(std::string_view key);

  /// Numeric assignment. "gamma" sets gamma_R and gamma_r together.
  void set(std::string_view key, double value);
  /// Parses `text` for `key`; accepts "auto" for derived fields.
  void set_text(std::string_view key, std::string_view text);
  double get(std::string_view key) const;

  void validate() const;
  /// Rabi scale factor applied to quoted amplitudes: 2 for full, 1 for half.
  double rabi_scale() const { return coupling == CouplingConvention::full ? 2.0 : 1.0; }
  /// Peak STIRAP amplitude as it enters the half-coupling Hamiltonian.
  double hamiltonian_omega() const { return rabi_scale() * omega; }

  ProtocolConfig resolve() const;
  TargetParams resolve_target() const;

  /// key = value lines for every parameter, used as the metadata echo.
  std::string echo() const;
};

}  // namespace ghz
