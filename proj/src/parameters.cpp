#include "ghz/parameters.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "ghz/pulses.hpp"

namespace ghz {

std::string_view to_string(CouplingConvention c) {
  return c == CouplingConvention::full ? "full" : "half";
}

namespace {

constexpr std::array<ParameterInfo, 20> kKeys{{
    {"N", "5", "number of ensemble atoms"},
    {"omega", "5", "peak STIRAP Rabi frequency Omega*T"},
    {"delta", "0", "two-photon-resonant one-photon detuning delta*T"},
    {"tau", "1.4", "STIRAP peak separation tau/T"},
    {"omega_c0", "auto", "peak control Rabi frequency Omega_c0*T (auto: pi pulse)"},
    {"delta_R", "0", "control detuning delta_R*T"},
    {"T_c", "0.1", "control pulse width T_c/T"},
    {"tau_c", "auto", "control pulse centers +-tau_c/T (auto: tau + 4(1 + T_c))"},
    {"Delta", "500", "Rydberg interaction shift Delta*T"},
    {"gamma_R", "0", "control |R> decay rate Gamma_R*T"},
    {"gamma_r", "0", "ensemble decay rate per channel Gamma_r*T"},
    {"gamma", "0", "sets gamma_R and gamma_r together"},
    {"t_start", "auto", "propagation start t/T (auto: -(tau_c + 5 T_c + 1))"},
    {"t_end", "auto", "propagation end t/T (auto: tau_c + 5 T_c + 1)"},
    {"rtol", "1e-09", "integrator relative tolerance"},
    {"atol", "1e-11", "integrator absolute tolerance"},
    {"samples", "2000", "output samples per trajectory"},
    {"coupling", "full", "Rabi convention: full (figure captions) or half"},
    {"T_microseconds", "1", "physical value of T; metadata only"},
    {"kappa", "2", "dominance factor for regime classification"},
}};

int as_count(std::string_view key, double value, int minimum) {
  if (!std::isfinite(value) || value != std::floor(value) || value < minimum) {
    throw ParameterError(std::string(key),
                         "must be an integer >= " + std::to_string(minimum));
  }
  return static_cast<int>(value);
}

double parse_double(std::string_view key, std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParameterError(std::string(key), "expected a number, got '" + s + "'");
  }
  if (used != s.size()) {
    throw ParameterError(std::string(key), "expected a number, got '" + s + "'");
  }
  return v;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace

std::span<const ParameterInfo> ProtocolParameters::keys() { return kKeys; }

bool ProtocolParameters::is_key(std::string_view key) {
  for (const auto& info : kKeys) {
    if (info.key == key) return true;
  }
  return false;
}

void ProtocolParameters::set(std::string_view key, double value) {
  if (key == "N") {
    atoms = as_count(key, value, 1);
  } else if (key == "omega") {
    omega = value;
  } else if (key == "delta") {
    delta = value;
  } else if (key == "tau") {
    tau = value;
  } else if (key == "omega_c0") {
    omega_c0 = value;
  } else if (key == "delta_R") {
    delta_R = value;
  } else if (key == "T_c") {
    control_width = value;
  } else if (key == "tau_c") {
    control_center = value;
  } else if (key == "Delta") {
    blockade = value;
  } else if (key == "gamma_R") {
    gamma_R = value;
  } else if (key == "gamma_r") {
    gamma_r = value;
  } else if (key == "gamma") {
    gamma_R = value;
    gamma_r = value;
  } else if (key == "t_start") {
    t_start = value;
  } else if (key == "t_end") {
    t_end = value;
  } else if (key == "rtol") {
    rel_tol = value;
  } else if (key == "atol") {
    abs_tol = value;
  } else if (key == "samples") {
    samples = as_count(key, value, 2);
  } else if (key == "T_microseconds") {
    t_microseconds = value;
  } else if (key == "kappa") {
    kappa = value;
  } else if (key == "coupling") {
    throw ParameterError("coupling", "expects 'full' or 'half'");
  } else {
    throw ParameterError(std::string(key), "unknown parameter");
  }
}

void ProtocolParameters::set_text(std::string_view key, std::string_view text) {
  if (!is_key(key)) throw ParameterError(std::string(key), "unknown parameter");
  if (key == "coupling") {
    if (text == "full") {
      coupling = CouplingConvention::full;
    } else if (text == "half") {
      coupling = CouplingConvention::half;
    } else {
      throw ParameterError("coupling", "expects 'full' or 'half', got '" + std::string(text) + "'");
    }
    return;
  }
  if (text == "auto") {
    if (key == "omega_c0") {
      omega_c0.reset();
    } else if (key == "tau_c") {
      control_center.reset();
    } else if (key == "t_start") {
      t_start.reset();
    } else if (key == "t_end") {
      t_end.reset();
    } else {
      throw ParameterError(std::string(key), "'auto' is not allowed here");
    }
    return;
  }
  set(key, parse_double(key, text));
}

double ProtocolParameters::get(std::string_view key) const {
  const ProtocolConfig cfg = resolve();
  if (key == "N") return atoms;
  if (key == "omega") return omega;
  if (key == "delta") return delta;
  if (key == "tau") return tau;
  if (key == "omega_c0") return cfg.control.omega_c0 / rabi_scale();
  if (key == "delta_R") return delta_R;
  if (key == "T_c") return control_width;
  if (key == "tau_c") return cfg.control.center;
  if (key == "Delta") return blockade;
  if (key == "gamma_R" || key == "gamma") return gamma_R;
  if (key == "gamma_r") return gamma_r;
  if (key == "t_start") return cfg.t_span.start;
  if (key == "t_end") return cfg.t_span.end;
  if (key == "rtol") return rel_tol;
  if (key == "atol") return abs_tol;
  if (key == "samples") return samples;
  if (key == "T_microseconds") return t_microseconds;
  if (key == "kappa") return kappa;
  if (key == "coupling") return rabi_scale();
  throw ParameterError(std::string(key), "unknown parameter");
}

void ProtocolParameters::validate() const {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ParameterError(key, what);
  };
  require(atoms >= 1, "N", "must be >= 1");
  require(std::isfinite(omega) && omega >= 0.0, "omega", "must be finite and >= 0");
  require(std::isfinite(delta), "delta", "must be finite");
  require(std::isfinite(tau) && tau >= 0.0, "tau", "must be finite and >= 0");
  require(!omega_c0 || (std::isfinite(*omega_c0) && *omega_c0 >= 0.0), "omega_c0",
          "must be finite and >= 0");
  require(std::isfinite(delta_R), "delta_R", "must be finite");
  require(std::isfinite(control_width) && control_width > 0.0, "T_c", "must be finite and > 0");
  require(!control_center || std::isfinite(*control_center), "tau_c", "must be finite");
  require(std::isfinite(blockade), "Delta", "must be finite");
  require(std::isfinite(gamma_R) && gamma_R >= 0.0, "gamma_R", "must be finite and >= 0");
  require(std::isfinite(gamma_r) && gamma_r >= 0.0, "gamma_r", "must be finite and >= 0");
  require(!t_start || std::isfinite(*t_start), "t_start", "must be finite");
  require(!t_end || std::isfinite(*t_end), "t_end", "must be finite");
  require(rel_tol > 0.0 && rel_tol < 1.0, "rtol", "must lie in (0, 1)");
  require(abs_tol > 0.0 && abs_tol < 1.0, "atol", "must lie in (0, 1)");
  require(samples >= 2, "samples", "must be >= 2");
  require(std::isfinite(t_microseconds) && t_microseconds > 0.0, "T_microseconds", "must be > 0");
  require(std::isfinite(kappa) && kappa > 0.0, "kappa", "must be > 0");
}

TargetParams ProtocolParameters::resolve_target() const {
  validate();
  return {atoms, {hamiltonian_omega(), tau}, delta};
}

ProtocolConfig ProtocolParameters::resolve() const {
  validate();
  ProtocolConfig cfg;
  cfg.control.width = control_width;
  cfg.control.omega_c0 = omega_c0 ? rabi_scale() * *omega_c0 : pi_pulse_peak(control_width);
  cfg.control.delta_R = delta_R;
  cfg.control.center = control_center ? *control_center : default_control_center(tau, control_width);
  cfg.target = {atoms, {hamiltonian_omega(), tau}, delta};
  cfg.blockade = blockade;
  cfg.gamma_R = gamma_R;
  cfg.gamma_r = gamma_r;
  const TimeSpan span = default_time_span(std::abs(cfg.control.center), control_width);
  cfg.t_span = {t_start ? *t_start : span.start, t_end ? *t_end : span.end};
  if (!(cfg.t_span.end > cfg.t_span.start)) throw ParameterError("t_end", "must exceed t_start");
  cfg.tol = {rel_tol, abs_tol};
  cfg.samples = samples;
  return cfg;
}

std::string ProtocolParameters::echo() const {
  std::ostringstream os;
  auto line = [&os](std::string_view key, const std::string& value) {
    os << key << " = " << value << '\n';
  };
  auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("auto");
  };
  line("N", std::to_string(atoms));
  line("omega", format_number(omega));
  line("delta", format_number(delta));
  line("tau", format_number(tau));
  line("omega_c0", opt(omega_c0));
  line("delta_R", format_number(delta_R));
  line("T_c", format_number(control_width));
  line("tau_c", opt(control_center));
  line("Delta", format_number(blockade));
  line("gamma_R", format_number(gamma_R));
  line("gamma_r", format_number(gamma_r));
  line("t_start", opt(t_start));
  line("t_end", opt(t_end));
  line("rtol", format_number(rel_tol));
  line("atol", format_number(abs_tol));
  line("samples", std::to_string(samples));
  line("coupling", std::string(to_string(coupling)));
  line("T_microseconds", format_number(t_microseconds));
  line("kappa", format_number(kappa));
  return os.str();
}

}  // namespace ghz
