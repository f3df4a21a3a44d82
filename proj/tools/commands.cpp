#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "config_file.hpp"
#include "ghz/csv.hpp"
#include "ghz/dynamics.hpp"
#include "ghz/spectral.hpp"
#include "ghz/sweeps.hpp"

namespace ghz::cli {

namespace {

constexpr double kPiPulseThreshold = 1.0 - 1e-4;

std::string strf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list copy;
  va_copy(copy, args);
  const int n = std::vsnprintf(nullptr, 0, fmt, copy);
  va_end(copy);
  std::string out(static_cast<std::size_t>(n), '\0');
  std::vsnprintf(out.data(), out.size() + 1, fmt, args);
  va_end(args);
  return out;
}

std::string str(std::string_view v) { return std::string(v); }

void apply_common(ProtocolParameters& params, const CommonOptions& opts) {
  for (const auto& o : opts.overrides) apply_override(params, o);
  if (opts.rel_tol) params.set("rtol", *opts.rel_tol);
  params.validate();
}

std::filesystem::path prepare_out(const CommonOptions& opts) {
  std::filesystem::create_directories(opts.out_dir);
  return opts.out_dir;
}

// Failed points are NaN rows in the table; the command still succeeds.
void report_errors(const SweepResult& r, std::ostream& out) {
  for (const auto& e : r.errors) out << "warning: " << e << '\n';
}

struct BranchDiagnostics {
  double delta = 0.0;
  AdiabaticityReport report;
  bool available = false;
};

BranchDiagnostics branch(const ProtocolParameters& p, double delta) {
  BranchDiagnostics b;
  b.delta = delta;
  const StirapPair pair{p.hamiltonian_omega(), p.tau};
  if (pair.omega <= 0.0) {
    b.report.regime = regime_classify(pair.omega, delta, p.atoms, p.kappa);
    return b;
  }
  b.report = adiabaticity_margin(pair, delta, p.atoms, p.kappa);
  b.available = true;
  return b;
}

std::string describe(const BranchDiagnostics& b) {
  if (!b.available) {
    return strf("delta=%.6g regime=%s margin=n/a (no STIRAP drive)", b.delta,
                str(to_string(b.report.regime.regime)).c_str());
  }
  return strf("delta=%.6g regime=%s lhs_max=%.6g margin=%.6g margin_exact=%.6g", b.delta,
              str(to_string(b.report.regime.regime)).c_str(), b.report.lhs_max,
              b.report.margin_transfer, b.report.margin_exact);
}

}  // namespace

int run_figure(const std::string& id, const CommonOptions& opts, std::ostream& out) {
  const auto ids = figure_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::string known;
    for (const auto& i : ids) known += (known.empty() ? "" : ", ") + i;
    throw ParameterError(id, "unknown figure id (known: " + known + ")");
  }
  const auto dir = prepare_out(opts);
  if (id == "fig5") {
    ProtocolParameters params = figure_timeseries_parameters();
    apply_common(params, opts);
    const auto r = run_timeseries(params, id);
    write_csv(r.series, dir / "fig5.csv");
    write_csv(r.summary, dir / "fig5_summary.csv");
    const auto& o = r.run.outcome;
    out << strf("fig5: fidelity_raw=%.6f fidelity_phase_optimized=%.6f "
                "success_probability=%.6f -> %s\n",
                o.fidelity_raw, o.fidelity_phase_optimized, o.success_probability,
                (dir / "fig5.csv").string().c_str());
    return kOk;
  }
  SweepSpec spec = figure_preset(id);
  apply_common(spec.base, opts);
  const SweepResult r = run_sweep(spec, opts.jobs);
  write_csv(r, dir / (id + ".csv"));
  report_errors(r, out);
  out << strf("%s: %zu points in %.2f s -> %s\n", id.c_str(), r.rows.size(), r.wall_seconds,
              (dir / (id + ".csv")).string().c_str());
  return kOk;
}

int run_protocol(const std::filesystem::path& config, const CommonOptions& opts,
                 std::ostream& out) {
  CliConfig cfg = load_config(config);
  apply_common(cfg.params, opts);
  const auto& p = cfg.params;
  const auto b1 = branch(p, p.delta);
  const auto b0 = branch(p, p.delta + p.blockade);

  const auto r = run_timeseries(p, "protocol");
  const auto dir = prepare_out(opts);
  write_csv(r.series, dir / "protocol.csv");
  write_csv(r.summary, dir / "protocol_summary.csv");

  const auto& o = r.run.outcome;
  out << strf(
      "fidelity_raw=%.6f fidelity_phase_optimized=%.6f optimal_phase=%.6f "
      "success_probability=%.6f margin=%s regime_branch1=%s regime_branch0=%s\n",
      o.fidelity_raw, o.fidelity_phase_optimized, o.optimal_phase, o.success_probability,
      (b1.available ? strf("%.6g", b1.report.margin_transfer) : std::string("n/a")).c_str(),
      str(to_string(b1.report.regime.regime)).c_str(),
      str(to_string(b0.report.regime.regime)).c_str());
  if (b1.report.regime.regime != Regime::transfer) {
    out << "warning: branch |1> is not in the transfer regime ("
        << to_string(b1.report.regime.regime) << ")\n";
  }
  if (b1.available && b1.report.margin_transfer < 1.0) {
    out << strf("warning: adiabaticity margin %.3g < 1\n", b1.report.margin_transfer);
  }
  if (b0.report.regime.regime != Regime::blocked) {
    out << "warning: branch |0> is not blockaded (" << to_string(b0.report.regime.regime)
        << ")\n";
  }
  return kOk;
}

int run_sweep_command(const std::filesystem::path& config, const CommonOptions& opts,
                      std::ostream& out) {
  CliConfig cfg = load_config(config);
  if (!cfg.sweep) throw ParameterError("sweep", "config has no [sweep] section");
  SweepSpec spec = *cfg.sweep;
  spec.base = cfg.params;
  apply_common(spec.base, opts);
  try {
    spec.validate();
  } catch (const ParameterError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParameterError("sweep", e.what());
  }
  const SweepResult r = run_sweep(spec, opts.jobs);
  const auto path = prepare_out(opts) / (spec.id + ".csv");
  write_csv(r, path);
  report_errors(r, out);
  out << strf("%s: %zu points in %.2f s -> %s\n", spec.id.c_str(), r.rows.size(),
              r.wall_seconds, path.string().c_str());
  return kOk;
}

int run_check(const std::filesystem::path& config, const CommonOptions& opts,
              std::ostream& out) {
  CliConfig cfg = load_config(config);
  apply_common(cfg.params, opts);
  const auto& p = cfg.params;
  const ProtocolConfig resolved = p.resolve();

  const auto b1 = branch(p, p.delta);
  const auto b0 = branch(p, p.delta + p.blockade);
  out << "branch |1>: " << describe(b1) << '\n';
  out << "branch |0>: " << describe(b0) << '\n';

  PropagationOptions prop;
  prop.rel_tol = std::min(p.rel_tol, 1e-9);
  prop.abs_tol = std::min(p.abs_tol, 1e-11);
  const double area = pulse_area({resolved.control.omega_c0, 0.0, resolved.control.width});
  const double excitation = control_excitation(resolved.control.omega_c0,
                                               resolved.control.width, p.delta_R, prop);
  const bool pi_ok = excitation >= kPiPulseThreshold;
  out << strf("control pulse: area=%.6f sin^2(area)=%.8f excitation=%.8f %s\n", area,
              std::pow(std::sin(area), 2), excitation, pi_ok ? "ok" : "not a pi pulse");

  bool ok = pi_ok;
  if (b1.report.regime.regime != Regime::transfer) {
    out << "fail: branch |1> must be in the transfer regime\n";
    ok = false;
  }
  if (b0.report.regime.regime != Regime::blocked) {
    out << "fail: branch |0> must be blockaded\n";
    ok = false;
  }
  if (b1.available && b1.report.margin_transfer < 1.0) {
    out << strf("warning: adiabaticity margin %.3g < 1\n", b1.report.margin_transfer);
  }
  out << (ok ? "check passed\n" : "check failed\n");
  return ok ? kOk : kDiagnosticFailure;
}

std::string parameter_help() {
  std::ostringstream os;
  os << "Parameters (dimensionless, times in units of T):\n";
  for (const auto& info : ProtocolParameters::keys()) {
    os << strf("  %-15s default %-8s %s\n", str(info.key).c_str(), str(info.default_text).c_str(),
               str(info.help).c_str());
  }
  os << "Figure ids:";
  for (const auto& id : figure_ids()) os << ' ' << id;
  os << "\nExit codes: 0 ok, 1 diagnostic failure, 2 usage or configuration error, "
        "3 runtime failure\n";
  return os.str();
}

}  // namespace ghz::cli
