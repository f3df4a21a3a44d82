#include "ghz/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ghz {

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::control_transfer:
      return "control_transfer";
    case Experiment::stirap_transfer:
      return "stirap_transfer";
    case Experiment::ensemble_decay:
      return "ensemble_decay";
    case Experiment::ghz_fidelity:
      break;
  }
  return "ghz_fidelity";
}

Experiment experiment_from_string(std::string_view name) {
  for (auto e : {Experiment::control_transfer, Experiment::stirap_transfer,
                 Experiment::ensemble_decay, Experiment::ghz_fidelity}) {
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

std::vector<std::string> observable_columns(Experiment e) {
  switch (e) {
    case Experiment::control_transfer:
      return {"pop_R"};
    case Experiment::stirap_transfer:
      return {"pop_sN", "pop_gN_plus_sN"};
    case Experiment::ensemble_decay:
      return {"pop_sN"};
    case Experiment::ghz_fidelity:
      break;
  }
  return {"fidelity_phase_optimized", "fidelity_raw", "success_probability"};
}

Axis Axis::linear(std::string key, std::string label, double min, double max, int count) {
  if (count < 1) throw std::invalid_argument("axis " + key + ": count must be >= 1");
  Axis axis{std::move(key), std::move(label), {}};
  axis.values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    axis.values.push_back(count == 1 ? min : min + (max - min) * i / (count - 1));
  }
  if (count > 1) axis.values.back() = max;
  return axis;
}

Axis Axis::list(std::string key, std::string label, std::vector<double> values) {
  return {std::move(key), std::move(label), std::move(values)};
}

void SweepSpec::validate() const {
  base.validate();
  for (const auto& axis : axes) {
    if (!ProtocolParameters::is_key(axis.key) || axis.key == "coupling") {
      throw ParameterError(axis.key, "not a sweepable parameter");
    }
    if (axis.values.empty()) throw ParameterError(axis.key, "axis has no values");
  }
  for (const auto& [atoms, assignments] : per_atoms) {
    for (const auto& [key, value] : assignments) {
      if (!ProtocolParameters::is_key(key)) throw ParameterError(key, "unknown parameter");
    }
  }
}

std::size_t SweepSpec::point_count() const {
  std::size_t n = 1;
  for (const auto& axis : axes) n *= axis.values.size();
  return n;
}

namespace {

PropagationOptions options_for(const ProtocolParameters& p) {
  PropagationOptions o;
  o.rel_tol = p.rel_tol;
  o.abs_tol = p.abs_tol;
  o.samples = 2;
  o.positivity_stride = 0;
  return o;
}

std::string format_values(const std::vector<double>& values) {
  std::ostringstream os;
  os.precision(15);
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << ']';
  return os.str();
}

void append_echo(std::vector<std::string>& metadata, const ProtocolParameters& params) {
  std::istringstream lines(params.echo());
  for (std::string line; std::getline(lines, line);) metadata.push_back("param " + line);
}

}  // namespace

std::vector<double> evaluate_point(Experiment e, const ProtocolParameters& params) {
  const PropagationOptions opts = options_for(params);
  switch (e) {
    case Experiment::control_transfer: {
      const ProtocolConfig cfg = params.resolve();
      return {control_excitation(cfg.control.omega_c0, cfg.control.width, cfg.control.delta_R,
                                 opts)};
    }
    case Experiment::stirap_transfer: {
      const auto pops = stirap_transfer_populations(params.resolve_target(), 0.0,
                                                    default_stirap_span(params.tau), opts);
      return {pops.stored, pops.ground + pops.stored};
    }
    case Experiment::ensemble_decay: {
      const auto pops = stirap_transfer_populations(params.resolve_target(), params.gamma_r,
                                                    default_stirap_span(params.tau), opts);
      return {pops.stored};
    }
    case Experiment::ghz_fidelity:
      break;
  }
  ProtocolConfig cfg = params.resolve();
  cfg.samples = 2;
  const ProtocolRun run = run_ghz_protocol(cfg, opts);
  return {run.outcome.fidelity_phase_optimized, run.outcome.fidelity_raw,
          run.outcome.success_probability};
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t points = spec.point_count();
  const auto observables = observable_columns(spec.experiment);

  SweepResult result;
  for (const auto& axis : spec.axes) result.columns.push_back(axis.label);
  result.columns.insert(result.columns.end(), observables.begin(), observables.end());
  result.rows.assign(points, {});
  std::vector<std::string> point_errors(points);

  auto evaluate = [&](std::size_t index) {
    std::vector<double> row(spec.axes.size());
    // Decompose with the last axis fastest.
    std::size_t rest = index;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const auto& values = spec.axes[a].values;
      row[a] = values[rest % values.size()];
      rest /= values.size();
    }
    try {
      ProtocolParameters params = spec.base;
      for (std::size_t a = 0; a < spec.axes.size(); ++a) params.set(spec.axes[a].key, row[a]);
      if (const auto it = spec.per_atoms.find(params.atoms); it != spec.per_atoms.end()) {
        for (const auto& [key, value] : it->second) {
          const bool on_axis = std::any_of(spec.axes.begin(), spec.axes.end(),
                                           [&](const Axis& ax) { return ax.key == key; });
          if (!on_axis) params.set(key, value);
        }
      }
      const auto obs = evaluate_point(spec.experiment, params);
      row.insert(row.end(), obs.begin(), obs.end());
    } catch (const std::exception& ex) {
      row.resize(spec.axes.size());
      row.insert(row.end(), observables.size(), std::numeric_limits<double>::quiet_NaN());
      point_errors[index] = "row " + std::to_string(index) + ": " + ex.what();
    }
    result.rows[index] = std::move(row);
  };

  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  if (workers == 1 || points < 2) {
    for (std::size_t i = 0; i < points; ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, points); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < points; i = next++) evaluate(i);
      });
    }
  }

  for (auto& e : point_errors) {
    if (!e.empty()) result.errors.push_back(std::move(e));
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  result.metadata.push_back("experiment " + spec.id);
  result.metadata.push_back("observable " + std::string(to_string(spec.experiment)));
  result.metadata.push_back("code_version " + std::string(kCodeVersion));
  for (const auto& axis : spec.axes) {
    result.metadata.push_back("axis " + axis.key + " " + format_values(axis.values));
  }
  for (const auto& [atoms, assignments] : spec.per_atoms) {
    for (const auto& [key, value] : assignments) {
      result.metadata.push_back("when N=" + std::to_string(atoms) + " " + key + " = " +
                                format_values({value}));
    }
  }
  append_echo(result.metadata, spec.base);
  for (const auto& e : result.errors) result.metadata.push_back("error " + e);
  result.metadata.push_back("wall_seconds " + std::to_string(result.wall_seconds));
  return result;
}

std::vector<std::string> figure_ids() { return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}; }

ProtocolParameters figure_timeseries_parameters() {
  ProtocolParameters p;  // defaults are the Fig. 5 operating point
  p.atoms = 5;
  p.omega = 5.0;
  p.delta = 0.0;
  p.tau = 1.4;
  p.control_width = 0.1;
  p.blockade = 500.0;
  p.gamma_R = 0.0;
  p.gamma_r = 0.0;
  return p;
}

SweepSpec figure_preset(std::string_view id) {
  SweepSpec spec;
  spec.id = std::string(id);
  spec.base = figure_timeseries_parameters();
  if (id == "fig2") {
    spec.experiment = Experiment::control_transfer;
    spec.axes = {Axis::list("T_c", "T_c", {0.1, 1.0}),
                 Axis::linear("delta_R", "delta_R_T", 0.0, 10.0, 101),
                 Axis::linear("omega_c0", "omega_c0_T", 0.0, 20.0, 101)};
  } else if (id == "fig3") {
    spec.experiment = Experiment::stirap_transfer;
    spec.axes = {Axis::list("N", "N", {1.0, 5.0}),
                 Axis::linear("omega", "omega_T", 0.0, 10.0, 101),
                 Axis::linear("delta", "delta_T", 0.0, 10.0, 101)};
  } else if (id == "fig4") {
    spec.experiment = Experiment::ensemble_decay;
    spec.base.omega = 9.5;
    spec.axes = {Axis::linear("N", "N", 1.0, 10.0, 10),
                 Axis::linear("gamma_r", "gamma_r_T", 0.0, 0.1, 21)};
  } else if (id == "fig6") {
    spec.experiment = Experiment::ghz_fidelity;
    spec.axes = {Axis::list("N", "N", {1.0, 5.0}),
                 Axis::linear("Delta", "Delta_T", 0.0, 1000.0, 50)};
    spec.per_atoms[1] = {{"omega", 3.5}};
    spec.per_atoms[5] = {{"omega", 5.0}};
  } else if (id == "fig7") {
    spec.experiment = Experiment::ghz_fidelity;
    spec.axes = {Axis::list("N", "N", {1.0, 5.0}),
                 Axis::linear("gamma", "gamma_T", 0.0, 0.01, 50)};
    spec.per_atoms[1] = {{"omega", 3.5}, {"Delta", 200.0}};
    spec.per_atoms[5] = {{"omega", 5.0}, {"Delta", 500.0}};
  } else if (id == "fig5") {
    throw std::invalid_argument("fig5 is a time series; use run_timeseries");
  } else {
    throw std::invalid_argument("unknown figure id '" + std::string(id) + "'");
  }
  return spec;
}

TimeseriesResult run_timeseries(const ProtocolParameters& params, std::string_view id) {
  const auto start = std::chrono::steady_clock::now();
  PropagationOptions opts;
  opts.rel_tol = params.rel_tol;
  opts.abs_tol = params.abs_tol;
  opts.positivity_stride = 10;

  TimeseriesResult out;
  out.run = run_ghz_protocol(params.resolve(), opts);
  const auto& traj = out.run.trajectory;

  out.series.columns = {"t_over_T", "p0g", "p0s", "p1g", "p1s"};
  out.series.rows.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out.series.rows.push_back({traj.times[i], traj.track("p0g")[i], traj.track("p0s")[i],
                               traj.track("p1g")[i], traj.track("p1s")[i]});
  }
  const auto& o = out.run.outcome;
  out.summary.columns = {"fidelity_raw", "fidelity_phase_optimized", "success_probability",
                         "optimal_phase"};
  out.summary.rows = {{o.fidelity_raw, o.fidelity_phase_optimized, o.success_probability,
                       o.optimal_phase}};

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (SweepResult* r : {&out.series, &out.summary}) {
    r->metadata.push_back("experiment " + std::string(id));
    r->metadata.push_back("observable ghz_timeseries");
    r->metadata.push_back("code_version " + std::string(kCodeVersion));
    append_echo(r->metadata, params);
    r->metadata.push_back("wall_seconds " + std::to_string(wall));
    r->wall_seconds = wall;
  }
  return out;
}

}  // namespace ghz
