#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghz/parameters.hpp"
#include "ghz/protocol.hpp"

namespace ghz {

/// What a grid point evaluates.
enum class Experiment {
  control_transfer,  // |c_R(inf)|^2 after one control pulse from |0>
  stirap_transfer,   // closed-system ensemble STIRAP populations
  ensemble_decay,    // ensemble STIRAP under target decay
  ghz_fidelity,      // full protocol fidelities
};

std::string_view to_string(Experiment e);
Experiment experiment_from_string(std::string_view name);
std::vector<std::string> observable_columns(Experiment e);

struct Axis {
  std::string key;    // ProtocolParameters key
  std::string label;  // CSV column name
  std::vector<double> values;

  static Axis linear(std::string key, std::string label, double min, double max, int count);
  static Axis list(std::string key, std::string label, std::vector<double> values);
};

struct SweepSpec {
  std::string id = "custom";
  Experiment experiment = Experiment::ghz_fidelity;
  std::vector<Axis> axes;
  ProtocolParameters base;
  /// Extra assignments applied whenever the N axis takes the given value.
  std::map<int, std::vector<std::pair<std::string, double>>> per_atoms;

  void validate() const;
  std::size_t point_count() const;
};

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> metadata;  // '#' preamble lines, without the '#'
  std::vector<std::string> errors;
  double wall_seconds = 0.0;
};

inline constexpr std::string_view kCodeVersion = "ghzsim 1.0.0";

/// Evaluates every grid point (last axis fastest). Failed points become NaN
/// rows with an entry in `errors`. Output does not depend on `jobs`.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 1);

/// Observables for a single parameter set, in observable_columns() order.
std::vector<double> evaluate_point(Experiment e, const ProtocolParameters& params);

/// Presets for fig2, fig3, fig4, fig6, fig7. fig5 is a time series: use
/// figure_timeseries_parameters() and run_timeseries().
SweepSpec figure_preset(std::string_view id);
std::vector<std::string> figure_ids();
ProtocolParameters figure_timeseries_parameters();

struct TimeseriesResult {
  SweepResult series;   // t_over_T, p0g, p0s, p1g, p1s
  SweepResult summary;  // fidelity_raw, fidelity_phase_optimized, success_probability, ...
  ProtocolRun run;
};

TimeseriesResult run_timeseries(const ProtocolParameters& params, std::string_view id = "fig5");

}  // namespace ghz
