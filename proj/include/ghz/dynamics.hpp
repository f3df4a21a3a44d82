#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghz/hamiltonians.hpp"
#include "ghz/integrator.hpp"
#include "ghz/types.hpp"

namespace ghz {

struct QuantumState {
  ComplexVector amplitudes;
  double time = 0.0;
};

struct DensityMatrix {
  ComplexMatrix matrix;
  double time = 0.0;

  static DensityMatrix pure(const QuantumState& psi);
};

using HamiltonianFn = std::function<ComplexMatrix(double)>;

/// Population |<i|psi>|^2 (or rho_ii) recorded at every output sample.
struct TrackedPopulation {
  std::string name;
  Eigen::Index index = 0;
};

struct PropagationOptions {
  ode::Method method = ode::Method::dormand_prince;
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  double rk4_step = 1e-3;
  /// Upper bound on adaptive steps. Set it below the narrowest pulse width so
  /// a pulse after a quiet stretch cannot be stepped over.
  double max_step = std::numeric_limits<double>::infinity();
  int samples = 2000;
  bool keep_states = false;
  /// Minimum eigenvalue of rho is checked every this many samples (and on the
  /// last one); 0 disables the check.
  int positivity_stride = 1;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::string> track_names;
  std::vector<std::vector<double>> tracks;

  std::vector<ComplexVector> states;           // closed runs with keep_states
  std::vector<ComplexMatrix> density_matrices;  // open runs with keep_states
  QuantumState final_state;                    // closed runs
  DensityMatrix final_density;                 // open runs

  double max_norm_drift = 0.0;   // closed: max | <psi|psi> - 1 |
  double max_trace_drift = 0.0;  // open: max | Tr rho - 1 |
  double min_eigenvalue = std::numeric_limits<double>::infinity();  // open
  ode::Stats stats;

  const std::vector<double>& track(std::string_view name) const;
};

/// Uniform grid of `samples` points covering [span.start, span.end].
std::vector<double> sample_grid(TimeSpan span, int samples);

/// i d/dt psi = H(t) psi.
Trajectory propagate_schrodinger(const HamiltonianFn& hamiltonian, const QuantumState& psi0,
                                 TimeSpan span, const PropagationOptions& options,
                                 std::span<const TrackedPopulation> tracked = {});

/// d/dt rho = -i [H, rho] - 1/2 sum {C^dag C, rho} + sum C rho C^dag with
/// constant collapse operators.
Trajectory propagate_lindblad(const HamiltonianFn& hamiltonian,
                              std::span<const ComplexMatrix> jumps, const DensityMatrix& rho0,
                              TimeSpan span, const PropagationOptions& options,
                              std::span<const TrackedPopulation> tracked = {});

struct RabiPopulations {
  double ground = 1.0;   // |c_0(inf)|^2 = cos^2 Theta
  double excited = 0.0;  // |c_R(inf)|^2 = sin^2 Theta
};

/// Resonant Gaussian pulse on a two-level system.
RabiPopulations rabi_two_level_analytic(double peak, double width);

/// Numerically propagates the control atom from |0> through one Gaussian
/// pulse centered at 0 and returns |c_R(inf)|^2.
double control_excitation(double peak, double width, double delta_R,
                          const PropagationOptions& options);

}  // namespace ghz
