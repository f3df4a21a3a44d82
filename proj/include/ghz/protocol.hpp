#pragma once

#include <stdexcept>

#include "ghz/dynamics.hpp"
#include "ghz/hamiltonians.hpp"
#include "ghz/types.hpp"

namespace ghz {

/// Raised when the |+> control outcome has (numerically) zero probability.
class DegenerateProjection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnsembleProjection {
  ComplexMatrix ensemble;  // normalized, on the 2N+1 Fock space
  double success_probability = 0.0;
};

struct FidelityReport {
  double raw = 0.0;              // <phi|rho|phi>, phi = (|g^N> + |s^N>)/sqrt 2
  double phase_optimized = 0.0;  // max over chi with |s^N> -> e^{i chi}|s^N>
  double optimal_phase = 0.0;    // chi in [0, 2 pi)
};

struct GhzOutcome {
  ComplexMatrix ensemble_state;
  double success_probability = 0.0;
  double fidelity_raw = 0.0;
  double fidelity_phase_optimized = 0.0;
  double optimal_phase = 0.0;
};

struct ProtocolRun {
  Trajectory trajectory;  // tracks p0g, p0s, p1g, p1s
  GhzOutcome outcome;
};

/// Projects the control atom onto |+> = (|0> + |1>)/sqrt 2 and traces it out.
EnsembleProjection project_control_plus(const ComplexVector& joint, int atoms);
EnsembleProjection project_control_plus(const ComplexMatrix& joint_rho, int atoms);

FidelityReport ghz_fidelity(const ComplexMatrix& rho, int atoms);

/// Full sequence pi pulse -> STIRAP -> pi pulse from (|0> + |1>)|g^N>/sqrt 2,
/// followed by the |+> measurement. Runs a closed-system propagation when both
/// decay rates vanish, the master equation otherwise.
ProtocolRun run_ghz_protocol(const ProtocolConfig& cfg, const PropagationOptions& options);

/// Initial joint state (|0> + |1>) (x) |g^N> / sqrt 2.
ComplexVector ghz_initial_state(int atoms);

struct TransferPopulations {
  double ground = 0.0;  // |c_{g^N}(inf)|^2
  double stored = 0.0;  // |c_{s^N}(inf)|^2
};

/// Bare ensemble STIRAP from |g^N>; master equation when gamma_r > 0.
TransferPopulations stirap_transfer_populations(const TargetParams& p, double gamma_r,
                                                TimeSpan span,
                                                const PropagationOptions& options);

/// Span covering both STIRAP pulses with six widths of margin.
TimeSpan default_stirap_span(double tau);

}  // namespace ghz
