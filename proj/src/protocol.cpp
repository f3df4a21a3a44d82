#include "ghz/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace ghz {

namespace {

constexpr double kMinSuccess = 1e-12;

Eigen::Index joint_index(int control, Eigen::Index fock, Eigen::Index fock_dim) {
  return static_cast<Eigen::Index>(control) * fock_dim + fock;
}

}  // namespace

EnsembleProjection project_control_plus(const ComplexVector& joint, int atoms) {
  const Eigen::Index d = 2 * atoms + 1;
  if (joint.size() != kControlDim * d) {
    throw std::invalid_argument("project_control_plus: state dimension does not match N");
  }
  const ComplexVector branch =
      (joint.segment(kLevel0 * d, d) + joint.segment(kLevel1 * d, d)) / std::sqrt(2.0);
  const double probability = branch.squaredNorm();
  if (probability < kMinSuccess) {
    throw DegenerateProjection("control |+> outcome has vanishing probability");
  }
  return {branch * branch.adjoint() / probability, probability};
}

EnsembleProjection project_control_plus(const ComplexMatrix& joint_rho, int atoms) {
  const Eigen::Index d = 2 * atoms + 1;
  if (joint_rho.rows() != kControlDim * d || joint_rho.cols() != kControlDim * d) {
    throw std::invalid_argument("project_control_plus: density matrix dimension does not match N");
  }
  ComplexMatrix block = ComplexMatrix::Zero(d, d);
  for (int a : {kLevel0, kLevel1}) {
    for (int b : {kLevel0, kLevel1}) block += joint_rho.block(a * d, b * d, d, d);
  }
  block *= 0.5;
  const double probability = block.trace().real();
  if (probability < kMinSuccess) {
    throw DegenerateProjection("control |+> outcome has vanishing probability");
  }
  return {block / probability, probability};
}

FidelityReport ghz_fidelity(const ComplexMatrix& rho, int atoms) {
  const Eigen::Index g = 0;
  const Eigen::Index s = atoms;
  if (rho.rows() != 2 * atoms + 1 || rho.cols() != rho.rows()) {
    throw std::invalid_argument("ghz_fidelity: density matrix dimension does not match N");
  }
  const double populations = 0.5 * (rho(g, g).real() + rho(s, s).real());
  const Complex coherence = rho(g, s);  // <g^N|rho|s^N>
  FidelityReport report;
  report.raw = populations + coherence.real();
  report.phase_optimized = populations + std::abs(coherence);
  double chi = -std::arg(coherence);
  if (chi < 0.0) chi += 2.0 * kPi;
  report.optimal_phase = std::abs(coherence) > 0.0 ? chi : 0.0;
  return report;
}

ComplexVector ghz_initial_state(int atoms) {
  const Eigen::Index d = 2 * atoms + 1;
  ComplexVector psi = ComplexVector::Zero(kControlDim * d);
  psi(joint_index(kLevel0, 0, d)) = 1.0 / std::sqrt(2.0);
  psi(joint_index(kLevel1, 0, d)) = 1.0 / std::sqrt(2.0);
  return psi;
}

ProtocolRun run_ghz_protocol(const ProtocolConfig& cfg, const PropagationOptions& options) {
  cfg.validate();
  const int atoms = cfg.target.atoms;
  const FockBasis basis(atoms);
  const auto d = static_cast<Eigen::Index>(basis.size());
  const TotalHamiltonian total(cfg, basis);
  const HamiltonianFn hamiltonian = [&total](double t) -> ComplexMatrix {
    return total(t).cast<Complex>();
  };

  const auto g = static_cast<Eigen::Index>(basis.all_g_index());
  const auto s = static_cast<Eigen::Index>(basis.all_s_index());
  const std::vector<TrackedPopulation> tracked{
      {"p0g", joint_index(kLevel0, g, d)},
      {"p0s", joint_index(kLevel0, s, d)},
      {"p1g", joint_index(kLevel1, g, d)},
      {"p1s", joint_index(kLevel1, s, d)},
  };

  PropagationOptions opts = options;
  opts.samples = cfg.samples;
  opts.rel_tol = cfg.tol.rel;
  opts.abs_tol = cfg.tol.abs;
  opts.max_step = std::min({opts.max_step, 0.5 * cfg.control.width, 0.5});

  const QuantumState psi0{ghz_initial_state(atoms), cfg.t_span.start};
  ProtocolRun run;
  EnsembleProjection projection;
  if (cfg.gamma_R == 0.0 && cfg.gamma_r == 0.0) {
    run.trajectory = propagate_schrodinger(hamiltonian, psi0, cfg.t_span, opts, tracked);
    projection = project_control_plus(run.trajectory.final_state.amplitudes, atoms);
  } else {
    const auto jumps = jump_operators(cfg, basis);
    run.trajectory = propagate_lindblad(hamiltonian, jumps, DensityMatrix::pure(psi0),
                                        cfg.t_span, opts, tracked);
    projection = project_control_plus(run.trajectory.final_density.matrix, atoms);
  }

  const FidelityReport fidelity = ghz_fidelity(projection.ensemble, atoms);
  run.outcome = {projection.ensemble, projection.success_probability, fidelity.raw,
                 fidelity.phase_optimized, fidelity.optimal_phase};
  return run;
}

TimeSpan default_stirap_span(double tau) {
  const double half = 0.5 * tau + 6.0;
  return {-half, half};
}

TransferPopulations stirap_transfer_populations(const TargetParams& p, double gamma_r,
                                                TimeSpan span,
                                                const PropagationOptions& options) {
  p.validate();
  if (!(gamma_r >= 0.0)) throw std::invalid_argument("gamma_r: decay rate must be >= 0");
  const FockBasis basis(p.atoms);
  const TargetHamiltonian target(p, basis);
  const HamiltonianFn hamiltonian = [&target](double t) -> ComplexMatrix {
    return target(t).cast<Complex>();
  };
  const auto g = static_cast<Eigen::Index>(basis.all_g_index());
  const auto s = static_cast<Eigen::Index>(basis.all_s_index());

  QuantumState psi0{ComplexVector::Zero(static_cast<Eigen::Index>(basis.size())), span.start};
  psi0.amplitudes(g) = 1.0;
  PropagationOptions opts = options;
  opts.max_step = std::min(opts.max_step, 0.5);

  if (gamma_r == 0.0) {
    const auto traj = propagate_schrodinger(hamiltonian, psi0, span, opts);
    const auto& psi = traj.final_state.amplitudes;
    return {std::norm(psi(g)), std::norm(psi(s))};
  }
  const auto jumps = target_jump_operators(basis, gamma_r);
  const auto traj =
      propagate_lindblad(hamiltonian, jumps, DensityMatrix::pure(psi0), span, opts);
  const auto& rho = traj.final_density.matrix;
  return {rho(g, g).real(), rho(s, s).real()};
}

}  // namespace ghz
