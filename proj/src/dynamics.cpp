#include "ghz/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ghz/pulses.hpp"

namespace ghz {

DensityMatrix DensityMatrix::pure(const QuantumState& psi) {
  return {psi.amplitudes * psi.amplitudes.adjoint(), psi.time};
}

const std::vector<double>& Trajectory::track(std::string_view name) const {
  for (std::size_t i = 0; i < track_names.size(); ++i) {
    if (track_names[i] == name) return tracks[i];
  }
  throw std::out_of_range("no track named " + std::string(name));
}

std::vector<double> sample_grid(TimeSpan span, int samples) {
  if (samples < 2) throw std::invalid_argument("sample_grid: need at least 2 samples");
  if (!(span.end > span.start)) throw std::invalid_argument("sample_grid: empty time span");
  std::vector<double> grid(static_cast<std::size_t>(samples));
  const double dt = (span.end - span.start) / (samples - 1);
  for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = span.start + i * dt;
  grid.back() = span.end;
  return grid;
}

namespace {

ode::StepControl step_control(const PropagationOptions& options) {
  ode::StepControl ctl;
  ctl.method = options.method;
  ctl.rel_tol = options.rel_tol;
  ctl.abs_tol = options.abs_tol;
  ctl.fixed_step = options.rk4_step;
  ctl.max_step = options.max_step;
  return ctl;
}

void init_tracks(Trajectory& traj, std::span<const TrackedPopulation> tracked,
                 Eigen::Index dim, std::size_t samples) {
  for (const auto& t : tracked) {
    if (t.index < 0 || t.index >= dim) {
      throw std::out_of_range("tracked population '" + t.name + "' index out of range");
    }
    traj.track_names.push_back(t.name);
    traj.tracks.emplace_back().reserve(samples);
  }
  traj.times.reserve(samples);
}

// std::complex<double> is layout-compatible with double[2], so a real state of
// length 2n is viewed as n complex amplitudes without copying.
Eigen::Map<ComplexVector> complex_view(ode::RealState& x, Eigen::Index n) {
  return {reinterpret_cast<Complex*>(x.data()), n};
}
Eigen::Map<const ComplexVector> complex_view(const ode::RealState& x, Eigen::Index n) {
  return {reinterpret_cast<const Complex*>(x.data()), n};
}
Eigen::Map<ComplexMatrix> complex_view(ode::RealState& x, Eigen::Index rows, Eigen::Index cols) {
  return {reinterpret_cast<Complex*>(x.data()), rows, cols};
}
Eigen::Map<const ComplexMatrix> complex_view(const ode::RealState& x, Eigen::Index rows,
                                             Eigen::Index cols) {
  return {reinterpret_cast<const Complex*>(x.data()), rows, cols};
}

struct SparseEntry {
  Eigen::Index row;
  Eigen::Index col;
  Complex value;
};

std::vector<SparseEntry> nonzeros(const ComplexMatrix& m) {
  std::vector<SparseEntry> out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != Complex(0.0, 0.0)) out.push_back({i, j, m(i, j)});
    }
  }
  return out;
}

}  // namespace

Trajectory propagate_schrodinger(const HamiltonianFn& hamiltonian, const QuantumState& psi0,
                                 TimeSpan span, const PropagationOptions& options,
                                 std::span<const TrackedPopulation> tracked) {
  const double norm0 = psi0.amplitudes.squaredNorm();
  if (std::abs(norm0 - 1.0) > 1e-10) {
    throw std::invalid_argument("propagate_schrodinger: initial state is not normalized");
  }
  const auto grid = sample_grid(span, options.samples);
  Trajectory traj;
  init_tracks(traj, tracked, psi0.amplitudes.size(), grid.size());

  const Eigen::Index n = psi0.amplitudes.size();
  const Complex minus_i(0.0, -1.0);
  auto rhs = [&](double t, const ode::RealState& x, ode::RealState& dxdt) {
    dxdt.resize(2 * n);
    complex_view(dxdt, n).noalias() = minus_i * (hamiltonian(t) * complex_view(x, n));
  };
  auto sink = [&](double t, const ode::RealState& x) {
    const ComplexVector psi = complex_view(x, n);
    traj.times.push_back(t);
    for (std::size_t k = 0; k < tracked.size(); ++k) {
      traj.tracks[k].push_back(std::norm(psi(tracked[k].index)));
    }
    traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(psi.squaredNorm() - 1.0));
    if (options.keep_states) traj.states.push_back(psi);
    traj.final_state = {psi, t};
  };
  ode::RealState y(2 * n);
  complex_view(y, n) = psi0.amplitudes;
  traj.stats = ode::integrate(rhs, std::move(y), std::span<const double>(grid),
                              step_control(options), sink);
  return traj;
}

Trajectory propagate_lindblad(const HamiltonianFn& hamiltonian,
                              std::span<const ComplexMatrix> jumps, const DensityMatrix& rho0,
                              TimeSpan span, const PropagationOptions& options,
                              std::span<const TrackedPopulation> tracked) {
  const Eigen::Index dim = rho0.matrix.rows();
  if (rho0.matrix.cols() != dim) throw std::invalid_argument("propagate_lindblad: rho0 not square");
  if (std::abs(rho0.matrix.trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument("propagate_lindblad: initial trace is not 1");
  }
  ComplexMatrix decay_sum = ComplexMatrix::Zero(dim, dim);
  std::vector<std::vector<SparseEntry>> sparse_jumps;
  for (const ComplexMatrix& c : jumps) {
    if (c.rows() != dim || c.cols() != dim) {
      throw std::invalid_argument("propagate_lindblad: jump operator dimension mismatch");
    }
    auto entries = nonzeros(c);
    if (entries.empty()) continue;
    decay_sum += c.adjoint() * c;
    sparse_jumps.push_back(std::move(entries));
  }

  const auto grid = sample_grid(span, options.samples);
  Trajectory traj;
  init_tracks(traj, tracked, dim, grid.size());

  const Complex minus_i(0.0, -1.0);
  auto rhs = [&](double t, const ode::RealState& x, ode::RealState& dxdt) {
    // -i H_eff rho + h.c. with H_eff = H - (i/2) sum C^dag C
    dxdt.resize(2 * dim * dim);
    const auto rho = complex_view(x, dim, dim);
    auto out = complex_view(dxdt, dim, dim);
    const ComplexMatrix generator = minus_i * hamiltonian(t) - 0.5 * decay_sum;
    out.noalias() = generator * rho;
    out += out.adjoint().eval();
    for (const auto& entries : sparse_jumps) {
      for (const auto& a : entries) {
        for (const auto& b : entries) {
          out(a.row, b.row) += a.value * std::conj(b.value) * rho(a.col, b.col);
        }
      }
    }
  };

  std::size_t sample = 0;
  auto sink = [&](double t, const ode::RealState& x) {
    const auto raw = complex_view(x, dim, dim);
    const ComplexMatrix rho = 0.5 * (raw + raw.adjoint());
    traj.times.push_back(t);
    for (std::size_t k = 0; k < tracked.size(); ++k) {
      traj.tracks[k].push_back(rho(tracked[k].index, tracked[k].index).real());
    }
    traj.max_trace_drift = std::max(traj.max_trace_drift, std::abs(rho.trace().real() - 1.0));
    const bool last = sample + 1 == grid.size();
    if (options.positivity_stride > 0 &&
        (last || sample % static_cast<std::size_t>(options.positivity_stride) == 0)) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
      traj.min_eigenvalue = std::min(traj.min_eigenvalue, solver.eigenvalues().minCoeff());
    }
    if (options.keep_states) traj.density_matrices.push_back(rho);
    traj.final_density = {rho, t};
    ++sample;
  };
  ode::RealState y(2 * dim * dim);
  complex_view(y, dim, dim) = rho0.matrix;
  traj.stats = ode::integrate(rhs, std::move(y), std::span<const double>(grid),
                              step_control(options), sink);
  return traj;
}

RabiPopulations rabi_two_level_analytic(double peak, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("rabi_two_level_analytic: width must be > 0");
  const double area = pulse_area({peak, 0.0, width});
  const double c = std::cos(area);
  const double s = std::sin(area);
  return {c * c, s * s};
}

double control_excitation(double peak, double width, double delta_R,
                          const PropagationOptions& options) {
  const PulseParams pulse{peak, 0.0, width};
  pulse.validate();
  auto hamiltonian = [&](double t) -> ComplexMatrix {
    ComplexMatrix h = ComplexMatrix::Zero(kControlDim, kControlDim);
    const double half_rabi = 0.5 * gaussian_amplitude(pulse, t);
    h(kLevelR, kLevelR) = delta_R;
    h(kLevel0, kLevelR) = half_rabi;
    h(kLevelR, kLevel0) = half_rabi;
    return h;
  };
  QuantumState psi0{ComplexVector::Zero(kControlDim), 0.0};
  psi0.amplitudes(kLevel0) = 1.0;
  PropagationOptions opts = options;
  opts.samples = 2;
  opts.max_step = std::min(opts.max_step, 0.5 * width);
  const double half = 8.0 * width;
  const auto traj = propagate_schrodinger(hamiltonian, psi0, {-half, half}, opts);
  return std::norm(traj.final_state.amplitudes(kLevelR));
}

}  // namespace ghz
