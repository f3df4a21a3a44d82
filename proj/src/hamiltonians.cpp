#include "ghz/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghz {

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw std::invalid_argument(field + ": " + what);
}

RealMatrix kron_identity_left(int left_dim, const RealMatrix& right) {
  const Eigen::Index d = right.rows();
  RealMatrix out = RealMatrix::Zero(left_dim * d, left_dim * d);
  for (int a = 0; a < left_dim; ++a) out.block(a * d, a * d, d, d) = right;
  return out;
}

RealMatrix kron(const RealMatrix& left, const RealMatrix& right) {
  const Eigen::Index d = right.rows();
  RealMatrix out = RealMatrix::Zero(left.rows() * d, left.cols() * right.cols());
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    for (Eigen::Index j = 0; j < left.cols(); ++j) {
      if (left(i, j) != 0.0) {
        out.block(i * d, j * right.cols(), d, right.cols()) = left(i, j) * right;
      }
    }
  }
  return out;
}

RealMatrix control_projector(int level) {
  RealMatrix p = RealMatrix::Zero(kControlDim, kControlDim);
  p(level, level) = 1.0;
  return p;
}

}  // namespace

void ControlParams::validate() const {
  require(std::isfinite(omega_c0) && omega_c0 >= 0.0, "omega_c0", "must be finite and >= 0");
  require(std::isfinite(delta_R), "delta_R", "must be finite");
  require(std::isfinite(width) && width > 0.0, "T_c", "must be finite and > 0");
  require(std::isfinite(center), "tau_c", "must be finite");
}

double ControlParams::envelope(double t) const {
  return gaussian_amplitude({omega_c0, -center, width}, t) +
         gaussian_amplitude({omega_c0, center, width}, t);
}

void TargetParams::validate() const {
  require(atoms >= 1, "N", "must be >= 1");
  require(std::isfinite(stirap.omega) && stirap.omega >= 0.0, "omega", "must be finite and >= 0");
  require(std::isfinite(stirap.tau) && stirap.tau >= 0.0, "tau", "must be finite and >= 0");
  require(std::isfinite(delta), "delta", "must be finite");
}

void ProtocolConfig::validate() const {
  control.validate();
  target.validate();
  require(std::isfinite(blockade), "Delta", "must be finite");
  require(std::isfinite(gamma_R) && gamma_R >= 0.0, "gamma_R", "must be finite and >= 0");
  require(std::isfinite(gamma_r) && gamma_r >= 0.0, "gamma_r", "must be finite and >= 0");
  require(std::isfinite(t_span.start) && std::isfinite(t_span.end) && t_span.end > t_span.start,
          "t_span", "t_end must exceed t_start");
  require(tol.rel > 0.0 && tol.abs > 0.0, "rtol", "tolerances must be > 0");
  require(samples >= 2, "samples", "must be >= 2");
}

double default_control_center(double tau, double control_width) {
  return tau + 4.0 * (1.0 + control_width);
}

TimeSpan default_time_span(double control_center, double control_width) {
  const double half = control_center + 5.0 * control_width + 1.0;
  return {-half, half};
}

RealMatrix control_hamiltonian(const ControlParams& c, double t) {
  RealMatrix h = RealMatrix::Zero(kControlDim, kControlDim);
  const double half_rabi = 0.5 * c.envelope(t);
  h(kLevelR, kLevelR) = c.delta_R;
  h(kLevel0, kLevelR) = half_rabi;
  h(kLevelR, kLevel0) = half_rabi;
  return h;
}

TargetHamiltonian::TargetHamiltonian(const TargetParams& p, const FockBasis& basis)
    : params_(p) {
  if (p.atoms != basis.atoms()) {
    throw std::invalid_argument("target Hamiltonian: params N=" + std::to_string(p.atoms) +
                                " but basis N=" + std::to_string(basis.atoms()));
  }
  number_ = rydberg_number_matrix(basis);
  const RealMatrix a_g = collective_coupling_matrix(basis, Channel::g);
  const RealMatrix a_s = collective_coupling_matrix(basis, Channel::s);
  coupling_g_sym_ = a_g + a_g.transpose();
  coupling_s_sym_ = a_s + a_s.transpose();
}

RealMatrix TargetHamiltonian::operator()(double t) const {
  const double pump = gaussian_amplitude(params_.stirap.pump(), t);
  const double stokes = gaussian_amplitude(params_.stirap.stokes(), t);
  return params_.delta * number_ + (0.5 * pump) * coupling_g_sym_ +
         (0.5 * stokes) * coupling_s_sym_;
}

RealMatrix target_hamiltonian(const TargetParams& p, const FockBasis& basis, double t) {
  return TargetHamiltonian(p, basis)(t);
}

TotalHamiltonian::TotalHamiltonian(const ProtocolConfig& cfg, const FockBasis& basis)
    : control_(cfg.control),
      stirap_(cfg.target.stirap),
      fock_dim_(static_cast<Eigen::Index>(basis.size())) {
  if (cfg.target.atoms != basis.atoms()) {
    throw std::invalid_argument("total Hamiltonian: config N=" + std::to_string(cfg.target.atoms) +
                                " but basis N=" + std::to_string(basis.atoms()));
  }
  const RealMatrix number = rydberg_number_matrix(basis);
  const RealMatrix a_g = collective_coupling_matrix(basis, Channel::g);
  const RealMatrix a_s = collective_coupling_matrix(basis, Channel::s);
  const RealMatrix fock_identity = RealMatrix::Identity(fock_dim_, fock_dim_);

  static_part_ = kron_identity_left(kControlDim, cfg.target.delta * number) +
                 kron(control_projector(kLevelR), cfg.blockade * number) +
                 kron(control_projector(kLevelR), cfg.control.delta_R * fock_identity);

  RealMatrix flip = RealMatrix::Zero(kControlDim, kControlDim);
  flip(kLevel0, kLevelR) = 1.0;
  flip(kLevelR, kLevel0) = 1.0;
  control_coupling_ = kron(flip, fock_identity);
  coupling_g_ = kron_identity_left(kControlDim, a_g + a_g.transpose());
  coupling_s_ = kron_identity_left(kControlDim, a_s + a_s.transpose());
}

RealMatrix TotalHamiltonian::operator()(double t) const {
  const double pump = gaussian_amplitude(stirap_.pump(), t);
  const double stokes = gaussian_amplitude(stirap_.stokes(), t);
  return static_part_ + (0.5 * control_.envelope(t)) * control_coupling_ +
         (0.5 * pump) * coupling_g_ + (0.5 * stokes) * coupling_s_;
}

RealMatrix total_hamiltonian(const ProtocolConfig& cfg, const FockBasis& basis, double t) {
  return TotalHamiltonian(cfg, basis)(t);
}

std::vector<ComplexMatrix> target_jump_operators(const FockBasis& basis, double gamma_r) {
  if (!(gamma_r >= 0.0)) throw std::invalid_argument("gamma_r: decay rate must be >= 0");
  const auto dim = static_cast<Eigen::Index>(basis.size());
  RealMatrix to_g = RealMatrix::Zero(dim, dim);
  RealMatrix to_s = RealMatrix::Zero(dim, dim);
  for (int n = 0; n < basis.atoms(); ++n) {
    const auto from = static_cast<Eigen::Index>(basis.rydberg_block_index(n));
    to_g(static_cast<Eigen::Index>(basis.ground_block_index(n)), from) = 1.0;
    to_s(static_cast<Eigen::Index>(basis.ground_block_index(n + 1)), from) = 1.0;
  }
  const double amp = std::sqrt(gamma_r);
  return {(amp * to_g).cast<Complex>(), (amp * to_s).cast<Complex>()};
}

std::vector<ComplexMatrix> jump_operators(const ProtocolConfig& cfg, const FockBasis& basis) {
  if (!(cfg.gamma_R >= 0.0)) throw std::invalid_argument("gamma_R: decay rate must be >= 0");
  const auto fock_dim = static_cast<Eigen::Index>(basis.size());
  RealMatrix lower = RealMatrix::Zero(kControlDim, kControlDim);
  lower(kLevel0, kLevelR) = std::sqrt(cfg.gamma_R);

  std::vector<ComplexMatrix> out;
  out.push_back(kron(lower, RealMatrix::Identity(fock_dim, fock_dim)).cast<Complex>());
  for (const ComplexMatrix& target : target_jump_operators(basis, cfg.gamma_r)) {
    out.push_back(kron_identity_left(kControlDim, target.real()).cast<Complex>());
  }
  return out;
}

}  // namespace ghz
