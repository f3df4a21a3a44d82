#pragma once

#include <vector>

#include "ghz/fock_basis.hpp"
#include "ghz/pulses.hpp"
#include "ghz/types.hpp"

namespace ghz {

/// Control index order in the joint space {|0>, |1>, |R>} (x) Fock basis;
/// the control index is major.
enum ControlLevel : int { kLevel0 = 0, kLevel1 = 1, kLevelR = 2 };
inline constexpr int kControlDim = 3;

/// Two identical Gaussian pulses on |0> <-> |R>, centered at -center and +center.
struct ControlParams {
  double omega_c0 = 0.0;
  double delta_R = 0.0;
  double width = 0.1;
  double center = 0.0;

  void validate() const;
  /// Sum of both pulse envelopes at t.
  double envelope(double t) const;
};

struct TargetParams {
  int atoms = 1;
  StirapPair stirap;
  double delta = 0.0;

  void validate() const;
};

struct TimeSpan {
  double start = 0.0;
  double end = 0.0;
};

struct Tolerances {
  double rel = 1e-9;
  double abs = 1e-11;
};

struct ProtocolConfig {
  ControlParams control;
  TargetParams target;
  double blockade = 0.0;  // Delta
  double gamma_R = 0.0;   // control |R> -> |0>
  double gamma_r = 0.0;   // each of the ensemble channels r -> g and r -> s
  TimeSpan t_span;
  Tolerances tol;
  int samples = 2000;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// tau_c = tau + 4 (T + T_c), in units of T.
double default_control_center(double tau, double control_width);

/// Symmetric span reaching 5 control widths plus one T beyond the outer pulses.
TimeSpan default_time_span(double control_center, double control_width);

RealMatrix control_hamiltonian(const ControlParams& c, double t);

RealMatrix target_hamiltonian(const TargetParams& p, const FockBasis& basis, double t);

RealMatrix total_hamiltonian(const ProtocolConfig& cfg, const FockBasis& basis, double t);

/// Collapse operators C_0R, C_gr, C_sr on the joint space, in that order.
std::vector<ComplexMatrix> jump_operators(const ProtocolConfig& cfg, const FockBasis& basis);

/// Ensemble-only channels sqrt(gamma_r) L_g and sqrt(gamma_r) L_s.
std::vector<ComplexMatrix> target_jump_operators(const FockBasis& basis, double gamma_r);

/// Caches the static matrices so per-step evaluation only rescales envelopes.
class TargetHamiltonian {
 public:
  TargetHamiltonian(const TargetParams& p, const FockBasis& basis);
  RealMatrix operator()(double t) const;

 private:
  TargetParams params_;
  RealMatrix number_;
  RealMatrix coupling_g_sym_;  // A_g + A_g^T
  RealMatrix coupling_s_sym_;
};

class TotalHamiltonian {
 public:
  TotalHamiltonian(const ProtocolConfig& cfg, const FockBasis& basis);
  RealMatrix operator()(double t) const;
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(kControlDim) * fock_dim_; }

 private:
  ControlParams control_;
  StirapPair stirap_;
  Eigen::Index fock_dim_;
  RealMatrix static_part_;  // delta, Delta and delta_R terms
  RealMatrix control_coupling_;  // (|0><R| + |R><0|) (x) 1
  RealMatrix coupling_g_;        // 1 (x) (A_g + A_g^T)
  RealMatrix coupling_s_;
};

}  // namespace ghz
