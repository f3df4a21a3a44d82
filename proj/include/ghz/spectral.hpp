#pragma once

#include <string_view>
#include <vector>

#include "ghz/pulses.hpp"
#include "ghz/types.hpp"

namespace ghz {

/// Zero-energy eigenstate of the ensemble Hamiltonian. Amplitudes are in the
/// canonical Fock order and vanish on the r^1 block.
struct DarkState {
  int atoms = 1;
  double theta = 0.0;
  RealVector amplitudes;
};

enum class Regime { transfer, blocked, indeterminate };

std::string_view to_string(Regime regime);

struct RegimeReport {
  Regime regime = Regime::indeterminate;
  double kappa = 10.0;
  double transfer_ratio = 0.0;  // Omega^2 / (sqrt(N) delta)
  double coupling_ratio = 0.0;  // Omega / sqrt(N)
  double blocked_ratio = 0.0;   // delta / (sqrt(N) Omega^2)
};

struct AdiabaticityReport {
  double lhs_max = 0.0;          // max of the gap-weighted sum over the transfer window
  double margin_transfer = 0.0;  // asymptotic right-hand side at t = 0
  double margin_exact = 0.0;     // full right-hand side at t = 0 with the exact f(phi)
  bool degenerate = false;       // tau == 0: the pulses coincide
  RegimeReport regime;
};

inline constexpr double kDefaultDominance = 10.0;

/// {0} and (Omega_0/2)(cot phi +- sqrt(n + cot^2 phi)), n = 1..N, ascending.
/// Accepts phi in (0, pi); phi > pi/2 corresponds to a negative detuning.
std::vector<double> eigenenergies_analytic(int atoms, double omega0, double phi);

DarkState dark_state(int atoms, double theta);

/// d/dtheta of the dark-state amplitudes.
RealVector dark_state_theta_derivative(int atoms, double theta);

/// sin(phi/2) cos(phi/2) / (sin^3(phi/2) + cos^3(phi/2)).
double f_of_phi(double phi);

/// Sum over the two contributing eigenstates |<lambda_{+-1}|dO/dt> / E_{+-1}|,
/// i.e. 2 sqrt(N) theta_dot / (Omega_0 f(phi)). Throws std::domain_error where
/// Omega_0 vanishes.
double adiabaticity_lhs(const StirapPair& s, double delta, int atoms, double t);

/// sqrt(2/N) (Omega/tau) exp(-(t^2 + tau^2/4)/2) cosh^{3/2}(t tau) f(phi(t)).
double adiabaticity_rhs_scaled(const StirapPair& s, double delta, int atoms, double t);

AdiabaticityReport adiabaticity_margin(const StirapPair& s, double delta, int atoms,
                                       double kappa = kDefaultDominance);

/// Transfer if Omega^2/sqrt(N) >= kappa delta and Omega/sqrt(N) >= kappa;
/// blocked if delta >= kappa sqrt(N) Omega^2; indeterminate otherwise.
RegimeReport regime_classify(double omega, double delta, int atoms,
                             double kappa = kDefaultDominance);

}  // namespace ghz
