#pragma once

namespace ghz {

// All times and frequencies are dimensionless, scaled by the STIRAP pulse
// width T.

/// Gaussian envelope: peak * exp(-(t - center)^2 / (2 width^2)).
struct PulseParams {
  double peak = 0.0;
  double center = 0.0;
  double width = 1.0;

  void validate() const;
};

/// Counter-intuitive STIRAP pair of unit-width Gaussians: the Stokes pulse
/// (coupling s-r) peaks at -tau/2, the pump pulse (coupling g-r) at +tau/2.
struct StirapPair {
  double omega = 0.0;
  double tau = 0.0;

  void validate() const;
  PulseParams stokes() const { return {omega, -0.5 * tau, 1.0}; }
  PulseParams pump() const { return {omega, 0.5 * tau, 1.0}; }
};

double gaussian_amplitude(const PulseParams& p, double t);

/// Theta = integral of envelope / 2 = peak * width * sqrt(pi/2).
double pulse_area(const PulseParams& p);

/// Peak giving area (2p+1) pi/2, i.e. complete |0> -> |R> transfer on resonance.
double pi_pulse_peak(double width, int p = 0);

struct MixingAngle {
  double theta = 0.0;
  double theta_dot = 0.0;
};

/// tan(theta) = Omega_g / Omega_s, evaluated in the closed form
/// theta = arctan(exp(t tau)), theta_dot = (tau/2) / cosh(t tau). The closed
/// form stays finite where both envelopes underflow.
MixingAngle mixing_angle_theta(const StirapPair& s, double t);

/// Omega_0(t) = sqrt(Omega_g^2 + Omega_s^2).
double rms_rabi(const StirapPair& s, double t);

/// tan(phi) = Omega_0 / delta for omega0, delta >= 0; pi/2 when delta == 0
/// (including the 0/0 corner).
double mixing_angle_phi(double omega0, double delta);

}  // namespace ghz
