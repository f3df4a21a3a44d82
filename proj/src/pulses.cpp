#include "ghz/pulses.hpp"

#include <cmath>
#include <stdexcept>

#include "ghz/types.hpp"

namespace ghz {

namespace {
const double kSqrtHalfPi = std::sqrt(kPi / 2.0);
}

void PulseParams::validate() const {
  if (!(peak >= 0.0)) throw std::invalid_argument("pulse peak must be >= 0");
  if (!(width > 0.0)) throw std::invalid_argument("pulse width must be > 0");
}

void StirapPair::validate() const {
  if (!(omega >= 0.0)) throw std::invalid_argument("STIRAP omega must be >= 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("STIRAP tau must be >= 0");
}

double gaussian_amplitude(const PulseParams& p, double t) {
  const double x = (t - p.center) / p.width;
  return p.peak * std::exp(-0.5 * x * x);
}

double pulse_area(const PulseParams& p) { return p.peak * p.width * kSqrtHalfPi; }

double pi_pulse_peak(double width, int p) {
  if (!(width > 0.0)) throw std::invalid_argument("pi_pulse_peak: width must be > 0");
  if (p < 0) throw std::invalid_argument("pi_pulse_peak: p must be >= 0");
  return (2.0 * p + 1.0) * kSqrtHalfPi / width;
}

MixingAngle mixing_angle_theta(const StirapPair& s, double t) {
  const double x = t * s.tau;
  return {std::atan(std::exp(x)), 0.5 * s.tau / std::cosh(x)};
}

double rms_rabi(const StirapPair& s, double t) {
  if (s.omega == 0.0) return 0.0;
  const double x = std::abs(t * s.tau);
  // log(2 cosh x) without overflow
  const double log_two_cosh = x + std::log1p(std::exp(-2.0 * x));
  const double log_value = -0.5 * (t * t + 0.25 * s.tau * s.tau) + 0.5 * log_two_cosh;
  return s.omega * std::exp(log_value);
}

double mixing_angle_phi(double omega0, double delta) {
  if (delta == 0.0) return kPi / 2.0;
  return std::atan2(omega0, delta);
}

}  // namespace ghz
