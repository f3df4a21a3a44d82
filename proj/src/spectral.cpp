#include "ghz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ghz {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::transfer:
      return "transfer";
    case Regime::blocked:
      return "blocked";
    case Regime::indeterminate:
      break;
  }
  return "indeterminate";
}

std::vector<double> eigenenergies_analytic(int atoms, double omega0, double phi) {
  if (atoms < 1) throw std::invalid_argument("eigenenergies_analytic: N must be >= 1");
  if (!(omega0 >= 0.0)) throw std::invalid_argument("eigenenergies_analytic: omega0 must be >= 0");
  if (!(phi > 0.0 && phi < kPi)) {
    throw std::invalid_argument("eigenenergies_analytic: phi must lie in (0, pi)");
  }
  const double cot = (phi == kPi / 2.0) ? 0.0 : std::cos(phi) / std::sin(phi);
  std::vector<double> out{0.0};
  for (int n = 1; n <= atoms; ++n) {
    const double root = std::sqrt(n + cot * cot);
    out.push_back(0.5 * omega0 * (cot + root));
    out.push_back(0.5 * omega0 * (cot - root));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double binomial(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

DarkState dark_state(int atoms, double theta) {
  if (atoms < 1) throw std::invalid_argument("dark_state: N must be >= 1");
  DarkState out{atoms, theta, RealVector::Zero(2 * atoms + 1)};
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (int n = 0; n <= atoms; ++n) {
    const double sign = ((atoms - n) % 2 == 0) ? 1.0 : -1.0;
    out.amplitudes(n) =
        sign * std::sqrt(binomial(atoms, n)) * std::pow(c, atoms - n) * std::pow(s, n);
  }
  return out;
}

RealVector dark_state_theta_derivative(int atoms, double theta) {
  if (atoms < 1) throw std::invalid_argument("dark_state_theta_derivative: N must be >= 1");
  RealVector out = RealVector::Zero(2 * atoms + 1);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (int n = 0; n <= atoms; ++n) {
    const double sign = ((atoms - n) % 2 == 0) ? 1.0 : -1.0;
    const int k = atoms - n;
    // d/dtheta [c^k s^n] = -k c^{k-1} s^{n+1} + n c^{k+1} s^{n-1}
    double d = 0.0;
    if (k > 0) d -= k * std::pow(c, k - 1) * std::pow(s, n + 1);
    if (n > 0) d += n * std::pow(c, k + 1) * std::pow(s, n - 1);
    out(n) = sign * std::sqrt(binomial(atoms, n)) * d;
  }
  return out;
}

double f_of_phi(double phi) {
  const double s = std::sin(0.5 * phi);
  const double c = std::cos(0.5 * phi);
  return s * c / (s * s * s + c * c * c);
}

double adiabaticity_lhs(const StirapPair& s, double delta, int atoms, double t) {
  if (atoms < 1) throw std::invalid_argument("adiabaticity_lhs: N must be >= 1");
  const double omega0 = rms_rabi(s, t);
  if (!(omega0 > 0.0)) {
    throw std::domain_error("adiabaticity_lhs: Omega_0 vanishes (out of pulse support)");
  }
  const double theta_dot = mixing_angle_theta(s, t).theta_dot;
  if (theta_dot == 0.0) return 0.0;
  const double phi = mixing_angle_phi(omega0, std::abs(delta));
  return 2.0 * std::sqrt(static_cast<double>(atoms)) * theta_dot / (omega0 * f_of_phi(phi));
}

double adiabaticity_rhs_scaled(const StirapPair& s, double delta, int atoms, double t) {
  const double omega0 = rms_rabi(s, t);
  const double phi = mixing_angle_phi(omega0, std::abs(delta));
  return std::sqrt(2.0 / atoms) * (s.omega / s.tau) *
         std::exp(-0.5 * (t * t + 0.25 * s.tau * s.tau)) *
         std::pow(std::cosh(t * s.tau), 1.5) * f_of_phi(phi);
}

RegimeReport regime_classify(double omega, double delta, int atoms, double kappa) {
  if (atoms < 1) throw std::invalid_argument("regime_classify: N must be >= 1");
  if (!(omega >= 0.0) || !(delta >= 0.0)) {
    throw std::invalid_argument("regime_classify: omega and delta must be >= 0");
  }
  const double root_n = std::sqrt(static_cast<double>(atoms));
  const double inf = std::numeric_limits<double>::infinity();
  RegimeReport r;
  r.kappa = kappa;
  r.coupling_ratio = omega / root_n;
  r.transfer_ratio = delta > 0.0 ? omega * omega / (root_n * delta) : inf;
  r.blocked_ratio = omega > 0.0 ? delta / (root_n * omega * omega) : inf;

  if (omega * omega / root_n >= kappa * delta && r.coupling_ratio >= kappa) {
    r.regime = Regime::transfer;
  } else if (delta >= kappa * root_n * omega * omega) {
    r.regime = Regime::blocked;
  } else {
    r.regime = Regime::indeterminate;
  }
  return r;
}

AdiabaticityReport adiabaticity_margin(const StirapPair& s, double delta, int atoms,
                                       double kappa) {
  if (atoms < 1) throw std::invalid_argument("adiabaticity_margin: N must be >= 1");
  if (!(s.omega > 0.0)) throw std::invalid_argument("adiabaticity_margin: omega must be > 0");
  const double abs_delta = std::abs(delta);
  AdiabaticityReport report;
  report.regime = regime_classify(s.omega, abs_delta, atoms, kappa);
  if (s.tau == 0.0) {
    report.degenerate = true;
    report.margin_transfer = std::numeric_limits<double>::infinity();
    report.margin_exact = std::numeric_limits<double>::infinity();
    return report;
  }

  const double root_n = std::sqrt(static_cast<double>(atoms));
  if (abs_delta > s.omega) {
    report.margin_transfer = s.omega * s.omega / (root_n * s.tau * abs_delta) *
                             std::exp(-0.25 * s.tau * s.tau);
  } else {
    report.margin_transfer = s.omega / (root_n * s.tau) * std::exp(-0.125 * s.tau * s.tau);
  }
  report.margin_exact = adiabaticity_rhs_scaled(s, abs_delta, atoms, 0.0);

  // Window where the envelopes carry the transfer: one width beyond each peak.
  const double half_window = 0.5 * s.tau + 1.0;
  constexpr int kSamples = 401;
  for (int i = 0; i < kSamples; ++i) {
    const double t = -half_window + 2.0 * half_window * i / (kSamples - 1);
    report.lhs_max = std::max(report.lhs_max, adiabaticity_lhs(s, abs_delta, atoms, t));
  }
  return report;
}

}  // namespace ghz
