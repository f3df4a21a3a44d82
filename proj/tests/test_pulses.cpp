#include <doctest.h>

#include <cmath>

#include "ghz/pulses.hpp"
#include "ghz/types.hpp"

using namespace ghz;

TEST_SUITE("pulses") {

TEST_CASE("gaussian envelope") {
  const PulseParams p{2.0, 0.3, 0.5};
  CHECK(gaussian_amplitude(p, 0.3) == doctest::Approx(2.0));
  CHECK(gaussian_amplitude(p, 0.8) == doctest::Approx(2.0 * std::exp(-0.5)));
  CHECK(gaussian_amplitude(p, -0.2) == doctest::Approx(2.0 * std::exp(-0.5)));
  CHECK(gaussian_amplitude({0.0, 0.0, 1.0}, 0.7) == 0.0);
  CHECK_THROWS_AS((PulseParams{1.0, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((PulseParams{-1.0, 0.0, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("pulse area and pi pulses") {
  const double root = std::sqrt(kPi / 2.0);
  CHECK(pulse_area({root, 0.0, 1.0}) == doctest::Approx(kPi / 2));
  CHECK(pulse_area({0.0, 0.0, 1.0}) == 0.0);
  CHECK(pulse_area({3.0 * root / 0.1, 0.0, 0.1}) == doctest::Approx(3 * kPi / 2));
  CHECK(pi_pulse_peak(0.1) == doctest::Approx(12.533141373155).epsilon(1e-12));
  CHECK(pi_pulse_peak(1.0) == doctest::Approx(1.2533141373155).epsilon(1e-12));
  CHECK(pi_pulse_peak(1.0, 1) == doctest::Approx(3.7599424119465).epsilon(1e-12));

  // The area is a peak * width invariant.
  for (double w : {0.05, 0.1, 0.7, 3.0}) {
    CHECK(pulse_area({pi_pulse_peak(w), 1.0, w}) == doctest::Approx(kPi / 2));
  }
  CHECK_THROWS_AS(pi_pulse_peak(0.0), std::invalid_argument);
  CHECK_THROWS_AS(pi_pulse_peak(1.0, -1), std::invalid_argument);
}

TEST_CASE("mixing angle theta") {
  const StirapPair s{5.0, 1.4};
  CHECK(mixing_angle_theta(s, 0.0).theta == doctest::Approx(kPi / 4));
  CHECK(mixing_angle_theta(s, 0.0).theta_dot == doctest::Approx(0.7));
  CHECK(mixing_angle_theta(s, -40.0).theta < 1e-20);
  CHECK(mixing_angle_theta(s, 40.0).theta == doctest::Approx(kPi / 2));

  // Against the defining ratio of the envelopes.
  for (double t : {-2.0, -0.5, 0.4, 1.9}) {
    const double ratio = gaussian_amplitude(s.pump(), t) / gaussian_amplitude(s.stokes(), t);
    CHECK(mixing_angle_theta(s, t).theta == doctest::Approx(std::atan(ratio)));
  }

  const double h = 1e-5;
  for (double t = -5.0; t <= 5.0; t += 0.25) {
    const double fd =
        (mixing_angle_theta(s, t + h).theta - mixing_angle_theta(s, t - h).theta) / (2 * h);
    CHECK(std::abs(fd - mixing_angle_theta(s, t).theta_dot) < 1e-6);
  }

  // Antisymmetry about t = 0.
  for (double t : {0.3, 1.1, 2.5}) {
    CHECK(mixing_angle_theta(s, t).theta + mixing_angle_theta(s, -t).theta ==
          doctest::Approx(kPi / 2));
  }
}

TEST_CASE("rms rabi frequency") {
  const StirapPair s{5.0, 1.4};
  CHECK(rms_rabi(s, 0.0) == doctest::Approx(std::sqrt(2.0) * 5.0 * std::exp(-1.4 * 1.4 / 8)));
  CHECK(rms_rabi(s, 0.7) == doctest::Approx(5.0 * std::sqrt(1 + std::exp(-1.96))));
  CHECK(rms_rabi(s, -0.7) == doctest::Approx(5.0 * std::sqrt(1 + std::exp(-1.96))));
  CHECK(rms_rabi({0.0, 1.4}, 0.3) == 0.0);
  for (double t : {-3.0, -1.0, 0.2, 2.2}) {
    const double og = gaussian_amplitude(s.pump(), t);
    const double os = gaussian_amplitude(s.stokes(), t);
    CHECK(rms_rabi(s, t) == doctest::Approx(std::hypot(og, os)));
  }
  CHECK(std::isfinite(rms_rabi(s, 60.0)));
}

TEST_CASE("mixing angle phi") {
  CHECK(mixing_angle_phi(3.0, 0.0) == doctest::Approx(kPi / 2));
  CHECK(mixing_angle_phi(0.0, 0.0) == doctest::Approx(kPi / 2));
  CHECK(mixing_angle_phi(2.0, 2.0) == doctest::Approx(kPi / 4));
  CHECK(mixing_angle_phi(1e-3, 10.0) == doctest::Approx(1e-4).epsilon(1e-6));
}

}
