#pragma once

// Thin wrapper over Boost.Odeint for real Eigen vectors: adaptive
// Dormand-Prince 5(4) with dense output for sampling, and fixed-step RK4 for
// cross-validation. Complex states are integrated through a real view.

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>
#include <boost/numeric/odeint/external/eigen/eigen.hpp>

namespace ghz::ode {

enum class Method { dormand_prince, rk4 };

struct StepControl {
  Method method = Method::dormand_prince;
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  double max_step = std::numeric_limits<double>::infinity();
  int max_steps = 20'000'000;  // between consecutive samples
  double fixed_step = 1e-3;    // rk4 only
};

struct Stats {
  long steps = 0;
  long evaluations = 0;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double last_time)
      : std::runtime_error(what + " (last good t=" + std::to_string(last_time) + ")"),
        last_time_(last_time) {}
  double last_time() const { return last_time_; }

 private:
  double last_time_;
};

using RealState = Eigen::VectorXd;

/// Integrates dy/dt = rhs(t, y, dydt) from sample_times.front() and calls
/// sink(t, y) at every sample time. sample_times must be strictly increasing.
template <class Rhs, class Sink>
Stats integrate(Rhs&& rhs, RealState y, std::span<const double> sample_times,
                const StepControl& ctl, Sink&& sink) {
  namespace odeint = boost::numeric::odeint;
  if (sample_times.size() < 2) throw std::invalid_argument("integrate: need two sample times");

  Stats stats;
  double last_time = sample_times.front();
  auto system = [&](const RealState& x, RealState& dxdt, double t) {
    ++stats.evaluations;
    rhs(t, x, dxdt);
  };
  auto observer = [&](const RealState& x, double t) {
    last_time = t;
    sink(t, x);
  };
  const double span = sample_times.back() - sample_times.front();
  const odeint::max_step_checker checker(ctl.max_steps);

  try {
    if (ctl.method == Method::rk4) {
      odeint::runge_kutta4<RealState, double, RealState, double, odeint::vector_space_algebra>
          stepper;
      stats.steps = static_cast<long>(odeint::integrate_times(
          stepper, system, y, sample_times.begin(), sample_times.end(), ctl.fixed_step,
          observer, checker));
    } else {
      using Dopri = odeint::runge_kutta_dopri5<RealState, double, RealState, double,
                                               odeint::vector_space_algebra>;
      const double first_step = std::min(1e-3 * span, ctl.max_step);
      if (std::isfinite(ctl.max_step)) {
        auto stepper = odeint::make_dense_output(ctl.abs_tol, ctl.rel_tol, ctl.max_step, Dopri());
        stats.steps = static_cast<long>(odeint::integrate_times(
            stepper, system, y, sample_times.begin(), sample_times.end(), first_step, observer,
            checker));
      } else {
        auto stepper = odeint::make_dense_output(ctl.abs_tol, ctl.rel_tol, Dopri());
        stats.steps = static_cast<long>(odeint::integrate_times(
            stepper, system, y, sample_times.begin(), sample_times.end(), first_step, observer,
            checker));
      }
    }
  } catch (const odeint::odeint_error& e) {
    throw IntegrationError(e.what(), last_time);
  }
  if (!y.allFinite()) throw IntegrationError("state became non-finite", last_time);
  return stats;
}

}  // namespace ghz::ode
