#include <doctest.h>

#include <cmath>
#include <random>

#include "ghz/hamiltonians.hpp"
#include "ghz/spectral.hpp"
#include "oracles.hpp"

using namespace ghz;

namespace {

ProtocolConfig sample_config(int atoms) {
  ProtocolConfig cfg;
  cfg.target = {atoms, {5.0, 1.4}, 0.3};
  cfg.control = {12.5, 0.2, 0.1, default_control_center(1.4, 0.1)};
  cfg.blockade = 500.0;
  cfg.gamma_R = 0.01;
  cfg.gamma_r = 0.02;
  cfg.t_span = default_time_span(cfg.control.center, cfg.control.width);
  return cfg;
}

}  // namespace

TEST_SUITE("hamiltonians") {

TEST_CASE("control hamiltonian") {
  ControlParams c{0.0, 0.0, 0.1, 5.0};
  CHECK(control_hamiltonian(c, 5.0).isZero());

  c.omega_c0 = 7.0;
  c.delta_R = 1.5;
  const RealMatrix h = control_hamiltonian(c, -5.0);
  CHECK(h(kLevel0, kLevelR) == doctest::Approx(3.5));
  CHECK(h(kLevelR, kLevel0) == doctest::Approx(3.5));
  CHECK(h(kLevelR, kLevelR) == doctest::Approx(1.5));
  CHECK(h.row(kLevel1).isZero());
  for (double t : {-5.1, 0.0, 4.93}) CHECK((control_hamiltonian(c, t) - control_hamiltonian(c, t).transpose()).isZero());
}

TEST_CASE("single-atom target matrix") {
  const TargetParams p{1, {4.0, 1.4}, 0.7};
  const FockBasis b(1);
  for (double t : {-1.3, 0.0, 0.5}) {
    const double og = oracle::gaussian(4.0, 0.7, t);
    const double os = oracle::gaussian(4.0, -0.7, t);
    RealMatrix expected(3, 3);
    expected << 0, 0, og / 2, 0, 0, os / 2, og / 2, os / 2, 0.7;
    CHECK((target_hamiltonian(p, b, t) - expected).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("target hamiltonian annihilates the dark state") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int atoms : {1, 2, 5}) {
    const FockBasis b(atoms);
    for (int k = 0; k < 10; ++k) {
      const TargetParams p{atoms, {1.0 + 9.0 * u(rng), 2.0 * u(rng)}, 10.0 * u(rng)};
      const double t = -3.0 + 6.0 * u(rng);
      const auto dark = dark_state(atoms, mixing_angle_theta(p.stirap, t).theta);
      CHECK((target_hamiltonian(p, b, t) * dark.amplitudes).norm() < 1e-12);
      // Cached evaluation agrees with direct construction.
      CHECK((TargetHamiltonian(p, b)(t) - target_hamiltonian(p, b, t)).norm() < 1e-13);
    }
  }
}

TEST_CASE("detuning sign flips the spectrum") {
  const FockBasis b(4);
  const TargetParams plus{4, {3.0, 1.4}, 2.0};
  const TargetParams minus{4, {3.0, 1.4}, -2.0};
  const Eigen::VectorXd ep =
      Eigen::SelfAdjointEigenSolver<RealMatrix>(target_hamiltonian(plus, b, 0.3)).eigenvalues();
  const Eigen::VectorXd em =
      Eigen::SelfAdjointEigenSolver<RealMatrix>(target_hamiltonian(minus, b, 0.3)).eigenvalues();
  CHECK((ep + em.reverse()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("total hamiltonian structure") {
  const int atoms = 3;
  const FockBasis b(atoms);
  ProtocolConfig cfg = sample_config(atoms);
  const Eigen::Index d = static_cast<Eigen::Index>(b.size());

  for (double t : {-cfg.control.center, -0.3, 0.0, 2.1, cfg.control.center}) {
    const RealMatrix h = total_hamiltonian(cfg, b, t);
    CHECK(h.rows() == kControlDim * d);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((TotalHamiltonian(cfg, b)(t) - h).norm() < 1e-12);

    const RealMatrix ht = target_hamiltonian(cfg.target, b, t);
    const RealMatrix hc = control_hamiltonian(cfg.control, t);
    const RealMatrix number = rydberg_number_matrix(b);
    for (int a = 0; a < kControlDim; ++a) {
      for (int c = 0; c < kControlDim; ++c) {
        RealMatrix expected = hc(a, c) * RealMatrix::Identity(d, d);
        if (a == c) expected += ht;
        if (a == kLevelR && c == kLevelR) expected += cfg.blockade * number;
        CHECK((h.block(a * d, c * d, d, d) - expected).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  cfg.blockade = 0.0;
  const RealMatrix h0 = total_hamiltonian(cfg, b, 0.1);
  CHECK((h0.block(0, 0, d, d) - h0.block(d, d, d, d)).norm() < 1e-14);
}

TEST_CASE("jump operators") {
  const FockBasis b1(1);
  const auto lg = target_jump_operators(b1, 1.0);
  REQUIRE(lg.size() == 2);
  ComplexMatrix eg = ComplexMatrix::Zero(3, 3);
  eg(0, 2) = 1.0;
  ComplexMatrix es = ComplexMatrix::Zero(3, 3);
  es(1, 2) = 1.0;
  CHECK((lg[0] - eg).norm() == 0.0);
  CHECK((lg[1] - es).norm() == 0.0);
  for (const auto& c : target_jump_operators(b1, 0.0)) CHECK(c.isZero());

  for (int atoms : {1, 3, 6}) {
    const FockBasis b(atoms);
    const double gamma = 0.37;
    ComplexMatrix sum = ComplexMatrix::Zero(b.size(), b.size());
    for (const auto& c : target_jump_operators(b, gamma)) sum += c.adjoint() * c;
    CHECK((sum - 2.0 * gamma * rydberg_number_matrix(b).cast<Complex>()).norm() < 1e-13);
  }

  const int atoms = 2;
  const FockBasis b(atoms);
  const ProtocolConfig cfg = sample_config(atoms);
  const auto jumps = jump_operators(cfg, b);
  REQUIRE(jumps.size() == 3);
  const Eigen::Index d = static_cast<Eigen::Index>(b.size());
  // C_0R = sqrt(gamma_R) |0><R| (x) 1
  CHECK((jumps[0].block(kLevel0 * d, kLevelR * d, d, d) -
         std::sqrt(cfg.gamma_R) * ComplexMatrix::Identity(d, d))
            .norm() < 1e-15);
  CHECK(std::abs(jumps[0].squaredNorm() - cfg.gamma_R * d) < 1e-14);
  const auto local = target_jump_operators(b, cfg.gamma_r);
  for (int a = 0; a < kControlDim; ++a) {
    CHECK((jumps[1].block(a * d, a * d, d, d) - local[0]).norm() < 1e-15);
    CHECK((jumps[2].block(a * d, a * d, d, d) - local[1]).norm() < 1e-15);
  }
}

TEST_CASE("config validation names the field") {
  ProtocolConfig cfg = sample_config(2);
  CHECK_NOTHROW(cfg.validate());
  cfg.gamma_r = -0.1;
  try {
    cfg.validate();
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("gamma_r") != std::string::npos);
  }
  cfg = sample_config(2);
  cfg.t_span = {1.0, 1.0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = sample_config(2);
  cfg.target.atoms = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

}
