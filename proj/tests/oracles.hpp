#pragma once

// Reference constructions used only by the tests. They share no code with
// the library: collective operators come from explicit symmetrization of the
// 3^N product space, spectra from a dense eigensolver.

#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Collective {
  MatrixXd coupling_g;  // sum_i |g><r|_i
  MatrixXd coupling_s;  // sum_i |s><r|_i
  MatrixXd number;      // sum_i |r><r|_i
};

// Level digits of one product state: 0 = g, 1 = s, 2 = r.
inline std::vector<int> digits(long index, int atoms) {
  std::vector<int> d(static_cast<std::size_t>(atoms));
  for (int i = 0; i < atoms; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(index % 3);
    index /= 3;
  }
  return d;
}

inline long pow3(int n) {
  long p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

// Columns: normalized symmetric states in the order
// (n_s = 0..N, no r) then (n_s = 0..N-1, one r).
inline MatrixXd symmetric_states(int atoms) {
  const long dim = pow3(atoms);
  MatrixXd s = MatrixXd::Zero(dim, 2 * atoms + 1);
  for (long k = 0; k < dim; ++k) {
    int ns = 0;
    int nr = 0;
    for (int d : digits(k, atoms)) {
      ns += d == 1;
      nr += d == 2;
    }
    if (nr == 0) s(k, ns) = 1.0;
    if (nr == 1) s(k, atoms + 1 + ns) = 1.0;
  }
  for (int c = 0; c < s.cols(); ++c) s.col(c).normalize();
  return s;
}

inline MatrixXd product_operator(int atoms, int to, int from) {
  const long dim = pow3(atoms);
  MatrixXd op = MatrixXd::Zero(dim, dim);
  for (long k = 0; k < dim; ++k) {
    long stride = 1;
    for (int d : digits(k, atoms)) {
      if (d == from) op(k + (to - from) * stride, k) += 1.0;
      stride *= 3;
    }
  }
  return op;
}

inline Collective collective(int atoms) {
  const MatrixXd s = symmetric_states(atoms);
  return {s.transpose() * product_operator(atoms, 0, 2) * s,
          s.transpose() * product_operator(atoms, 1, 2) * s,
          s.transpose() * product_operator(atoms, 2, 2) * s};
}

inline double gaussian(double peak, double center, double t) {
  return peak * std::exp(-0.5 * (t - center) * (t - center));
}

// Ensemble Hamiltonian with the pump (g-r) at +tau/2 and Stokes (s-r) at -tau/2.
inline MatrixXd target_hamiltonian(const Collective& c, double omega, double tau, double delta,
                                   double t) {
  const double og = gaussian(omega, 0.5 * tau, t);
  const double os = gaussian(omega, -0.5 * tau, t);
  return delta * c.number + 0.5 * og * (c.coupling_g + c.coupling_g.transpose()) +
         0.5 * os * (c.coupling_s + c.coupling_s.transpose());
}

struct NonadiabaticSum {
  double total = 0.0;       // sum over every eigenstate other than the dark one
  double lowest_pair = 0.0;  // lambda_{+1} and lambda_{-1} only
  double higher = 0.0;      // everything else
};

// Zero-eigenvalue eigenvector: the one with the smallest weight on the
// Rydberg block (the dark state has none).
inline VectorXd dark_vector(const Eigen::SelfAdjointEigenSolver<MatrixXd>& es, int atoms) {
  Eigen::Index best = 0;
  double best_weight = 1e300;
  for (Eigen::Index m = 0; m < es.eigenvalues().size(); ++m) {
    const double w = es.eigenvectors().col(m).tail(atoms).squaredNorm();
    if (w < best_weight) {
      best_weight = w;
      best = m;
    }
  }
  return es.eigenvectors().col(best);
}

// Sum_m |<lambda_m|dO/dt>| / |E_m| with dO/dt from a fourth-order central
// difference of numerically found dark states.
inline NonadiabaticSum nonadiabatic_sum(int atoms, double omega, double tau, double delta,
                                        double t, double h = 1e-3) {
  const Collective c = collective(atoms);
  auto solve = [&](double at) {
    return Eigen::SelfAdjointEigenSolver<MatrixXd>(
        target_hamiltonian(c, omega, tau, delta, at));
  };
  const auto es = solve(t);
  const VectorXd dark = dark_vector(es, atoms);
  auto aligned = [&](double at) {
    VectorXd v = dark_vector(solve(at), atoms);
    return v.dot(dark) < 0 ? VectorXd(-v) : v;
  };
  const VectorXd dot = (8.0 * (aligned(t + h) - aligned(t - h)) -
                        (aligned(t + 2 * h) - aligned(t - 2 * h))) /
                       (12.0 * h);

  // lambda_{+1}: smallest positive eigenvalue; lambda_{-1}: largest negative.
  const auto& e = es.eigenvalues();
  Eigen::Index dark_index = 0;
  for (Eigen::Index m = 0; m < e.size(); ++m) {
    if (std::abs(std::abs(es.eigenvectors().col(m).dot(dark)) - 1.0) < 1e-9) dark_index = m;
  }
  Eigen::Index plus1 = -1;
  Eigen::Index minus1 = -1;
  for (Eigen::Index m = 0; m < e.size(); ++m) {
    if (m == dark_index) continue;
    if (e(m) > 0 && (plus1 < 0 || e(m) < e(plus1))) plus1 = m;
    if (e(m) < 0 && (minus1 < 0 || e(m) > e(minus1))) minus1 = m;
  }
  NonadiabaticSum out;
  for (Eigen::Index m = 0; m < e.size(); ++m) {
    if (m == dark_index) continue;
    const double term = std::abs(es.eigenvectors().col(m).dot(dot)) / std::abs(e(m));
    out.total += term;
    if (m == plus1 || m == minus1) {
      out.lowest_pair += term;
    } else {
      out.higher += term;
    }
  }
  return out;
}

}  // namespace oracle
