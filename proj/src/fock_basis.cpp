#include "ghz/fock_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace ghz {

std::string to_string(const FockState& state) {
  return "|g" + std::to_string(state.n_g) + " s" + std::to_string(state.n_s) +
         " r" + std::to_string(state.n_r) + ">";
}

FockBasis::FockBasis(int atoms) : atoms_(atoms) {
  if (atoms < 1) {
    throw std::invalid_argument("FockBasis: atom count must be >= 1, got " +
                                std::to_string(atoms));
  }
  states_.reserve(2 * static_cast<std::size_t>(atoms) + 1);
  for (int n = 0; n <= atoms; ++n) states_.push_back({atoms - n, n, 0});
  for (int n = 0; n < atoms; ++n) states_.push_back({atoms - n - 1, n, 1});
}

std::size_t FockBasis::ground_block_index(int n) const {
  if (n < 0 || n > atoms_) throw std::out_of_range("ground_block_index");
  return static_cast<std::size_t>(n);
}

std::size_t FockBasis::rydberg_block_index(int n) const {
  if (n < 0 || n >= atoms_) throw std::out_of_range("rydberg_block_index");
  return static_cast<std::size_t>(atoms_ + 1 + n);
}

std::size_t FockBasis::index_of(const FockState& state) const {
  if (state.n_g < 0 || state.n_s < 0 || state.n_g + state.n_s + state.n_r != atoms_) {
    throw std::out_of_range("index_of: " + to_string(state) + " not in basis");
  }
  if (state.n_r == 0) return ground_block_index(state.n_s);
  if (state.n_r == 1) return rydberg_block_index(state.n_s);
  throw std::out_of_range("index_of: " + to_string(state) + " has n_r > 1");
}

FockBasis build_basis(int atoms) { return FockBasis(atoms); }

RealMatrix collective_coupling_matrix(const FockBasis& basis, Channel channel) {
  const int atoms = basis.atoms();
  const auto dim = static_cast<Eigen::Index>(basis.size());
  RealMatrix m = RealMatrix::Zero(dim, dim);
  for (int n = 0; n < atoms; ++n) {
    const auto from = static_cast<Eigen::Index>(basis.rydberg_block_index(n));
    if (channel == Channel::g) {
      // |g^{N-n-1} s^n r^1> -> sqrt(N-n) |g^{N-n} s^n r^0>
      m(static_cast<Eigen::Index>(basis.ground_block_index(n)), from) =
          std::sqrt(static_cast<double>(atoms - n));
    } else {
      // |g^{N-n-1} s^n r^1> -> sqrt(n+1) |g^{N-n-1} s^{n+1} r^0>
      m(static_cast<Eigen::Index>(basis.ground_block_index(n + 1)), from) =
          std::sqrt(static_cast<double>(n + 1));
    }
  }
  return m;
}

RealMatrix rydberg_number_matrix(const FockBasis& basis) {
  RealVector diag = RealVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (int n = 0; n < basis.atoms(); ++n) {
    diag(static_cast<Eigen::Index>(basis.rydberg_block_index(n))) = 1.0;
  }
  return diag.asDiagonal();
}

namespace {

// Per-atom levels in the product space.
constexpr int kG = 0;
constexpr int kS = 1;
constexpr int kR = 2;

int ipow3(int n) {
  int v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

int level_of(int index, int atom) {
  for (int i = 0; i < atom; ++i) index /= 3;
  return index % 3;
}

// Sigma_{mu,nu} = sum_j |mu>_j <nu|
RealMatrix collective_transition(int atoms, int mu, int nu) {
  const int dim = ipow3(atoms);
  RealMatrix m = RealMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int stride = 1;
    for (int j = 0; j < atoms; ++j, stride *= 3) {
      const int level = level_of(col, j);
      if (level != nu) continue;
      const int row = col + (mu - nu) * stride;
      m(row, col) += 1.0;
    }
  }
  return m;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TensorOracleMatrices tensor_oracle(int atoms) {
  if (atoms < 1) throw std::invalid_argument("tensor_oracle: atoms must be >= 1");
  if (atoms > 3) throw std::invalid_argument("tensor_oracle: refused for N > 3");

  const int dim = ipow3(atoms);
  const RealMatrix sigma_sg = collective_transition(atoms, kS, kG);
  const RealMatrix sigma_rg = collective_transition(atoms, kR, kG);

  RealVector all_g = RealVector::Zero(dim);
  all_g(0) = 1.0;

  const int basis_dim = 2 * atoms + 1;
  RealMatrix embed(dim, basis_dim);
  RealVector raised = all_g;  // Sigma_sg^n |g^N>
  for (int n = 0; n <= atoms; ++n) {
    const double norm0 =
        std::sqrt(factorial(atoms - n) / (factorial(atoms) * factorial(n)));
    embed.col(n) = norm0 * raised;
    if (n < atoms) {
      const double norm1 =
          std::sqrt(factorial(atoms - n - 1) / (factorial(atoms) * factorial(n)));
      embed.col(atoms + 1 + n) = norm1 * (sigma_rg * raised);
    }
    raised = sigma_sg * raised;
  }

  TensorOracleMatrices out;
  out.coupling_g = embed.transpose() * collective_transition(atoms, kG, kR) * embed;
  out.coupling_s = embed.transpose() * collective_transition(atoms, kS, kR) * embed;
  out.number = embed.transpose() * collective_transition(atoms, kR, kR) * embed;
  return out;
}

}  // namespace ghz
