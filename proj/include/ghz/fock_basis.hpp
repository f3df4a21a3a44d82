#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ghz/types.hpp"

namespace ghz {

/// Occupation numbers of one permutation-symmetric ensemble state.
struct FockState {
  int n_g = 0;
  int n_s = 0;
  int n_r = 0;

  bool operator==(const FockState&) const = default;
};

std::string to_string(const FockState& state);

/// Symmetric basis of N three-level atoms with at most one Rydberg excitation.
///
/// Canonical order: the r^0 block |g^{N-n} s^n r^0> for n = 0..N, followed by
/// the r^1 block |g^{N-n-1} s^n r^1> for n = 0..N-1. Hence |g^N> sits at
/// index 0, |s^N> at index N and the basis has 2N+1 states.
class FockBasis {
 public:
  explicit FockBasis(int atoms);

  int atoms() const { return atoms_; }
  std::size_t size() const { return states_.size(); }
  std::span<const FockState> states() const { return states_; }
  const FockState& operator[](std::size_t i) const { return states_[i]; }

  /// Index of |g^{N-n} s^n r^0>, n in [0, N].
  std::size_t ground_block_index(int n) const;
  /// Index of |g^{N-n-1} s^n r^1>, n in [0, N-1].
  std::size_t rydberg_block_index(int n) const;
  std::size_t index_of(const FockState& state) const;

  std::size_t all_g_index() const { return 0; }
  std::size_t all_s_index() const { return static_cast<std::size_t>(atoms_); }

 private:
  int atoms_;
  std::vector<FockState> states_;
};

enum class Channel { g, s };

FockBasis build_basis(int atoms);

/// Matrix of a_mu^dagger sigma_r^- (mu = g or s) in the symmetric basis.
RealMatrix collective_coupling_matrix(const FockBasis& basis, Channel channel);

/// sigma_r^+ sigma_r^-: projector onto the r^1 block.
RealMatrix rydberg_number_matrix(const FockBasis& basis);

struct TensorOracleMatrices {
  RealMatrix coupling_g;
  RealMatrix coupling_s;
  RealMatrix number;
};

/// Builds the collective operators on the full 3^N product space, projects
/// them onto explicitly symmetrized states and returns them in the canonical
/// basis order. Independent cross-check of the closed forms; refuses N > 3.
TensorOracleMatrices tensor_oracle(int atoms);

}  // namespace ghz
