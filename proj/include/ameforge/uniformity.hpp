#pragma once

#include <vector>

#include "ameforge/state.hpp"

namespace ameforge {

struct UniformityReport {
  int k = 0;
  bool is_uniform = false;
  std::vector<int> worst_partition;
  double max_deviation = 0.0;  // max-abs entrywise distance of rho_A from I/d^k
};

// Max-abs deviation of each k-party reduction from the maximally mixed state,
// ordered like k_subsets(N, k). The plain version runs the subsets loop under
// OpenMP; the _serial variant is the reference implementation.
std::vector<double> reduction_deviations(const PureState& state, int k);
std::vector<double> reduction_deviations_serial(const PureState& state, int k);

UniformityReport is_k_uniform(const PureState& state, int k, double tol = kDefaultTol);
UniformityReport is_ame(const PureState& state, double tol = kDefaultTol);

// Purity of every balanced bipartition, ordered like k_subsets(N, floor(N/2)).
std::vector<double> balanced_purities(const PureState& state);
std::vector<double> balanced_purities_serial(const PureState& state);

// Mean balanced-bipartition purity; floor 1/d^{floor(N/2)} is reached exactly
// by states whose every balanced reduction is maximally mixed.
double entanglement_potential(const PureState& state);
double entanglement_potential_serial(const PureState& state);

// Qubit phase condition for one balanced bipartition: the largest off-diagonal
// modulus of the reduced state, computed as max over l != l' of
// |sum_m z_{lm} conj(z_{l'm})| with l on the bipartition block and m on the
// complement. Zero for every balanced bipartition iff all balanced reductions
// are diagonal.
double offdiag_residual(const PureState& state, const std::vector<int>& bipartition);

}  // namespace ameforge
