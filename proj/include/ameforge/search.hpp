#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ameforge/state.hpp"

namespace ameforge {

struct AnnealConfig {
  std::uint64_t seed = 0;
  double initial_temperature = 1.0;
  double cooling = 0.97;       // per-sweep multiplicative factor, in (0,1)
  int sweeps = 400;
  int moves_per_sweep = 200;
  int restarts = 8;
  double move_scale = 30.0;    // Gaussian step size = move_scale * temperature
};

struct SearchResult {
  PureState best_state;
  double best_value = 1.0;
  std::vector<std::pair<int, double>> history;  // (sweep, best so far)
  std::uint64_t seed = 0;                       // engine seed of the winner

  SearchResult() : best_state(1, 2) {}
};

using rng_engine = std::mt19937_64;

PureState sample_haar_state(int num_parties, int local_dim, rng_engine& rng);
Eigen::MatrixXcd random_unitary(int dim, rng_engine& rng);

// Leading-order mean half-chain entropy of Haar-random qubit states.
double page_prediction(int num_qubits);

// Monte-Carlo mean and standard error of the half-chain entropy over Haar
// samples; per-sample seeds derive from the master seed, so the result is
// independent of thread count.
std::pair<double, double> average_page_entropy(int num_qubits, int samples,
                                               std::uint64_t seed);
std::pair<double, double> average_page_entropy_serial(int num_qubits, int samples,
                                                      std::uint64_t seed);

// Engine seed of restart r derived from the master seed.
std::uint64_t restart_seed(std::uint64_t master_seed, int restart);

// One annealing run (no restarts) with the given engine seed: Gaussian
// perturbation of all amplitudes at scale move_scale * temperature,
// renormalize, Metropolis-accept on the balanced-purity mean.
SearchResult anneal_single(int num_parties, int local_dim,
                           const AnnealConfig& config, std::uint64_t engine_seed);

// Best over config.restarts independent runs; ties break toward the lower
// restart index. Restarts run under OpenMP; the _serial variant is the
// reference loop.
SearchResult minimize_potential(int num_parties, int local_dim,
                                const AnnealConfig& config);
SearchResult minimize_potential_serial(int num_parties, int local_dim,
                                       const AnnealConfig& config);

}  // namespace ameforge
