#include "ameforge/search.hpp"

#include <algorithm>
#include <cmath>

#include "ameforge/uniformity.hpp"

namespace ameforge {

PureState sample_haar_state(int num_parties, int local_dim, rng_engine& rng) {
  PureState state(num_parties, local_dim);
  if (state.dim() > 1'000'000) throw std::domain_error("state space too large to sample");
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    state.vector()[i] = cplx(re, im);
  }
  return state.normalized();
}

Eigen::MatrixXcd random_unitary(int dim, rng_engine& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = cplx(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase gauge so the distribution is exactly Haar.
  for (int c = 0; c < dim; ++c) {
    cplx diag = r(c, c);
    q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

double page_prediction(int num_qubits) {
  return 0.5 * num_qubits * std::log(2.0) - 0.5;
}

namespace {

double half_chain_entropy(int num_qubits, std::uint64_t sample_seed) {
  rng_engine rng(sample_seed);
  PureState state = sample_haar_state(num_qubits, 2, rng);
  std::vector<int> keep(num_qubits / 2);
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  return von_neumann_entropy(partial_trace(state, keep));
}

std::pair<double, double> entropy_stats(const std::vector<double>& entropies) {
  const double n = static_cast<double>(entropies.size());
  double mean = 0.0;
  for (double e : entropies) mean += e;
  mean /= n;
  double var = 0.0;
  for (double e : entropies) var += (e - mean) * (e - mean);
  var /= (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

}  // namespace

std::pair<double, double> average_page_entropy_serial(int num_qubits, int samples,
                                                      std::uint64_t seed) {
  if (num_qubits < 2 || num_qubits % 2 != 0)
    throw std::domain_error("qubit count must be even and positive");
  if (samples < 100) throw std::domain_error("need at least 100 samples");
  std::vector<double> entropies(samples);
  for (int i = 0; i < samples; ++i) {
    entropies[i] = half_chain_entropy(num_qubits, splitmix64(seed + static_cast<std::uint64_t>(i)));
  }
  return entropy_stats(entropies);
}

std::pair<double, double> average_page_entropy(int num_qubits, int samples,
                                               std::uint64_t seed) {
  if (num_qubits < 2 || num_qubits % 2 != 0)
    throw std::domain_error("qubit count must be even and positive");
  if (samples < 100) throw std::domain_error("need at least 100 samples");
  std::vector<double> entropies(samples);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < samples; ++i) {
    entropies[i] = half_chain_entropy(num_qubits, splitmix64(seed + static_cast<std::uint64_t>(i)));
  }
  return entropy_stats(entropies);
}

std::uint64_t restart_seed(std::uint64_t master_seed, int restart) {
  return splitmix64(master_seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart));
}

namespace {

// Allocation-free mean balanced purity over a dense amplitude vector, with
// the same subset order and summation order as balanced_purities().
class PotentialEvaluator {
 public:
  PotentialEvaluator(int num_parties, int local_dim)
      : subsets_(k_subsets(num_parties, num_parties / 2)) {
    const int n = num_parties;
    const int d = local_dim;
    const std::int64_t dim = ipow(d, n);
    std::vector<std::int64_t> stride(n);
    std::int64_t s = 1;
    for (int p = n - 1; p >= 0; --p) {
      stride[p] = s;
      s *= d;
    }
    rows_ = ipow(d, n / 2);
    cols_ = dim / rows_;
    remap_.resize(subsets_.size());
    for (std::size_t which = 0; which < subsets_.size(); ++which) {
      const auto& keep = subsets_[which];
      auto rest = subset_complement(keep, n);
      remap_[which].resize(dim);
      for (std::int64_t idx = 0; idx < dim; ++idx) {
        std::int64_t r = 0, c = 0;
        for (int p : keep) r = r * d + (idx / stride[p]) % d;
        for (int p : rest) c = c * d + (idx / stride[p]) % d;
        remap_[which][idx] = r * cols_ + c;
      }
    }
    scratch_.resize(rows_, cols_);
    gram_.resize(rows_, rows_);
  }

  double operator()(const Eigen::VectorXcd& amp) {
    double acc = 0.0;
    for (std::size_t which = 0; which < subsets_.size(); ++which) {
      const auto& remap = remap_[which];
      for (std::int64_t idx = 0; idx < amp.size(); ++idx) {
        scratch_.data()[remap[idx]] = amp[idx];
      }
      gram_.noalias() = scratch_ * scratch_.adjoint();
      acc += gram_.squaredNorm();
    }
    return acc / static_cast<double>(subsets_.size());
  }

 private:
  std::vector<std::vector<int>> subsets_;
  std::int64_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::int64_t>> remap_;
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> scratch_;
  Eigen::MatrixXcd gram_;
};

}  // namespace

namespace {

// Shared by the single-run and multi-restart entry points; throwing here
// keeps exceptions out of the OpenMP restarts loop.
void validate_anneal(int num_parties, int local_dim, const AnnealConfig& config) {
  if (config.cooling <= 0.0 || config.cooling >= 1.0)
    throw std::domain_error("cooling factor must lie in (0, 1)");
  if (config.sweeps < 1 || config.moves_per_sweep < 1 || config.restarts < 1)
    throw std::domain_error("all annealing counts must be at least 1");
  if (num_parties < 2) throw std::domain_error("need at least two parties");
  if (ipow(local_dim, num_parties) > 100'000)
    throw std::domain_error("state space too large to anneal");
}

}  // namespace

SearchResult anneal_single(int num_parties, int local_dim,
                           const AnnealConfig& config, std::uint64_t engine_seed) {
  validate_anneal(num_parties, local_dim, config);

  rng_engine rng(engine_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PotentialEvaluator potential(num_parties, local_dim);

  PureState state = sample_haar_state(num_parties, local_dim, rng);
  double current = potential(state.vector());
  Eigen::VectorXcd best = state.vector();
  double best_value = current;

  SearchResult result;
  result.seed = engine_seed;
  Eigen::VectorXcd proposal(state.dim());
  double temperature = config.initial_temperature;
  for (int sweep = 0; sweep < config.sweeps; ++sweep) {
    const double sigma = config.move_scale * temperature;
    for (int move = 0; move < config.moves_per_sweep; ++move) {
      for (std::int64_t i = 0; i < proposal.size(); ++i) {
        proposal[i] = state.vector()[i] + sigma * cplx(gauss(rng), gauss(rng));
      }
      proposal /= proposal.norm();
      double value = potential(proposal);
      double delta = value - current;
      if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
        state.vector() = proposal;
        current = value;
        if (current < best_value) {
          best_value = current;
          best = state.vector();
        }
      }
    }
    result.history.emplace_back(sweep, best_value);
    temperature *= config.cooling;
  }

  result.best_state = PureState(num_parties, local_dim);
  result.best_state.vector() = best;
  result.best_value = best_value;
  const double floor = 1.0 / static_cast<double>(ipow(local_dim, num_parties / 2));
  if (result.best_value < floor - 1e-9)
    throw numerical_error("purity fell below the theoretical floor");
  return result;
}

namespace {

SearchResult merge_restarts(std::vector<SearchResult>& runs) {
  std::size_t winner = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].best_value < runs[winner].best_value) winner = r;
  }
  return std::move(runs[winner]);
}

}  // namespace

SearchResult minimize_potential_serial(int num_parties, int local_dim,
                                       const AnnealConfig& config) {
  validate_anneal(num_parties, local_dim, config);
  std::vector<SearchResult> runs(config.restarts);
  for (int r = 0; r < config.restarts; ++r) {
    runs[r] = anneal_single(num_parties, local_dim, config, restart_seed(config.seed, r));
  }
  return merge_restarts(runs);
}

SearchResult minimize_potential(int num_parties, int local_dim,
                                const AnnealConfig& config) {
  validate_anneal(num_parties, local_dim, config);
  std::vector<SearchResult> runs(config.restarts);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < config.restarts; ++r) {
    runs[r] = anneal_single(num_parties, local_dim, config, restart_seed(config.seed, r));
  }
  return merge_restarts(runs);
}

}  // namespace ameforge
