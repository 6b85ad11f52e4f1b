#include "ameforge/uniformity.hpp"

#include <algorithm>
#include <cmath>

namespace ameforge {

namespace {

double deviation_from_mixed(const PureState& state, const std::vector<int>& subset) {
  Eigen::MatrixXcd m = bipartition_matrix(state, subset);
  Eigen::MatrixXcd rho = m * m.adjoint();
  const double target = 1.0 / static_cast<double>(rho.rows());
  double dev = 0.0;
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      cplx want = (r == c) ? cplx(target, 0.0) : cplx(0.0, 0.0);
      dev = std::max(dev, std::abs(rho(r, c) - want));
    }
  }
  return dev;
}

double subset_purity(const PureState& state, const std::vector<int>& subset) {
  Eigen::MatrixXcd m = bipartition_matrix(state, subset);
  if (m.rows() <= m.cols()) {
    return (m * m.adjoint()).squaredNorm();
  }
  return (m.adjoint() * m).squaredNorm();
}

}  // namespace

std::vector<double> reduction_deviations_serial(const PureState& state, int k) {
  if (k < 1 || k > state.num_parties() / 2)
    throw std::domain_error("k must lie in [1, floor(N/2)]");
  auto subsets = k_subsets(state.num_parties(), k);
  std::vector<double> devs(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    devs[i] = deviation_from_mixed(state, subsets[i]);
  }
  return devs;
}

std::vector<double> reduction_deviations(const PureState& state, int k) {
  if (k < 1 || k > state.num_parties() / 2)
    throw std::domain_error("k must lie in [1, floor(N/2)]");
  auto subsets = k_subsets(state.num_parties(), k);
  std::vector<double> devs(subsets.size());
  const std::int64_t count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    devs[i] = deviation_from_mixed(state, subsets[i]);
  }
  return devs;
}

UniformityReport is_k_uniform(const PureState& state, int k, double tol) {
  auto subsets = k_subsets(state.num_parties(), k);
  auto devs = reduction_deviations(state, k);
  UniformityReport report;
  report.k = k;
  // Deterministic reduction: scan in subset order so ties keep the
  // lexicographically smallest partition.
  std::size_t worst = 0;
  for (std::size_t i = 1; i < devs.size(); ++i) {
    if (devs[i] > devs[worst]) worst = i;
  }
  report.max_deviation = devs[worst];
  report.worst_partition = subsets[worst];
  report.is_uniform = report.max_deviation <= tol;
  return report;
}

UniformityReport is_ame(const PureState& state, double tol) {
  return is_k_uniform(state, state.num_parties() / 2, tol);
}

std::vector<double> balanced_purities_serial(const PureState& state) {
  auto subsets = k_subsets(state.num_parties(), state.num_parties() / 2);
  std::vector<double> purities(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    purities[i] = subset_purity(state, subsets[i]);
  }
  return purities;
}

std::vector<double> balanced_purities(const PureState& state) {
  auto subsets = k_subsets(state.num_parties(), state.num_parties() / 2);
  std::vector<double> purities(subsets.size());
  const std::int64_t count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    purities[i] = subset_purity(state, subsets[i]);
  }
  return purities;
}

namespace {

double mean(const std::vector<double>& xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

}  // namespace

double entanglement_potential(const PureState& state) {
  return mean(balanced_purities(state));
}

double entanglement_potential_serial(const PureState& state) {
  return mean(balanced_purities_serial(state));
}

double offdiag_residual(const PureState& state, const std::vector<int>& bipartition) {
  if (state.local_dim() != 2)
    throw std::domain_error("phase residual is defined for qubits");
  if (static_cast<int>(bipartition.size()) != state.num_parties() / 2)
    throw std::domain_error("bipartition must have floor(N/2) sites");
  Eigen::MatrixXcd m = bipartition_matrix(state, bipartition);
  Eigen::MatrixXcd rho = m * m.adjoint();
  double worst = 0.0;
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if (r != c) worst = std::max(worst, std::abs(rho(r, c)));
    }
  }
  return worst;
}

}  // namespace ameforge
