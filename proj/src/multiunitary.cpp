#include "ameforge/multiunitary.hpp"

#include <algorithm>
#include <cmath>

namespace ameforge {

namespace {

void check_positions(const IndexedMatrix& m, const std::vector<int>& positions) {
  const int slots = 2 * m.half_order;
  if (static_cast<int>(positions.size()) != slots)
    throw std::domain_error("position list must cover all tensor indices");
  std::vector<bool> seen(slots, false);
  for (int p : positions) {
    if (p < 0 || p >= slots || seen[p])
      throw std::domain_error("position list must be a permutation of the tensor indices");
    seen[p] = true;
  }
}

}  // namespace

IndexedMatrix reorder_positions(const IndexedMatrix& m, const std::vector<int>& positions) {
  check_positions(m, positions);
  const int d = m.local_dim;
  const int k = m.half_order;
  const int slots = 2 * k;
  const std::int64_t order = m.order();
  if (order != ipow(d, k)) throw std::domain_error("matrix order must equal d^k");

  // Stride of each tensor position inside the flat (row * order + col) index.
  std::vector<std::int64_t> stride(slots);
  std::int64_t s = 1;
  for (int p = slots - 1; p >= 0; --p) {
    stride[p] = s;
    s *= d;
  }

  // Output digit at slot p is the input digit at slot positions[p]; gather
  // each output entry from the flat source index built on the input strides.
  IndexedMatrix out{d, k, Eigen::MatrixXcd(order, order)};
  for (std::int64_t r = 0; r < order; ++r) {
    for (std::int64_t c = 0; c < order; ++c) {
      std::int64_t flat = r * order + c;
      std::int64_t src = 0;
      for (int p = 0; p < slots; ++p) {
        int digit = static_cast<int>((flat / stride[p]) % d);
        src += digit * stride[positions[p]];
      }
      out.m(r, c) = m.m(src / order, src % order);
    }
  }
  return out;
}

IndexedMatrix reorder(const IndexedMatrix& m, const std::vector<int>& row_set) {
  const int k = m.half_order;
  if (static_cast<int>(row_set.size()) != k)
    throw std::domain_error("row set must have exactly k tensor indices");
  std::vector<int> sorted = row_set;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> positions = sorted;
  for (int p : subset_complement(sorted, 2 * k)) positions.push_back(p);
  return reorder_positions(m, positions);
}

double unitarity_deviation(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::domain_error("matrix must be square");
  Eigen::MatrixXcd g = m.adjoint() * m;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

namespace {

MultiunitarityReport k_unitary_report(const IndexedMatrix& m, double tol, bool parallel) {
  const int k = m.half_order;
  // Only subsets containing position 0: the complement's reordering is the
  // transpose, and transposition preserves unitarity.
  std::vector<std::vector<int>> subsets;
  for (auto& s : k_subsets(2 * k, k)) {
    if (s[0] == 0) subsets.push_back(s);
  }
  std::vector<double> devs(subsets.size());
  const std::int64_t count = static_cast<std::int64_t>(subsets.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      devs[i] = unitarity_deviation(reorder(m, subsets[i]).m);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      devs[i] = unitarity_deviation(reorder(m, subsets[i]).m);
    }
  }

  MultiunitarityReport report;
  report.k = k;
  report.checked_reorderings = binomial(2 * k, k);
  report.worst_subset = subsets[0];
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (devs[i] > report.worst_deviation) {
      report.worst_deviation = devs[i];
      report.worst_subset = subsets[i];
    }
    if (devs[i] > tol) {
      report.failures.emplace_back(subsets[i], devs[i]);
      report.failures.emplace_back(subset_complement(subsets[i], 2 * k), devs[i]);
    }
  }
  return report;
}

}  // namespace

MultiunitarityReport is_k_unitary(const IndexedMatrix& m, double tol) {
  return k_unitary_report(m, tol, true);
}

MultiunitarityReport is_k_unitary_serial(const IndexedMatrix& m, double tol) {
  return k_unitary_report(m, tol, false);
}

bool is_complex_hadamard(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (unitarity_deviation(m) > tol) return false;
  const double want = 1.0 / std::sqrt(static_cast<double>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(std::abs(m(r, c)) - want) > tol) return false;
    }
  }
  return true;
}

PureState state_from_matrix(const IndexedMatrix& m) {
  const int d = m.local_dim;
  const int k = m.half_order;
  const std::int64_t order = m.order();
  if (order != ipow(d, k)) throw std::domain_error("matrix order must equal d^k");
  PureState state(2 * k, d);
  const double scale = std::pow(static_cast<double>(d), 0.5 * k);
  for (std::int64_t r = 0; r < order; ++r) {
    for (std::int64_t c = 0; c < order; ++c) {
      state.vector()[r * order + c] = m.m(r, c) / scale;
    }
  }
  return state;
}

IndexedMatrix matrix_from_state(const PureState& state) {
  if (state.num_parties() % 2 != 0)
    throw std::domain_error("matrix view requires an even number of parties");
  const int k = state.num_parties() / 2;
  const int d = state.local_dim();
  const std::int64_t order = ipow(d, k);
  const double scale = std::pow(static_cast<double>(d), 0.5 * k);
  IndexedMatrix m{d, k, Eigen::MatrixXcd(order, order)};
  for (std::int64_t r = 0; r < order; ++r) {
    for (std::int64_t c = 0; c < order; ++c) {
      m.m(r, c) = state.vector()[r * order + c] * scale;
    }
  }
  return m;
}

IndexedMatrix perm_matrix(int local_dim, int half_order, const std::vector<int>& one_line) {
  const std::int64_t order = ipow(local_dim, half_order);
  if (static_cast<std::int64_t>(one_line.size()) != order)
    throw std::domain_error("one-line notation length must equal the matrix order");
  IndexedMatrix m{local_dim, half_order, Eigen::MatrixXcd::Zero(order, order)};
  std::vector<bool> seen(order, false);
  for (std::int64_t j = 0; j < order; ++j) {
    int target = one_line[j];
    if (target < 0 || target >= order || seen[target])
      throw std::domain_error("one-line notation must be a permutation");
    seen[target] = true;
    m.m(j, target) = 1.0;
  }
  return m;
}

std::optional<std::vector<int>> one_line_of(const IndexedMatrix& m, double tol) {
  const std::int64_t order = m.order();
  std::vector<int> sigma(order, -1);
  std::vector<bool> used(order, false);
  for (std::int64_t r = 0; r < order; ++r) {
    for (std::int64_t c = 0; c < order; ++c) {
      double a = std::abs(m.m(r, c));
      if (a > tol) {
        if (std::abs(m.m(r, c) - cplx(1.0, 0.0)) > tol) return std::nullopt;
        if (sigma[r] != -1 || used[c]) return std::nullopt;
        sigma[r] = static_cast<int>(c);
        used[c] = true;
      }
    }
    if (sigma[r] == -1) return std::nullopt;
  }
  return sigma;
}

}  // namespace ameforge
