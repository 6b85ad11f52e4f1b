#include "ameforge/state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace ameforge {

cplx ExactAmp::value() const {
  double mod = std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  double arg = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(q);
  return std::polar(mod, arg);
}

PureState::PureState(int num_parties, int local_dim)
    : num_parties_(num_parties), local_dim_(local_dim) {
  if (num_parties < 1) throw std::domain_error("state needs at least one party");
  if (local_dim < 2) throw std::domain_error("local dimension must be at least 2");
  amp_ = Eigen::VectorXcd::Zero(ipow(local_dim, num_parties));
}

std::int64_t PureState::word_index(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != num_parties_)
    throw std::domain_error("word length does not match party count");
  std::int64_t idx = 0;
  for (int letter : word) {
    if (letter < 0 || letter >= local_dim_)
      throw std::domain_error("word letter out of range");
    idx = idx * local_dim_ + letter;
  }
  return idx;
}

std::vector<int> PureState::index_word(std::int64_t index) const {
  std::vector<int> word(num_parties_);
  for (int p = num_parties_ - 1; p >= 0; --p) {
    word[p] = static_cast<int>(index % local_dim_);
    index /= local_dim_;
  }
  return word;
}

PureState PureState::from_terms(int num_parties, int local_dim,
                                const std::vector<std::pair<std::vector<int>, cplx>>& terms,
                                bool renormalize) {
  PureState s(num_parties, local_dim);
  std::vector<bool> seen(s.dim(), false);
  for (const auto& [word, a] : terms) {
    std::int64_t idx = s.word_index(word);
    if (seen[idx]) throw std::domain_error("duplicate basis word");
    seen[idx] = true;
    s.amp_[idx] = a;
  }
  if (renormalize) {
    double n = s.norm();
    if (n < 1e-300) throw std::domain_error("cannot normalize the zero vector");
    s.amp_ /= n;
  }
  return s;
}

PureState PureState::from_exact_terms(int num_parties, int local_dim,
                                      const std::vector<ExactTerm>& terms) {
  std::vector<std::pair<std::vector<int>, cplx>> t;
  t.reserve(terms.size());
  for (const auto& term : terms) t.emplace_back(term.ket, term.amp.value());
  return from_terms(num_parties, local_dim, t);
}

cplx PureState::amplitude(const std::vector<int>& word) const {
  return amp_[word_index(word)];
}

void PureState::set_amplitude(const std::vector<int>& word, cplx a) {
  amp_[word_index(word)] = a;
}

PureState PureState::normalized() const {
  PureState s = *this;
  double n = norm();
  if (n < 1e-300) throw std::domain_error("cannot normalize the zero vector");
  s.amp_ /= n;
  return s;
}

std::vector<std::pair<std::vector<int>, cplx>> PureState::terms(double tol) const {
  std::vector<std::pair<std::vector<int>, cplx>> out;
  for (std::int64_t i = 0; i < dim(); ++i) {
    if (std::abs(amp_[i]) > tol) out.emplace_back(index_word(i), amp_[i]);
  }
  return out;
}

double density_matrix_deviation(const DensityMatrix& rho) {
  const auto& m = rho.m;
  if (m.rows() != m.cols()) throw std::domain_error("density matrix must be square");
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  dev = std::max(dev, std::abs(m.trace() - cplx(1.0, 0.0)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < 0.0) dev = std::max(dev, -min_ev);
  return dev;
}

Eigen::MatrixXcd bipartition_matrix(const PureState& state, const std::vector<int>& keep) {
  const int n = state.num_parties();
  const int d = state.local_dim();
  if (keep.empty()) throw std::domain_error("kept index set must be nonempty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) throw std::domain_error("kept index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::domain_error("kept index set must be strictly increasing");
  }
  std::vector<int> rest = subset_complement(keep, n);

  // Stride of each party in the big-endian linear index.
  std::vector<std::int64_t> stride(n);
  std::int64_t s = 1;
  for (int p = n - 1; p >= 0; --p) {
    stride[p] = s;
    s *= d;
  }

  const std::int64_t rows = ipow(d, static_cast<int>(keep.size()));
  const std::int64_t cols = ipow(d, static_cast<int>(rest.size()));
  Eigen::MatrixXcd m(rows, cols);
  const auto& v = state.vector();
  for (std::int64_t r = 0; r < rows; ++r) {
    std::int64_t base = 0;
    std::int64_t rr = r;
    for (int i = static_cast<int>(keep.size()) - 1; i >= 0; --i) {
      base += (rr % d) * stride[keep[i]];
      rr /= d;
    }
    for (std::int64_t c = 0; c < cols; ++c) {
      std::int64_t idx = base;
      std::int64_t cc = c;
      for (int i = static_cast<int>(rest.size()) - 1; i >= 0; --i) {
        idx += (cc % d) * stride[rest[i]];
        cc /= d;
      }
      m(r, c) = v[idx];
    }
  }
  return m;
}

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
  Eigen::MatrixXcd m = bipartition_matrix(state, keep);
  return DensityMatrix{m * m.adjoint()};
}

double purity(const DensityMatrix& rho) {
  if (rho.m.rows() != rho.m.cols()) throw std::domain_error("density matrix must be square");
  return rho.m.squaredNorm();
}

double von_neumann_entropy(const DensityMatrix& rho, double tol) {
  if (rho.m.rows() != rho.m.cols()) throw std::domain_error("density matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.m, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double ev : es.eigenvalues()) {
    if (ev < -std::sqrt(tol))
      throw numerical_error("density matrix eigenvalue below tolerance: " + std::to_string(ev));
    if (ev > tol) entropy -= ev * std::log(ev);
  }
  return entropy;
}

PureState apply_local_unitary(const PureState& state, int site,
                              const Eigen::MatrixXcd& u, double tol) {
  const int n = state.num_parties();
  const int d = state.local_dim();
  if (site < 0 || site >= n) throw std::domain_error("site out of range");
  if (u.rows() != d || u.cols() != d)
    throw std::domain_error("unitary size does not match local dimension");
  double dev = (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::domain_error("matrix is not unitary; max deviation " + std::to_string(dev));

  PureState out(n, d);
  const std::int64_t site_stride = ipow(d, n - 1 - site);
  const std::int64_t dim = state.dim();
  const auto& v = state.vector();
  auto& w = out.vector();
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    int letter = static_cast<int>((idx / site_stride) % d);
    std::int64_t base = idx - letter * site_stride;
    cplx acc = 0.0;
    for (int from = 0; from < d; ++from) {
      acc += u(letter, from) * v[base + from * site_stride];
    }
    w[idx] = acc;
  }
  return out;
}

int support(const PureState& state, double tol) {
  int count = 0;
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    if (std::abs(state.vector()[i]) > tol) ++count;
  }
  return count;
}

std::pair<PureState, std::vector<int>> minimize_support_by_hadamards(
    const PureState& state, double tol) {
  if (state.local_dim() != 2)
    throw std::domain_error("Hadamard support search requires qubits");
  const int n = state.num_parties();
  Eigen::MatrixXcd h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;

  int best_support = support(state, tol);
  std::vector<int> best_subset;
  PureState best = state;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    PureState cur = state;
    std::vector<int> subset;
    for (int site = 0; site < n; ++site) {
      if (mask & (1u << site)) {
        cur = apply_local_unitary(cur, site, h, tol);
        subset.push_back(site);
      }
    }
    int sup = support(cur, tol);
    // Ties prefer fewer gates, then the lexicographically smaller site list.
    auto key = std::make_tuple(sup, subset.size(), subset);
    auto best_key = std::make_tuple(best_support, best_subset.size(), best_subset);
    if (key < best_key) {
      best_support = sup;
      best_subset = std::move(subset);
      best = std::move(cur);
    }
  }
  return {best, best_subset};
}

}  // namespace ameforge
