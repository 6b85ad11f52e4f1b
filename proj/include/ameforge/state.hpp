#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ameforge/common.hpp"

namespace ameforge {

// Exact amplitude used by the construction catalog: sqrt(num/den) times a
// q-th root of unity. Every cataloged state has rational modulus squared and
// a root-of-unity phase, so this form is lossless at construction time.
struct ExactAmp {
  std::int64_t num = 1;  // modulus squared, numerator
  std::int64_t den = 1;  // modulus squared, denominator
  int e = 0;             // phase exponent
  int q = 1;             // phase root order: value = sqrt(num/den) * exp(2*pi*i*e/q)

  cplx value() const;
};

struct ExactTerm {
  std::vector<int> ket;
  ExactAmp amp;
};

// Dense N-party, d-level pure state. Party 0 is the leftmost letter of a
// basis word; the linear index of a word is its big-endian base-d value.
class PureState {
 public:
  PureState(int num_parties, int local_dim);

  static PureState from_terms(int num_parties, int local_dim,
                              const std::vector<std::pair<std::vector<int>, cplx>>& terms,
                              bool renormalize = false);
  static PureState from_exact_terms(int num_parties, int local_dim,
                                    const std::vector<ExactTerm>& terms);

  int num_parties() const { return num_parties_; }
  int local_dim() const { return local_dim_; }
  std::int64_t dim() const { return amp_.size(); }

  const Eigen::VectorXcd& vector() const { return amp_; }
  Eigen::VectorXcd& vector() { return amp_; }

  cplx amplitude(const std::vector<int>& word) const;
  void set_amplitude(const std::vector<int>& word, cplx a);

  std::int64_t word_index(const std::vector<int>& word) const;
  std::vector<int> index_word(std::int64_t index) const;

  double norm() const { return amp_.norm(); }
  PureState normalized() const;

  // Nonzero terms sorted by big-endian word index (the serialization order).
  std::vector<std::pair<std::vector<int>, cplx>> terms(double tol = kDefaultTol) const;

 private:
  int num_parties_;
  int local_dim_;
  Eigen::VectorXcd amp_;
};

// Reduced density matrix wrapper (Hermitian, trace one).
struct DensityMatrix {
  Eigen::MatrixXcd m;
  int dim() const { return static_cast<int>(m.rows()); }
};

// Max-abs deviation from the DensityMatrix invariants (Hermiticity, unit
// trace, eigenvalues >= -tol); returns the worst offender.
double density_matrix_deviation(const DensityMatrix& rho);

// Reshape the state into a matrix whose rows are indexed by the kept parties
// (ascending) and columns by the complement (ascending).
Eigen::MatrixXcd bipartition_matrix(const PureState& state, const std::vector<int>& keep);

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);

double purity(const DensityMatrix& rho);

// Natural-logarithm von Neumann entropy. Eigenvalues below -sqrt(tol) raise
// numerical_error; eigenvalues in [-sqrt(tol), tol] are treated as zero.
double von_neumann_entropy(const DensityMatrix& rho, double tol = kDefaultTol);

PureState apply_local_unitary(const PureState& state, int site,
                              const Eigen::MatrixXcd& u, double tol = kDefaultTol);

int support(const PureState& state, double tol = kDefaultTol);

// Exhaustive search over the 2^N subsets of qubit sites: apply a Hadamard on
// every site of the subset and keep the representative with minimal support.
// Ties break toward the smallest subset (fewest gates), then lexicographic.
std::pair<PureState, std::vector<int>> minimize_support_by_hadamards(
    const PureState& state, double tol = kDefaultTol);

}  // namespace ameforge
