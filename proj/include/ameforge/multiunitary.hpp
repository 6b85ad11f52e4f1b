#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ameforge/state.hpp"

namespace ameforge {

// Square matrix of order d^k carrying its tensor-index structure: entry
// (row, col) is the tensor value t_{s0...s2k-1} where (s0...s_{k-1}) is the
// big-endian digit expansion of row and (s_k...s_{2k-1}) of col.
struct IndexedMatrix {
  int local_dim = 2;
  int half_order = 1;
  Eigen::MatrixXcd m;

  std::int64_t order() const { return m.rows(); }
};

struct MultiunitarityReport {
  int k = 0;
  std::int64_t checked_reorderings = 0;
  // Row-index subsets whose reordering is not unitary, with the max-abs
  // deviation of M^dagger M from the identity. Complementary subsets share a
  // deviation (transposition preserves unitarity) and are both listed.
  std::vector<std::pair<std::vector<int>, double>> failures;
  double worst_deviation = 0.0;
  std::vector<int> worst_subset;

  bool is_unitary_everywhere() const { return failures.empty(); }
};

// Rearrange tensor indices: the positions listed in row_set (ascending) become
// the row digits, the complement (ascending) the column digits. row_set
// {0..k-1} returns the input unchanged.
IndexedMatrix reorder(const IndexedMatrix& m, const std::vector<int>& row_set);

// General form taking an ordered list of all 2k positions; the first k entries
// become the row digits in the given order. reorder() is the sorted special
// case. The inverse of any reordering is expressible here even when no sorted
// row subset inverts it.
IndexedMatrix reorder_positions(const IndexedMatrix& m, const std::vector<int>& positions);

double unitarity_deviation(const Eigen::MatrixXcd& m);

// Checks unitarity of reorder(m, S) for every k-subset S of the 2k tensor
// positions; only subsets containing position 0 are evaluated and each
// complementary pair is reported together.
MultiunitarityReport is_k_unitary(const IndexedMatrix& m, double tol = kDefaultTol);
MultiunitarityReport is_k_unitary_serial(const IndexedMatrix& m, double tol = kDefaultTol);

// Unitary with all entries of modulus 1/sqrt(order).
bool is_complex_hadamard(const Eigen::MatrixXcd& m, double tol = kDefaultTol);

// Bijection between normalized 2k-party states and matrices of Frobenius norm
// d^{k/2}: matrix entry = amplitude * d^{k/2}.
PureState state_from_matrix(const IndexedMatrix& m);
IndexedMatrix matrix_from_state(const PureState& state);

// One-line permutation convention: perm_matrix(d, k, s) has entry
// (j, s[j]) = 1. one_line_of returns the s recovering m, if m is a
// permutation matrix.
IndexedMatrix perm_matrix(int local_dim, int half_order, const std::vector<int>& one_line);
std::optional<std::vector<int>> one_line_of(const IndexedMatrix& m, double tol = kDefaultTol);

}  // namespace ameforge
