#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "ameforge/multiunitary.hpp"
#include "ameforge/state.hpp"

namespace ameforge {

struct CatalogExpect {
  int uniform_k = -1;   // expected k-uniformity level of the state (-1: n/a)
  int unitary_k = -1;   // expected k-unitarity level of the matrix (-1: n/a)
  int support = -1;     // expected support of the state (-1: unchecked)
  bool hadamard = false;  // matrix expected to be complex Hadamard
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::variant<PureState, IndexedMatrix> object = PureState(1, 2);
  CatalogExpect expect;

  bool is_state() const { return std::holds_alternative<PureState>(object); }
  const PureState& state() const { return std::get<PureState>(object); }
  const IndexedMatrix& matrix() const { return std::get<IndexedMatrix>(object); }
};

const std::vector<std::string>& catalog_names();

// Builds the named object and verifies its expected properties before
// returning; throws if the verification fails or the name is unknown.
CatalogEntry catalog_entry(const std::string& name);

// Named constructions.
PureState omega_43();
PureState ghz_state(int num_parties, int local_dim);

// Two-uniform state of d+1 parties from the maximal MOLS set:
// words (i, j, i+1j, i+2j, ..., i+(d-1)j) over GF(d).
PureState phi_state(int order);

// Weyl-Heisenberg displacement D_{p1,p2} = tau^{p1*p2} X^{p1} Z^{p2} with
// tau = -exp(i*pi/d).
Eigen::MatrixXcd displacement_operator(int d, int p1, int p2);
// Order-d^2 matrix whose (j,k) block is D_{j,k}/sqrt(d); 2-unitary for odd
// prime d.
IndexedMatrix displacement_block_matrix(int d);
// All tensor products of num_parties displacement operators: a Hilbert-
// Schmidt orthogonal operator basis.
std::vector<Eigen::MatrixXcd> tensor_displacement_basis(int num_parties, int d);

// Order-9 2-unitary complex Hadamard matrix with entries omega^{E[r][c]}/3.
IndexedMatrix u_p_matrix();

struct UpAlgebraReport {
  std::array<bool, 8> power_is_hadamard{};  // powers m = 1..8
  double power8_identity_dev = 0.0;
  double factorization_dev = 0.0;  // vs D * (F (x) F*) * P * D
};
UpAlgebraReport check_u_p_algebra(double tol = kDefaultTol);

// 3x3 grid a[i][j] = 3*w2 + w3 read off the 9 words (i, j, w2, w3) of a
// two-MOLS order-3 state; all rows and columns sum to 12.
std::array<std::array<int, 3>, 3> magic_square(const PureState& state);

struct Gate {
  enum Kind { kFourier, kAdd } kind = kFourier;
  int target = 0;
  int control = -1;  // kAdd: target += control (mod d)
};

// Fourier gates on wires 0 and 1, then control-adders mapping |0000> to the
// order-3 two-MOLS state.
std::vector<Gate> build_ame43_circuit();
PureState simulate_circuit(const std::vector<Gate>& gates, const PureState& initial);

}  // namespace ameforge
