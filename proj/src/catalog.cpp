#include "ameforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "ameforge/codes.hpp"
#include "ameforge/gf.hpp"
#include "ameforge/uniformity.hpp"

namespace ameforge {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> digits_word(const char* s) {
  std::vector<int> w;
  for (const char* p = s; *p; ++p) w.push_back(*p - '0');
  return w;
}

std::vector<ExactTerm> uniform_word_terms(const std::vector<const char*>& words,
                                          std::int64_t count) {
  std::vector<ExactTerm> terms;
  for (const char* w : words) {
    terms.push_back({digits_word(w), ExactAmp{1, count, 0, 1}});
  }
  return terms;
}

// Sign patterns over all basis words in big-endian order.
PureState signed_state(int num_parties, const std::vector<int>& signs) {
  const std::int64_t dim = ipow(2, num_parties);
  if (static_cast<std::int64_t>(signs.size()) != dim)
    throw std::domain_error("sign list must cover every basis word");
  PureState s(num_parties, 2);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::int64_t i = 0; i < dim; ++i) s.vector()[i] = signs[i] * amp;
  return s;
}

const std::vector<int>& ups52_signs() {
  static const std::vector<int> signs = {
      1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, 1,  1,  1,
      1, 1, -1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, -1, 1, 1};
  return signs;
}

const std::vector<int>& xi62_signs() {
  static const std::vector<int> signs = {
      -1, -1, -1, 1,  -1, 1,  1,  1,   //
      -1, -1, -1, 1,  1,  -1, -1, -1,  //
      -1, -1, 1,  -1, -1, 1,  -1, -1,  //
      1,  1,  -1, 1,  -1, 1,  -1, -1,  //
      -1, 1,  -1, -1, -1, -1, 1,  -1,  //
      1,  -1, 1,  1,  -1, -1, 1,  -1,  //
      1,  -1, -1, -1, 1,  1,  1,  -1,  //
      1,  -1, -1, -1, -1, -1, -1, 1};
  return signs;
}

const std::vector<const char*>& ame64_words() {
  static const std::vector<const char*> words = {
      "000000", "001111", "002222", "003333", "010123", "011032", "012301", "013210",
      "020231", "021320", "022013", "023102", "030312", "031203", "032130", "033021",
      "100132", "101023", "102310", "103201", "110011", "111100", "112233", "113322",
      "120303", "121212", "122121", "123030", "130220", "131331", "132002", "133113",
      "200213", "201302", "202031", "203120", "210330", "211221", "212112", "213003",
      "220022", "221133", "222200", "223311", "230101", "231010", "232323", "233232",
      "300321", "301230", "302103", "303012", "310202", "311313", "312020", "313131",
      "320110", "321001", "322332", "323223", "330033", "331122", "332211", "333300"};
  return words;
}

const std::vector<const char*>& ame54_words() {
  static const std::vector<const char*> words = {
      "00000", "10312", "20231", "30123", "01111", "11203", "21320", "31032",
      "02222", "12130", "22013", "32301", "03333", "13021", "23102", "33210"};
  return words;
}

std::vector<ExactTerm> omega52_logical_terms() {
  // Equal superposition of the two logical basis states of the five-qubit
  // error-correcting code.
  std::vector<ExactTerm> terms;
  auto add = [&](const char* w, int sign) {
    terms.push_back({digits_word(w), ExactAmp{1, 8, sign > 0 ? 0 : 1, 2}});
  };
  add("00000", 1);
  add("00011", 1);
  add("01100", 1);
  add("01111", -1);
  add("11010", 1);
  add("11001", 1);
  add("10110", 1);
  add("10101", -1);
  return terms;
}

std::vector<ExactTerm> hs_terms() {
  std::vector<ExactTerm> terms;
  auto add = [&](const char* w, int e) { terms.push_back({digits_word(w), ExactAmp{1, 6, e, 3}}); };
  add("0011", 0);
  add("1100", 0);
  add("0101", 1);
  add("1010", 1);
  add("0110", 2);
  add("1001", 2);
  return terms;
}

std::vector<ExactTerm> hd_terms() {
  std::vector<ExactTerm> terms;
  for (const char* w : {"0001", "0010", "0100", "1000"})
    terms.push_back({digits_word(w), ExactAmp{1, 6, 0, 1}});
  terms.push_back({digits_word("1111"), ExactAmp{1, 3, 0, 1}});
  return terms;
}

std::vector<ExactTerm> l_terms() {
  std::vector<ExactTerm> terms;
  // (1 + w)/sqrt(12) = exp(i pi/3)/sqrt(12); (1 - w)/sqrt(12) = exp(-i pi/6)/2
  // with w the primitive cube root of unity.
  for (const char* w : {"0000", "1111"})
    terms.push_back({digits_word(w), ExactAmp{1, 12, 1, 6}});
  for (const char* w : {"0011", "1100"})
    terms.push_back({digits_word(w), ExactAmp{1, 4, 11, 12}});
  for (const char* w : {"0101", "0110", "1001", "1010"})
    terms.push_back({digits_word(w), ExactAmp{1, 12, 2, 3}});
  return terms;
}

std::vector<ExactTerm> m_terms() {
  std::vector<ExactTerm> terms;
  // (i/2 + 1/sqrt(12))/sqrt(2) = exp(i pi/3)/sqrt(6) and
  // (i/2 - 1/sqrt(12))/sqrt(2) = exp(2 i pi/3)/sqrt(6).
  for (const char* w : {"0000", "1111"})
    terms.push_back({digits_word(w), ExactAmp{1, 6, 1, 6}});
  for (const char* w : {"0011", "1100"})
    terms.push_back({digits_word(w), ExactAmp{1, 6, 1, 3}});
  for (const char* w : {"0101", "1010"})
    terms.push_back({digits_word(w), ExactAmp{1, 6, 0, 1}});
  return terms;
}

IndexedMatrix o8_matrix() {
  const auto& signs = xi62_signs();
  IndexedMatrix m{2, 3, Eigen::MatrixXcd(8, 8)};
  const double scale = 1.0 / std::sqrt(8.0);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) m.m(r, c) = signs[8 * r + c] * scale;
  }
  return m;
}

IndexedMatrix oa16_matrix() {
  return perm_matrix(4, 2, {4, 3, 13, 10, 14, 9, 7, 0, 11, 12, 2, 5, 1, 6, 8, 15});
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

void verify_entry(const CatalogEntry& entry) {
  const auto& e = entry.expect;
  if (entry.is_state()) {
    const auto& s = entry.state();
    if (std::abs(s.norm() - 1.0) > kDefaultTol)
      throw numerical_error("catalog state " + entry.name + " is not normalized");
    if (e.support >= 0 && support(s) != e.support)
      throw numerical_error("catalog state " + entry.name + " has unexpected support");
    if (e.uniform_k >= 1) {
      auto report = is_k_uniform(s, e.uniform_k);
      if (!report.is_uniform)
        throw numerical_error("catalog state " + entry.name + " failed its uniformity check");
    }
  } else {
    const auto& m = entry.matrix();
    if (e.unitary_k >= 1) {
      auto report = is_k_unitary(m);
      if (!report.is_unitary_everywhere())
        throw numerical_error("catalog matrix " + entry.name + " failed its unitarity check");
    }
    if (e.hadamard && !is_complex_hadamard(m.m))
      throw numerical_error("catalog matrix " + entry.name + " is not complex Hadamard");
  }
}

}  // namespace

PureState omega_43() {
  static const std::vector<const char*> words = {"0000", "0112", "0221", "1011", "1120",
                                                 "1202", "2022", "2101", "2210"};
  return PureState::from_exact_terms(4, 3, uniform_word_terms(words, 9));
}

PureState ghz_state(int num_parties, int local_dim) {
  std::vector<ExactTerm> terms;
  for (int v = 0; v < local_dim; ++v) {
    terms.push_back({std::vector<int>(num_parties, v), ExactAmp{1, local_dim, 0, 1}});
  }
  return PureState::from_exact_terms(num_parties, local_dim, terms);
}

PureState phi_state(int order) {
  GaloisField f(order);
  std::vector<ExactTerm> terms;
  const std::int64_t count = static_cast<std::int64_t>(order) * order;
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      std::vector<int> word = {i, j};
      for (int m = 1; m < order; ++m) word.push_back(f.add(i, f.mul(m, j)));
      terms.push_back({word, ExactAmp{1, count, 0, 1}});
    }
  }
  return PureState::from_exact_terms(order + 1, order, terms);
}

Eigen::MatrixXcd displacement_operator(int d, int p1, int p2) {
  if (d < 2) throw std::domain_error("dimension must be at least 2");
  const cplx tau = -std::exp(cplx(0.0, kPi / d));
  const cplx omega = std::exp(cplx(0.0, 2.0 * kPi / d));
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = std::pow(omega, k);
  Eigen::MatrixXcd xp = Eigen::MatrixXcd::Identity(d, d);
  for (int i = 0; i < p1; ++i) xp = x * xp;
  Eigen::MatrixXcd zp = Eigen::MatrixXcd::Identity(d, d);
  for (int i = 0; i < p2; ++i) zp = z * zp;
  return std::pow(tau, p1 * p2) * xp * zp;
}

IndexedMatrix displacement_block_matrix(int d) {
  if (d == 2 || !GaloisField::is_prime(d))
    throw std::domain_error("block construction requires an odd prime dimension");
  IndexedMatrix m{d, 2, Eigen::MatrixXcd(d * d, d * d)};
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      m.m.block(d * j, d * k, d, d) = scale * displacement_operator(d, j, k);
    }
  }
  return m;
}

std::vector<Eigen::MatrixXcd> tensor_displacement_basis(int num_parties, int d) {
  const std::int64_t count = ipow(d, 2 * num_parties);
  if (count > 10'000) throw std::domain_error("operator basis too large");
  std::vector<Eigen::MatrixXcd> singles;
  for (int p1 = 0; p1 < d; ++p1) {
    for (int p2 = 0; p2 < d; ++p2) singles.push_back(displacement_operator(d, p1, p2));
  }
  std::vector<Eigen::MatrixXcd> basis = {Eigen::MatrixXcd::Identity(1, 1)};
  for (int party = 0; party < num_parties; ++party) {
    std::vector<Eigen::MatrixXcd> next;
    for (const auto& a : basis) {
      for (const auto& s : singles) {
        Eigen::MatrixXcd kron(a.rows() * d, a.cols() * d);
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
          for (Eigen::Index c = 0; c < a.cols(); ++c) kron.block(r * d, c * d, d, d) = a(r, c) * s;
        }
        next.push_back(std::move(kron));
      }
    }
    basis = std::move(next);
  }
  return basis;
}

IndexedMatrix u_p_matrix() {
  static const int exponents[9][9] = {
      {0, 0, 0, 0, 1, 2, 0, 2, 1}, {0, 0, 0, 2, 0, 1, 1, 0, 2}, {0, 0, 0, 1, 2, 0, 2, 1, 0},
      {0, 1, 2, 0, 2, 1, 0, 0, 0}, {1, 2, 0, 0, 2, 1, 2, 2, 2}, {2, 0, 1, 0, 2, 1, 1, 1, 1},
      {0, 2, 1, 0, 0, 0, 0, 1, 2}, {2, 1, 0, 1, 1, 1, 0, 1, 2}, {1, 0, 2, 2, 2, 2, 0, 1, 2}};
  const cplx omega = std::exp(cplx(0.0, 2.0 * kPi / 3.0));
  IndexedMatrix m{3, 2, Eigen::MatrixXcd(9, 9)};
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) m.m(r, c) = std::pow(omega, exponents[r][c]) / 3.0;
  }
  return m;
}

UpAlgebraReport check_u_p_algebra(double tol) {
  const Eigen::MatrixXcd up = u_p_matrix().m;
  UpAlgebraReport report;
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(9, 9);
  for (int m = 1; m <= 8; ++m) {
    power = power * up;
    report.power_is_hadamard[m - 1] = is_complex_hadamard(power, tol);
  }
  report.power8_identity_dev =
      (power - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff();

  const cplx omega = std::exp(cplx(0.0, 2.0 * kPi / 3.0));
  Eigen::VectorXcd diag(9);
  diag << 1, 1, 1, 1, omega, omega * omega, 1, omega * omega, omega;
  Eigen::MatrixXcd f(3, 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) f(j, k) = std::pow(omega, j * k) / std::sqrt(3.0);
  }
  Eigen::MatrixXcd ff(9, 9);  // F (x) conj(F)
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) ff.block(3 * a, 3 * b, 3, 3) = f(a, b) * f.adjoint();
  }
  static const int col_perm[9] = {0, 3, 6, 1, 4, 7, 2, 5, 8};
  Eigen::MatrixXcd permuted(9, 9);
  for (int c = 0; c < 9; ++c) permuted.col(c) = ff.col(col_perm[c]);
  Eigen::MatrixXcd rebuilt = diag.asDiagonal() * permuted * diag.asDiagonal();
  report.factorization_dev = (rebuilt - up).cwiseAbs().maxCoeff();
  return report;
}

std::array<std::array<int, 3>, 3> magic_square(const PureState& state) {
  if (state.num_parties() != 4 || state.local_dim() != 3)
    throw std::domain_error("expected a four-party qutrit state");
  auto terms = state.terms();
  if (terms.size() != 9)
    throw std::domain_error("expected a nine-word state");
  std::array<std::array<int, 3>, 3> grid{};
  std::array<std::array<bool, 3>, 3> filled{};
  for (const auto& [word, amp] : terms) {
    int i = word[0], j = word[1];
    if (filled[i][j]) throw std::domain_error("leading letters must enumerate all pairs");
    filled[i][j] = true;
    grid[i][j] = 3 * word[2] + word[3];
  }
  return grid;
}

std::vector<Gate> build_ame43_circuit() {
  return {
      {Gate::kFourier, 0, -1}, {Gate::kFourier, 1, -1}, {Gate::kAdd, 2, 0},
      {Gate::kAdd, 2, 1},      {Gate::kAdd, 3, 0},      {Gate::kAdd, 3, 1},
      {Gate::kAdd, 3, 1},
  };
}

PureState simulate_circuit(const std::vector<Gate>& gates, const PureState& initial) {
  const int d = initial.local_dim();
  const int n = initial.num_parties();
  const cplx omega = std::exp(cplx(0.0, 2.0 * kPi / d));
  Eigen::MatrixXcd fourier(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) fourier(j, k) = std::pow(omega, j * k) / std::sqrt(double(d));
  }

  PureState state = initial;
  for (const auto& gate : gates) {
    if (gate.target < 0 || gate.target >= n) throw std::domain_error("gate target out of range");
    if (gate.kind == Gate::kFourier) {
      state = apply_local_unitary(state, gate.target, fourier);
      continue;
    }
    if (gate.control < 0 || gate.control >= n)
      throw std::domain_error("gate control out of range");
    if (gate.control == gate.target)
      throw std::domain_error("control and target must differ");
    PureState next(n, d);
    const std::int64_t t_stride = ipow(d, n - 1 - gate.target);
    const std::int64_t c_stride = ipow(d, n - 1 - gate.control);
    for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
      int t = static_cast<int>((idx / t_stride) % d);
      int c = static_cast<int>((idx / c_stride) % d);
      int t_from = ((t - c) % d + d) % d;
      next.vector()[idx] = state.vector()[idx + (t_from - t) * t_stride];
    }
    state = std::move(next);
  }
  return state;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "omega43", "ups52", "xi62", "ame64",   "ame54", "omega52_logical",
      "hs",      "hd",    "l",    "m",       "o8",    "oa16_perm"};
  return names;
}

CatalogEntry catalog_entry(const std::string& raw_name) {
  const std::string name = lower(raw_name);
  CatalogEntry entry;
  entry.name = name;
  if (name == "omega43") {
    entry.description = "nine-word four-qutrit state with every two-party reduction maximally mixed";
    entry.object = omega_43();
    entry.expect = {2, -1, 9, false};
  } else if (name == "ups52") {
    entry.description = "five-qubit state with +-1 amplitudes on all 32 basis words";
    entry.object = signed_state(5, ups52_signs());
    entry.expect = {2, -1, 32, false};
  } else if (name == "xi62") {
    entry.description = "six-qubit state with +-1 amplitudes on all 64 basis words";
    entry.object = signed_state(6, xi62_signs());
    entry.expect = {3, -1, 64, false};
  } else if (name == "ame64") {
    entry.description = "64-word six-ququart state of minimal support";
    entry.object = PureState::from_exact_terms(6, 4, uniform_word_terms(ame64_words(), 64));
    entry.expect = {3, -1, 64, false};
  } else if (name == "ame54") {
    entry.description = "16-word five-ququart state, two-uniform";
    entry.object = PureState::from_exact_terms(5, 4, uniform_word_terms(ame54_words(), 16));
    entry.expect = {2, -1, 16, false};
  } else if (name == "omega52_logical") {
    entry.description =
        "equal superposition of the two logical words of the five-qubit code";
    entry.object = PureState::from_exact_terms(5, 2, omega52_logical_terms());
    entry.expect = {2, -1, 8, false};
  } else if (name == "hs") {
    entry.description = "six-word four-qubit state reaching the 1/3 balanced-purity floor";
    entry.object = PureState::from_exact_terms(4, 2, hs_terms());
    entry.expect = {1, -1, 6, false};
  } else if (name == "hd") {
    entry.description = "five-word four-qubit state reaching the 1/3 balanced-purity floor";
    entry.object = PureState::from_exact_terms(4, 2, hd_terms());
    entry.expect = {1, -1, 5, false};
  } else if (name == "l") {
    entry.description = "eight-word four-qubit state reaching the 1/3 balanced-purity floor";
    entry.object = PureState::from_exact_terms(4, 2, l_terms());
    entry.expect = {1, -1, 8, false};
  } else if (name == "m") {
    entry.description = "six-word complex-phase four-qubit state reaching the 1/3 balanced-purity floor";
    entry.object = PureState::from_exact_terms(4, 2, m_terms());
    entry.expect = {1, -1, 6, false};
  } else if (name == "o8") {
    entry.description = "real Hadamard-type order-8 matrix, unitary under every reordering";
    entry.object = o8_matrix();
    entry.expect = {-1, 3, -1, true};
  } else if (name == "oa16_perm") {
    entry.description = "order-16 permutation matrix, 2-unitary over two ququart indices";
    entry.object = oa16_matrix();
    entry.expect = {-1, 2, -1, false};
  } else {
    throw std::domain_error("unknown catalog name: " + raw_name);
  }
  verify_entry(entry);
  return entry;
}

}  // namespace ameforge
