#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ameforge/catalog.hpp"
#include "ameforge/search.hpp"
#include "ameforge/uniformity.hpp"

using namespace ameforge;

namespace {

PureState bell_state() {
  const double a = 1.0 / std::sqrt(2.0);
  return PureState::from_terms(2, 2, {{{0, 0}, a}, {{1, 1}, a}});
}

// Brute-force reduction check used as an independent oracle: every k-party
// reduced matrix must equal I/d^k entrywise.
bool brute_force_k_uniform(const PureState& s, int k, double tol) {
  for (const auto& subset : k_subsets(s.num_parties(), k)) {
    DensityMatrix rho = partial_trace(s, subset);
    Eigen::MatrixXcd target =
        Eigen::MatrixXcd::Identity(rho.dim(), rho.dim()) / static_cast<double>(rho.dim());
    if ((rho.m - target).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the four-qutrit state is 2-uniform with tiny deviation") {
  UniformityReport report = is_k_uniform(omega_43(), 2);
  CHECK(report.is_uniform);
  CHECK(report.max_deviation < 1e-12);
  CHECK(report.k == 2);
}

TEST_CASE("GHZ states are 1-uniform") {
  UniformityReport report = is_k_uniform(ghz_state(3, 2), 1);
  CHECK(report.is_uniform);
}

TEST_CASE("a product state is not 1-uniform, with deviation 1 - 1/d") {
  PureState zero = PureState::from_terms(3, 2, {{{0, 0, 0}, 1.0}});
  UniformityReport report = is_k_uniform(zero, 1);
  CHECK_FALSE(report.is_uniform);
  CHECK(report.max_deviation == doctest::Approx(0.5).epsilon(1e-12));

  PureState zero3 = PureState::from_terms(2, 3, {{{0, 0}, 1.0}});
  CHECK(is_k_uniform(zero3, 1).max_deviation ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("k out of range is rejected") {
  CHECK_THROWS(is_k_uniform(omega_43(), 0));
  CHECK_THROWS(is_k_uniform(omega_43(), 3));
}

TEST_CASE("maximal-k verdicts for the reference states") {
  CHECK(is_ame(catalog_entry("ups52").state()).is_uniform);
  CHECK(is_ame(bell_state()).is_uniform);
  CHECK_FALSE(is_ame(catalog_entry("hs").state()).is_uniform);
}

TEST_CASE("a k-uniform verdict implies all lower levels") {
  PureState xi = catalog_entry("xi62").state();
  REQUIRE(is_k_uniform(xi, 3).is_uniform);
  CHECK(is_k_uniform(xi, 2).is_uniform);
  CHECK(is_k_uniform(xi, 1).is_uniform);

  PureState hs = catalog_entry("hs").state();
  REQUIRE_FALSE(is_k_uniform(hs, 2).is_uniform);
  CHECK(is_k_uniform(hs, 1).is_uniform);
}

TEST_CASE("verdicts agree with the brute-force reduction oracle") {
  struct Example {
    const char* name;
    int k;
  };
  for (const Example& e : {Example{"omega43", 2}, Example{"ups52", 2}, Example{"xi62", 3},
                           Example{"ame64", 3}, Example{"ame54", 2}, Example{"hs", 2},
                           Example{"hd", 1}, Example{"l", 1}, Example{"m", 2}}) {
    PureState s = catalog_entry(e.name).state();
    bool expected = brute_force_k_uniform(s, e.k, 1e-10);
    REQUIRE(is_k_uniform(s, e.k).is_uniform == expected);
  }
}

TEST_CASE("mean balanced purity of the reference states") {
  CHECK(entanglement_potential(omega_43()) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(entanglement_potential(catalog_entry("hs").state()) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  PureState product = PureState::from_terms(4, 2, {{{0, 1, 0, 1}, 1.0}});
  CHECK(entanglement_potential(product) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("balanced purities stay inside the theoretical bounds") {
  rng_engine rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    PureState s = sample_haar_state(4, 3, rng);
    double value = entanglement_potential(s);
    REQUIRE(value >= 1.0 / 9.0 - 1e-10);
    REQUIRE(value <= 1.0 + 1e-10);
  }
}

TEST_CASE("GHZ of four qubits sits at mean balanced purity 1/2") {
  CHECK(entanglement_potential(ghz_state(4, 2)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("parallel and serial purity sweeps agree exactly") {
  rng_engine rng(37);
  PureState s = sample_haar_state(6, 2, rng);
  auto par = balanced_purities(s);
  auto ser = balanced_purities_serial(s);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) REQUIRE(par[i] == ser[i]);
  CHECK(entanglement_potential(s) == entanglement_potential_serial(s));

  auto dev_par = reduction_deviations(s, 3);
  auto dev_ser = reduction_deviations_serial(s, 3);
  REQUIRE(dev_par.size() == dev_ser.size());
  for (std::size_t i = 0; i < dev_par.size(); ++i) REQUIRE(dev_par[i] == dev_ser[i]);
}

TEST_CASE("off-diagonal residual vanishes on the five-qubit state") {
  PureState ups = catalog_entry("ups52").state();
  for (const auto& subset : k_subsets(5, 2)) {
    REQUIRE(offdiag_residual(ups, subset) < 1e-12);
  }
}

TEST_CASE("off-diagonal residual on degenerate diagonal cases") {
  PureState zero = PureState::from_terms(4, 2, {{{0, 0, 0, 0}, 1.0}});
  CHECK(offdiag_residual(zero, {0, 1}) == doctest::Approx(0.0));

  // All balanced reductions diagonal yet not maximally mixed: the residual
  // alone cannot certify maximal entanglement.
  PureState ghz4 = ghz_state(4, 2);
  CHECK(offdiag_residual(ghz4, {0, 1}) == doctest::Approx(0.0));
  CHECK_FALSE(is_ame(ghz4).is_uniform);
}

TEST_CASE("off-diagonal residual is defined for qubits only") {
  CHECK_THROWS(offdiag_residual(omega_43(), {0, 1}));
}

TEST_CASE("vanishing residuals plus diagonal uniformity imply the top verdict") {
  for (const char* name : {"ups52", "xi62"}) {
    PureState s = catalog_entry(name).state();
    const int k = s.num_parties() / 2;
    bool off_ok = true, diag_ok = true;
    for (const auto& subset : k_subsets(s.num_parties(), k)) {
      if (offdiag_residual(s, subset) > 1e-10) off_ok = false;
      DensityMatrix rho = partial_trace(s, subset);
      for (int i = 0; i < rho.dim(); ++i) {
        if (std::abs(rho.m(i, i) - 1.0 / rho.dim()) > 1e-10) diag_ok = false;
      }
    }
    REQUIRE(off_ok);
    REQUIRE(diag_ok);
    REQUIRE(is_ame(s).is_uniform);
  }
}

TEST_CASE("verdict and potential are invariant under 200 random local unitaries") {
  rng_engine rng(41);
  for (const char* name : {"omega43", "ups52", "xi62"}) {
    PureState s = catalog_entry(name).state();
    const double base_potential = entanglement_potential(s);
    REQUIRE(is_ame(s).is_uniform);
    for (int trial = 0; trial < 200; ++trial) {
      int site = static_cast<int>(rng() % s.num_parties());
      PureState t = apply_local_unitary(s, site, random_unitary(s.local_dim(), rng));
      REQUIRE(is_ame(t).is_uniform);
      REQUIRE(std::abs(entanglement_potential(t) - base_potential) < 1e-9);
    }
  }
}

TEST_CASE("worst partition is reported deterministically") {
  // The all-zeros product state violates every reduction equally; the
  // lexicographically smallest partition must win the tie.
  PureState zero = PureState::from_terms(4, 2, {{{0, 0, 0, 0}, 1.0}});
  UniformityReport report = is_k_uniform(zero, 2);
  CHECK(report.worst_partition == std::vector<int>{0, 1});
}
