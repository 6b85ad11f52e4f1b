#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "ameforge/search.hpp"
#include "ameforge/state.hpp"
#include "ameforge/uniformity.hpp"

using namespace ameforge;

namespace {

AnnealConfig quick_config() {
  AnnealConfig config;
  config.seed = 5;
  config.sweeps = 60;
  config.moves_per_sweep = 60;
  config.restarts = 3;
  return config;
}

}  // namespace

TEST_CASE("haar samples are normalized and reproducible") {
  rng_engine a(41), b(41), c(42);
  for (int trial = 0; trial < 50; ++trial) {
    PureState x = sample_haar_state(3, 3, a);
    PureState y = sample_haar_state(3, 3, b);
    REQUIRE(std::abs(x.norm() - 1.0) < 1e-12);
    REQUIRE((x.vector() - y.vector()).norm() == 0.0);
  }
  PureState z = sample_haar_state(3, 3, c);
  PureState w = sample_haar_state(3, 3, a);
  CHECK((z.vector() - w.vector()).norm() > 1e-3);
  CHECK_THROWS(sample_haar_state(30, 4, a));  // dimension over the cap
}

TEST_CASE("random unitaries are unitary and seed-stable") {
  rng_engine rng(43);
  for (int dim : {2, 3, 4, 8}) {
    Eigen::MatrixXcd u = random_unitary(dim, rng);
    REQUIRE((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
  }
  rng_engine r1(44), r2(44);
  CHECK((random_unitary(4, r1) - random_unitary(4, r2)).norm() == 0.0);
}

TEST_CASE("single-site purity of two-qubit Haar states averages to 4/5") {
  rng_engine rng(47);
  const int samples = 1000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < samples; ++i) {
    PureState state = sample_haar_state(2, 2, rng);
    double p = purity(partial_trace(state, {0}));
    sum += p;
    sumsq += p * p;
  }
  double mean = sum / samples;
  double stderr_mean = std::sqrt((sumsq / samples - mean * mean) / (samples - 1));
  CHECK(std::abs(mean - 0.8) < 3.0 * stderr_mean);
}

TEST_CASE("the mean half-chain entropy prediction and its small-size gap") {
  CHECK(page_prediction(10) == doctest::Approx(5.0 * std::log(2.0) - 0.5).epsilon(1e-15));
  auto [mean, se] = average_page_entropy(2, 200, 3);
  CHECK(mean < std::log(2.0));  // one qubit cannot exceed ln 2, and the mean sits below
  CHECK(se > 0.0);
  CHECK(se < 0.05);
}

TEST_CASE("sampled entropy approaches the prediction for ten qubits") {
  auto [mean, se] = average_page_entropy(10, 120, 11);
  CHECK(std::abs(mean - page_prediction(10)) < 0.05);
}

TEST_CASE("the entropy average is independent of scheduling") {
  auto parallel = average_page_entropy(6, 100, 17);
  auto serial = average_page_entropy_serial(6, 100, 17);
  CHECK(parallel.first == serial.first);
  CHECK(parallel.second == serial.second);
}

TEST_CASE("entropy sampling validates its arguments") {
  CHECK_THROWS(average_page_entropy(5, 200, 0));   // odd party count
  CHECK_THROWS(average_page_entropy(4, 50, 0));    // too few samples
  CHECK_THROWS(average_page_entropy(0, 200, 0));
}

TEST_CASE("restart seeds are deterministic and distinct") {
  CHECK(restart_seed(0, 0) != restart_seed(0, 1));
  CHECK(restart_seed(0, 1) != restart_seed(1, 0));
  CHECK(restart_seed(7, 3) == restart_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (int r = 0; r < 64; ++r) seen.insert(restart_seed(12345, r));
  CHECK(seen.size() == 64);
}

TEST_CASE("two identical searches return identical results") {
  AnnealConfig config = quick_config();
  SearchResult a = minimize_potential(4, 2, config);
  SearchResult b = minimize_potential(4, 2, config);
  CHECK(a.best_value == b.best_value);
  CHECK(a.seed == b.seed);
  CHECK((a.best_state.vector() - b.best_state.vector()).norm() == 0.0);
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i] == b.history[i]);
  }
}

TEST_CASE("the search equals the best of its independent restarts") {
  AnnealConfig config = quick_config();
  SearchResult merged = minimize_potential(4, 2, config);
  SearchResult best;
  best.best_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    SearchResult single = anneal_single(4, 2, config, restart_seed(config.seed, r));
    if (single.best_value < best.best_value) best = single;
  }
  CHECK(merged.best_value == best.best_value);
  CHECK(merged.seed == best.seed);
  CHECK((merged.best_state.vector() - best.best_state.vector()).norm() == 0.0);
}

TEST_CASE("serial and parallel searches agree exactly") {
  AnnealConfig config = quick_config();
  SearchResult a = minimize_potential(4, 2, config);
  SearchResult b = minimize_potential_serial(4, 2, config);
  CHECK(a.best_value == b.best_value);
  CHECK(a.seed == b.seed);
  CHECK((a.best_state.vector() - b.best_state.vector()).norm() == 0.0);
}

TEST_CASE("the tracked best value never increases within a run") {
  SearchResult result = anneal_single(4, 2, quick_config(), restart_seed(5, 0));
  REQUIRE_FALSE(result.history.empty());
  double last = std::numeric_limits<double>::infinity();
  for (const auto& [sweep, value] : result.history) {
    REQUIRE(value <= last);
    last = value;
  }
  CHECK(result.history.back().second == result.best_value);
  CHECK(result.history.size() == static_cast<std::size_t>(quick_config().sweeps));
}

TEST_CASE("search results respect the balanced-purity floor") {
  AnnealConfig config = quick_config();
  for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {4, 3}}) {
    SearchResult result = minimize_potential(n, d, config);
    const double floor = 1.0 / ipow(d, n / 2);
    CHECK(result.best_value >= floor - 1e-9);
    CHECK(result.best_value <= 1.0);
    CHECK(std::abs(result.best_state.norm() - 1.0) < 1e-9);
    CHECK(entanglement_potential(result.best_state) ==
          doctest::Approx(result.best_value).epsilon(1e-12));
  }
}

TEST_CASE("search configuration is validated") {
  AnnealConfig config = quick_config();
  config.cooling = 1.5;
  CHECK_THROWS(minimize_potential(4, 2, config));
  config = quick_config();
  config.cooling = 0.0;
  CHECK_THROWS(minimize_potential(4, 2, config));
  config = quick_config();
  config.restarts = 0;
  CHECK_THROWS(minimize_potential(4, 2, config));
  config = quick_config();
  config.sweeps = 0;
  CHECK_THROWS(minimize_potential(4, 2, config));
  config = quick_config();
  CHECK_THROWS(minimize_potential(12, 3, config));  // state space over the cap
}
