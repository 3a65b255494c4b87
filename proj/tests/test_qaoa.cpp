// Copyright 2026 The pauliorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pauliorder/qaoa.hpp"

using namespace pauliorder;

namespace {

InteractionGraph triangle() { return InteractionGraph(3, {{1, 2}, {2, 3}, {1, 3}}); }
InteractionGraph four_cycle() { return InteractionGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

/// p = 1 AE/e from a diagonal cost phase and a Kronecker-product mixer.
double p1_oracle(const InteractionGraph& g, double beta, double gamma) {
  const std::size_t n = g.n_vertices();
  const std::size_t dim = std::size_t{1} << n;
  oracle::Vector v(dim);
  oracle::Vector energy(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    double e = 0.0;
    for (const auto& edge : g.edges()) e += ((b >> (edge.u - 1)) & 1U) != ((b >> (edge.v - 1)) & 1U) ? 1.0 : -1.0;
    energy[b] = e;
    v[b] = std::exp(std::complex<double>(0.0, -gamma * e)) / std::sqrt(static_cast<double>(dim));
  }
  oracle::Matrix x(2, 2);
  x << std::cos(beta), std::complex<double>(0.0, -std::sin(beta)), std::complex<double>(0.0, -std::sin(beta)),
      std::cos(beta);
  oracle::Matrix mixer = oracle::Matrix::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) mixer = Eigen::kroneckerProduct(x, mixer).eval();
  v = mixer * v;
  double total = 0.0;
  for (std::size_t b = 0; b < dim; ++b) total += std::norm(v[b]) * energy[b].real();
  return total / static_cast<double>(g.n_edges());
}

}  // namespace

TEST_CASE("average energy per edge", "[qaoa]") {
  CHECK(ae_per_edge(3.0, 3) == 1.0);
  CHECK(ae_per_edge(0.0, 5) == 0.0);
  CHECK_THROWS_AS(ae_per_edge(1.0, 0), InputError);
  const auto cost = maxcut_hamiltonian(triangle());
  const double best = expectation(Statevector::basis(3, parse_bitstring("001", 3)), cost);
  CHECK(ae_per_edge(best, 3) == Catch::Approx(1.0 / 3.0).margin(1e-15));
}

TEST_CASE("Nelder-Mead examples", "[qaoa][optimizer]") {
  SECTION("one dimension") {
    OptimizerConfig cfg;
    cfg.max_iterations = 200;
    auto trace = nelder_mead_maximize([](std::span<const double> x) { return -(x[0] - 1.0) * (x[0] - 1.0); },
                                      {0.0}, cfg);
    CHECK(trace.values.size() <= 200);
    CHECK(trace.best_params[0] == Catch::Approx(1.0).margin(1e-4));
  }
  SECTION("two dimensions") {
    auto f = [](std::span<const double> x) {
      return -((x[0] - 1.0) * (x[0] - 1.0) + (x[1] - 2.0) * (x[1] - 2.0));
    };
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
      OptimizerConfig cfg;
      cfg.seed = seed;
      auto trace = nelder_mead_maximize(f, {0.0, 0.0}, cfg);
      CHECK(trace.best_params[0] == Catch::Approx(1.0).margin(1e-3));
      CHECK(trace.best_params[1] == Catch::Approx(2.0).margin(1e-3));
    }
  }
  SECTION("trace bookkeeping") {
    OptimizerConfig cfg;
    cfg.max_iterations = 37;
    auto trace = nelder_mead_maximize([](std::span<const double> x) { return std::sin(3 * x[0]) * std::cos(x[1]); },
                                      {0.2, 0.1}, cfg);
    REQUIRE(trace.values.size() <= 37);
    REQUIRE(trace.cumulative_max.size() == trace.values.size());
    double running = -1e300;
    for (std::size_t i = 0; i < trace.values.size(); ++i) {
      running = std::max(running, trace.values[i]);
      REQUIRE(trace.cumulative_max[i] == running);
      if (i) REQUIRE(trace.cumulative_max[i] >= trace.cumulative_max[i - 1]);
    }
    REQUIRE(trace.best() == running);
  }
  SECTION("errors") {
    OptimizerConfig bad;
    bad.max_iterations = 0;
    auto zero = [](std::span<const double>) { return 0.0; };
    CHECK_THROWS_AS(nelder_mead_maximize(zero, {0.0}, bad), InputError);
    bad = {};
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(nelder_mead_maximize(zero, {0.0}, bad), InputError);
    CHECK_THROWS_AS(nelder_mead_maximize(zero, {}, {}), InputError);
    CHECK_THROWS_AS(nelder_mead_maximize(zero, {std::nan("")}, {}), InputError);
    CHECK_THROWS_AS(nelder_mead_maximize([](std::span<const double> x) { return x[0] > 0.1 ? std::nan("") : 0.0; },
                                         {0.0}, {}),
                    NonFiniteObjective);
  }
}

TEST_CASE("initial parameters ramp", "[qaoa]") {
  auto p = initial_params(2);
  CHECK(p.betas == std::vector<double>{0.375, 0.125});
  CHECK(p.gammas == std::vector<double>{0.125, 0.375});
  CHECK_THROWS_AS(initial_params(0), InputError);
}

TEST_CASE("ansatz depth", "[qaoa]") {
  const auto c4 = four_cycle();
  CHECK(mixer_depth(4, CostModel::unit) == 1);
  CHECK(mixer_depth(4, CostModel::ladder) == 3);
  // Edge-ordered cost layer (1,2),(1,4),(2,3),(3,4) needs 3 steps; colored layers need 2.
  CHECK(cost_layer_depth(c4, Order::baseline, CostModel::unit) == 3);
  CHECK(cost_layer_depth(c4, Order::saturation, CostModel::unit) == 2);
  CHECK(cost_layer_depth(c4, Order::misra_gries, CostModel::unit) == 2);
  CHECK(ansatz_depth(c4, Order::baseline, 2, CostModel::unit) == 8);
  CHECK(ansatz_depth(c4, Order::misra_gries, 2, CostModel::unit) == 6);
}

TEST_CASE("noiseless QAOA is independent of term order", "[qaoa][property]") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = oracle::random_graph(3 + rng() % 4, 0.6, 0.0, rng);
    if (g.n_edges() == 0) continue;
    OptimizerConfig cfg;
    cfg.max_iterations = 120;
    auto base = run_qaoa(g, Order::baseline, 2, NoiseConfig{0.0}, cfg);
    for (Order order : {Order::saturation, Order::misra_gries}) {
      auto re = run_qaoa(g, order, 2, NoiseConfig{0.0}, cfg);
      REQUIRE(std::abs(re.best_ae() - base.best_ae()) <= 1e-9);
      REQUIRE(std::abs(ae_gain(re.trace, base.trace)) <= 1e-9);
    }
    REQUIRE(ae_gain(base.trace, base.trace) == 0.0);
    for (double v : base.trace.values) REQUIRE(std::abs(v) <= 1.0 + 1e-12);
  }
}

TEST_CASE("shallower reordered circuits win under noise on the 4-cycle", "[qaoa]") {
  NoiseConfig noise{1e-3};
  auto base = run_qaoa(four_cycle(), Order::baseline, 2, noise);
  for (Order order : {Order::saturation, Order::misra_gries}) {
    auto re = run_qaoa(four_cycle(), order, 2, noise);
    CHECK(re.depth < base.depth);
    CHECK(re.best_ae() >= base.best_ae());
    CHECK(ae_gain(re.trace, base.trace) > 0.0);
  }
}

TEST_CASE("p = 1 triangle matches an exhaustive grid", "[qaoa][oracle]") {
  const auto g = triangle();
  double grid_best = -2.0;
  for (int i = 0; i * 0.01 <= std::numbers::pi; ++i) {
    for (int j = 0; j * 0.01 <= std::numbers::pi; ++j) grid_best = std::max(grid_best, p1_oracle(g, i * 0.01, j * 0.01));
  }
  // Spot-check the oracle against the simulator.
  const auto cost = maxcut_hamiltonian(g);
  for (auto [b, c] : {std::pair{0.3, 0.9}, std::pair{1.2, 2.5}}) {
    CHECK(p1_oracle(g, b, c) ==
          Catch::Approx(ae_per_edge(expectation(qaoa_state(QaoaParams{{b}, {c}}, cost), cost), 3)).margin(1e-12));
  }
  auto run = run_qaoa(g, Order::saturation, 1, NoiseConfig{0.0});
  CHECK(std::abs(run.best_ae() - grid_best) <= 2e-2);
}

TEST_CASE("QAOA runs are deterministic", "[qaoa]") {
  OptimizerConfig cfg;
  cfg.seed = 7;
  cfg.max_iterations = 80;
  auto a = run_qaoa(four_cycle(), Order::misra_gries, 2, NoiseConfig{1e-3}, cfg);
  auto b = run_qaoa(four_cycle(), Order::misra_gries, 2, NoiseConfig{1e-3}, cfg);
  CHECK(a.trace.values == b.trace.values);
  CHECK(a.trace.best_params == b.trace.best_params);
  CHECK(a.depth == b.depth);
}

TEST_CASE("QAOA input errors", "[qaoa]") {
  CHECK_THROWS_AS(run_qaoa(InteractionGraph(2, {{1, 1}, {1, 2}}), Order::baseline, 1, {}), InputError);
  CHECK_THROWS_AS(run_qaoa(InteractionGraph(2, {}), Order::baseline, 1, {}), InputError);
  CHECK_THROWS_AS(run_qaoa(InteractionGraph(17, {{1, 17}}), Order::baseline, 1, {}), InputError);
  CHECK_THROWS_AS(run_qaoa(triangle(), Order::baseline, 0, {}), InputError);
  CHECK_THROWS_AS(run_qaoa(triangle(), Order::baseline, 1, NoiseConfig{1.5}), InputError);
}
