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

#include "pauliorder/json_io.hpp"

using namespace pauliorder;

TEST_CASE("coloring JSON", "[json]") {
  auto v = to_json(VertexColoring{{{0, 0}, {2, 1}}});
  CHECK(v.dump() == R"({"coloring":{"0":0,"2":1},"colors_used":2})");
  auto e = to_json(EdgeColoring{{{{1, 2}, 0}, {{3, 3}, 0}}});
  CHECK(e.dump() == R"({"coloring":{"1-2":0,"3-3":0},"colors_used":1})");
}

TEST_CASE("gate sequence and depth JSON", "[json]") {
  GateSequence seq{2, {{PauliString::zz(1, 2), 0.5}}};
  CHECK(to_json(seq).dump() == R"({"n_qubits":2,"blocks":[{"pauli":"Z1 Z2","angle":0.5}]})");
  DepthComparison d{4, 2, 0.5, 2, 1.0, 2.0};
  CHECK(to_json(d, false).dump() == R"({"baseline_depth":4,"reordered_depth":2,"ratio":0.5,"colors":2})");
  CHECK(to_json(d, true).contains("expand_ms"));
}

TEST_CASE("distribution JSON round trip", "[json]") {
  InteractionGraph g(3, {{1, 2}, {2, 3}, {1, 3}});
  auto state = qaoa_state(QaoaParams{{0.3}, {0.8}}, maxcut_hamiltonian(g));
  auto d = cut_distribution(state, g);
  auto j = distribution_to_json(d);
  auto back = distribution_from_json(Json::parse(j.dump()), g);
  CHECK(summarize(back).hypervolume == summarize(d).hypervolume);
  CHECK(summarize(back).avg_cut == Catch::Approx(summarize(d).avg_cut).margin(1e-15));

  CHECK_THROWS_AS(distribution_from_json(Json::array(), g), InputError);
  CHECK_THROWS_AS(distribution_from_json(Json{{"000", "x"}}, g), InputError);
  CHECK_THROWS_AS(distribution_from_json(Json{{"00", 1.0}}, g), InputError);
}

TEST_CASE("QAOA run JSON", "[json]") {
  InteractionGraph g(3, {{1, 2}, {2, 3}, {1, 3}});
  OptimizerConfig cfg;
  cfg.max_iterations = 10;
  auto run = run_qaoa(g, Order::saturation, 1, {}, cfg);
  auto j = to_json(run);
  CHECK(j["iterations"].size() == run.trace.values.size());
  CHECK(j["best_ae"].get<double>() == run.best_ae());
  CHECK(j["depth"].get<std::size_t>() == run.depth);
}
