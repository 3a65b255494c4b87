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
#include <numeric>
#include <set>
#include <sstream>

#include "pauliorder/harness.hpp"

using namespace pauliorder;

namespace {

const std::vector<Order> kAllOrders{Order::baseline, Order::saturation, Order::misra_gries};
const std::vector<Order> kColorings{Order::saturation, Order::misra_gries};

bool is_matching(const InteractionGraph& g) {
  for (Vertex v = 1; v <= g.n_vertices(); ++v) {
    if (g.degree(v) > 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("instance generation", "[harness]") {
  auto k4 = generate_instance({1, 4, 6});
  CHECK(std::vector<Edge>(k4.edges().begin(), k4.edges().end()) ==
        std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

  auto a = generate_instance({1, 4, 3});
  auto b = generate_instance({1, 4, 3});
  CHECK(std::ranges::equal(a.edges(), b.edges()));
  CHECK(a.n_edges() == 3);
  CHECK(a.loop_free());

  auto big1 = generate_instance({1, 32, 64});
  auto big2 = generate_instance({2, 32, 64});
  const bool differ = !std::ranges::equal(big1.edges(), big2.edges());
  INFO("seeds 1 and 2 give different 32-vertex instances: " << differ);
  CHECK(big1.n_edges() == 64);

  CHECK_THROWS_AS(generate_instance({1, 4, 7}), InputError);
  CHECK_THROWS_AS(generate_instance({1, 4, 0}), InputError);
  CHECK_THROWS_AS(generate_instance({1, 1, 1}), InputError);
}

TEST_CASE("band specs", "[harness]") {
  auto specs = band_specs(50, 9, kDepthBand);
  REQUIRE(specs.size() == 50);
  std::set<std::uint64_t> seeds;
  for (const auto& s : specs) {
    CHECK(s.n_vertices >= 32);
    CHECK(s.n_vertices <= 64);
    CHECK(s.n_edges >= 16);
    CHECK(s.n_edges <= 256);
    seeds.insert(s.seed);
  }
  CHECK(seeds.size() == 50);
  auto again = band_specs(50, 9, kDepthBand);
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(again[i].seed == specs[i].seed);
    CHECK(again[i].n_vertices == specs[i].n_vertices);
    CHECK(again[i].n_edges == specs[i].n_edges);
  }
  for (const auto& s : band_specs(50, 3, kQaoaBand)) {
    CHECK(s.n_vertices >= 5);
    CHECK(s.n_vertices <= 8);
    CHECK(s.n_edges >= 7);
    CHECK(s.n_edges <= 11);
  }
  CHECK_THROWS_AS(band_specs(1, 1, InstanceBand{3, 3, 5, 9}), InputError);
}

TEST_CASE("parallel_for visits every index once", "[harness]") {
  for (std::size_t workers : {1U, 2U, 5U}) {
    std::vector<std::atomic<int>> hits(37);
    parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) REQUIRE(h.load() == 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("depth benchmark examples", "[harness]") {
  DepthOptions opts;
  opts.formula = parse_formula("s4");
  SECTION("triangles have no parallelism") {
    std::vector<InstanceSpec> specs{{1, 3, 3}, {2, 3, 3}};
    for (const auto& r : bench_depth(specs, kAllOrders, opts)) {
      REQUIRE_FALSE(r.error);
      CHECK(r.ratio == 1.0);
    }
  }
  SECTION("perfect matchings are already optimal") {
    InstanceSpec matching{0, 4, 2};
    while (!is_matching(generate_instance(matching))) ++matching.seed;
    std::vector<InstanceSpec> specs{matching};
    for (const auto& r : bench_depth(specs, kColorings, opts)) {
      REQUIRE_FALSE(r.error);
      CHECK(r.ratio == 1.0);
      CHECK(r.colors_used == 1);
    }
  }
  SECTION("failures are recorded and the run continues") {
    std::vector<InstanceSpec> specs{{1, 3, 9}, {1, 5, 6}};
    auto records = bench_depth(specs, kColorings, opts);
    REQUIRE(records.size() == 4);
    CHECK(records[0].error);
    CHECK(records[1].error);
    CHECK_FALSE(records[2].error);
    CHECK_FALSE(records[3].error);
    const auto json = Json::parse(records_jsonl(records, false).substr(0, records_jsonl(records, false).find('\n')));
    CHECK(json.contains("error"));
    auto summary = summarize_records(records);
    REQUIRE(summary.size() == 2);
    CHECK(summary[0].failures == 1);
    CHECK(summary[0].records == 1);
  }
}

TEST_CASE("depth benchmark records are consistent and deterministic", "[harness][property]") {
  auto specs = band_specs(12, 17, InstanceBand{8, 20, 6, 40});
  DepthOptions opts;
  opts.formula = parse_formula("s4");
  auto serial = bench_depth(specs, kAllOrders, opts, 1);
  auto threaded = bench_depth(specs, kAllOrders, opts, 3);
  REQUIRE(serial.size() == specs.size() * kAllOrders.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    const auto& r = serial[i];
    REQUIRE_FALSE(r.error);
    REQUIRE(r.instance == i / kAllOrders.size());
    REQUIRE(r.order == kAllOrders[i % kAllOrders.size()]);
    REQUIRE(r.ratio == static_cast<double>(r.reordered_depth) / static_cast<double>(r.baseline_depth));
    REQUIRE(r.reordered_depth <= r.baseline_depth * 2);
    if (r.order == Order::baseline) REQUIRE(r.ratio == 1.0);
  }
  CHECK(records_jsonl(serial, false) == records_jsonl(threaded, false));
  CHECK(records_csv(serial, false) == records_csv(threaded, false));
  CHECK(summary_csv(serial, false) == summary_csv(threaded, false));

  // Aggregates recompute from the record stream.
  for (const auto& s : summarize_records(serial)) {
    std::vector<double> ratios;
    for (const auto& r : serial) {
      if (r.order == s.order) ratios.push_back(r.ratio);
    }
    CHECK(s.records == ratios.size());
    CHECK(s.mean_ratio == Catch::Approx(std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size()));
    std::sort(ratios.begin(), ratios.end());
    CHECK(s.median_ratio == Catch::Approx(0.5 * (ratios[5] + ratios[6])));
  }

  // CSV has a header and one row per record; JSON lines parse back.
  std::istringstream csv(records_csv(serial, true));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == serial.size() + 1);
  std::istringstream jsonl(records_jsonl(serial, true));
  std::size_t k = 0;
  while (std::getline(jsonl, line)) {
    auto j = Json::parse(line);
    CHECK(j["reordered_depth"].get<std::size_t>() == serial[k].reordered_depth);
    CHECK(j.contains("reorder_ms"));
    ++k;
  }
}

TEST_CASE("QAOA benchmark", "[harness]") {
  auto specs = band_specs(3, 4, kQaoaBand);
  OptimizerConfig cfg;
  cfg.max_iterations = 60;
  SECTION("noiseless gains vanish") {
    for (const auto& r : bench_qaoa(specs, kColorings, 2, NoiseConfig{0.0}, cfg)) {
      REQUIRE_FALSE(r.error);
      CHECK(std::abs(*r.gain) <= 1e-9);
      REQUIRE(r.metrics);
      CHECK(r.metrics->avg_cut <= static_cast<double>(r.metrics->max_cut) + 1e-12);
      CHECK(r.metrics->max_cut <= r.spec.n_edges);
    }
  }
  SECTION("same seed reproduces every record") {
    auto a = bench_qaoa(specs, kAllOrders, 2, NoiseConfig{1e-3}, cfg, 1);
    auto b = bench_qaoa(specs, kAllOrders, 2, NoiseConfig{1e-3}, cfg, 2);
    CHECK(records_jsonl(a, false) == records_jsonl(b, false));
    CHECK(records_csv(a, false) == records_csv(b, false));
    for (const auto& r : a) {
      REQUIRE_FALSE(r.error);
      CHECK(r.ratio == static_cast<double>(r.reordered_depth) / static_cast<double>(r.baseline_depth));
      CHECK(*r.gain == *r.best_ae - *r.baseline_best_ae);
      if (r.order == Order::baseline) CHECK(*r.gain == 0.0);
    }
  }
}

TEST_CASE("mean and median", "[harness]") {
  CHECK(mean(std::vector<double>{}) == 0.0);
  CHECK(mean(std::vector<double>{1.0, 2.0, 6.0}) == 3.0);
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
}
