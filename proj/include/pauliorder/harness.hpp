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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/graph.hpp"
#include "pauliorder/json_io.hpp"
#include "pauliorder/metrics.hpp"
#include "pauliorder/qaoa.hpp"
#include "pauliorder/reorder.hpp"
#include "pauliorder/trotter.hpp"

namespace pauliorder {

/// Uniform random simple graph with exactly `n_edges` edges (G(n, m)).
struct InstanceSpec {
  std::uint64_t seed = 0;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;

  void validate() const {
    if (n_vertices < 2 || n_edges < 1 || n_edges > n_vertices * (n_vertices - 1) / 2) {
      throw InputError("infeasible instance: " + std::to_string(n_edges) + " edges on " +
                       std::to_string(n_vertices) + " vertices");
    }
  }
};

inline InteractionGraph generate_instance(const InstanceSpec& spec) {
  spec.validate();
  std::vector<Edge> pairs;
  pairs.reserve(spec.n_vertices * (spec.n_vertices - 1) / 2);
  for (Vertex j = 1; j <= spec.n_vertices; ++j) {
    for (Vertex k = j + 1; k <= spec.n_vertices; ++k) pairs.push_back({j, k});
  }
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = 0; i < spec.n_edges; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pairs.size() - 1);
    std::swap(pairs[i], pairs[pick(rng)]);
  }
  pairs.resize(spec.n_edges);
  return InteractionGraph(spec.n_vertices, std::move(pairs));
}

/// Size band for instance families: vertices and edges drawn uniformly.
struct InstanceBand {
  std::size_t min_vertices = 32;
  std::size_t max_vertices = 64;
  std::size_t min_edges = 16;
  std::size_t max_edges = 256;
};

/// Depth benchmark band (32..64 vertices, 16..256 edges).
inline constexpr InstanceBand kDepthBand{32, 64, 16, 256};
/// QAOA benchmark band (5..8 vertices, 7..11 edges).
inline constexpr InstanceBand kQaoaBand{5, 8, 7, 11};

/// `count` reproducible specs in `band`; edge counts are clipped to what the
/// drawn vertex count can hold.
inline std::vector<InstanceSpec> band_specs(std::size_t count, std::uint64_t seed,
                                            const InstanceBand& band) {
  std::mt19937_64 rng(seed);
  std::vector<InstanceSpec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    InstanceSpec s;
    s.n_vertices = std::uniform_int_distribution<std::size_t>(band.min_vertices, band.max_vertices)(rng);
    const std::size_t cap = std::min(band.max_edges, s.n_vertices * (s.n_vertices - 1) / 2);
    if (cap < band.min_edges) throw InputError("instance band cannot fit its minimum edge count");
    s.n_edges = std::uniform_int_distribution<std::size_t>(band.min_edges, cap)(rng);
    s.seed = rng();
    specs.push_back(s);
  }
  return specs;
}

/// One (instance, order) result. QAOA-only fields stay empty for depth runs.
struct BenchRecord {
  std::size_t instance = 0;
  InstanceSpec spec;
  bool connected = false;
  Order order = Order::baseline;
  std::size_t colors_used = 0;
  std::size_t baseline_depth = 0;
  std::size_t reordered_depth = 0;
  double ratio = 1.0;
  double reorder_ms = 0.0;
  double expand_ms = 0.0;
  std::optional<double> best_ae;
  std::optional<double> baseline_best_ae;
  std::optional<double> gain;
  std::optional<MetricsReport> metrics;
  std::optional<std::string> error;
};

/// Runs `task(i)` for i in [0, count) on up to `workers` threads.
template <typename Task>
void parallel_for(std::size_t count, std::size_t workers, Task&& task) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

namespace detail {

inline std::vector<BenchRecord> flatten_records(std::vector<std::vector<BenchRecord>> per_instance) {
  std::vector<BenchRecord> out;
  for (auto& rs : per_instance) {
    for (auto& r : rs) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Depth study: every order on the max-cut Hamiltonian of every instance.
/// Records come back in (instance, order) order whatever the worker count.
inline std::vector<BenchRecord> bench_depth(std::span<const InstanceSpec> specs,
                                            std::span<const Order> orders,
                                            const DepthOptions& opts = {}, std::size_t workers = 1) {
  std::vector<std::vector<BenchRecord>> results(specs.size());
  parallel_for(specs.size(), workers, [&](std::size_t i) {
    for (Order order : orders) {
      BenchRecord r;
      r.instance = i;
      r.spec = specs[i];
      r.order = order;
      try {
        const auto g = generate_instance(specs[i]);
        r.connected = g.connected();
        const auto d = depth_reduction(maxcut_hamiltonian(g), order, opts);
        r.colors_used = d.colors;
        r.baseline_depth = d.baseline_depth;
        r.reordered_depth = d.reordered_depth;
        r.ratio = d.ratio;
        r.reorder_ms = d.reorder_ms;
        r.expand_ms = d.expand_ms;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      results[i].push_back(std::move(r));
    }
  });
  return detail::flatten_records(std::move(results));
}

/**
 * QAOA study: a baseline run plus one run per order on each instance, all with
 * the same optimizer seed. Metrics describe the ideal state at each run's best
 * parameters. Depth fields hold full-ansatz depths.
 */
inline std::vector<BenchRecord> bench_qaoa(std::span<const InstanceSpec> specs,
                                           std::span<const Order> orders, std::size_t layers,
                                           const NoiseConfig& noise, const OptimizerConfig& cfg = {},
                                           std::size_t workers = 1) {
  std::vector<std::vector<BenchRecord>> results(specs.size());
  parallel_for(specs.size(), workers, [&](std::size_t i) {
    std::optional<InteractionGraph> g;
    std::optional<QaoaRun> baseline;
    std::string failure;
    try {
      g = generate_instance(specs[i]);
      baseline = run_qaoa(*g, Order::baseline, layers, noise, cfg);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    for (Order order : orders) {
      BenchRecord r;
      r.instance = i;
      r.spec = specs[i];
      r.order = order;
      if (!baseline) {
        r.error = failure;
        results[i].push_back(std::move(r));
        continue;
      }
      try {
        r.connected = g->connected();
        const QaoaRun run = order == Order::baseline ? *baseline : run_qaoa(*g, order, layers, noise, cfg);
        r.colors_used = reorder(maxcut_hamiltonian(*g), order).layers.size();
        r.baseline_depth = baseline->depth;
        r.reordered_depth = run.depth;
        r.ratio = static_cast<double>(run.depth) / static_cast<double>(baseline->depth);
        r.best_ae = run.best_ae();
        r.baseline_best_ae = baseline->best_ae();
        r.gain = ae_gain(run.trace, baseline->trace);
        const auto state = qaoa_state(run.best, maxcut_hamiltonian(*g));
        r.metrics = summarize(cut_distribution(state, *g));
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      results[i].push_back(std::move(r));
    }
  });
  return detail::flatten_records(std::move(results));
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

/// Wall-clock fields are optional so that output can be compared byte-for-byte.
inline Json to_json(const BenchRecord& r, bool include_timing) {
  Json j{{"instance", r.instance},
         {"seed", r.spec.seed},
         {"n_vertices", r.spec.n_vertices},
         {"n_edges", r.spec.n_edges},
         {"connected", r.connected},
         {"order", std::string(to_string(r.order))}};
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["colors_used"] = r.colors_used;
  j["baseline_depth"] = r.baseline_depth;
  j["reordered_depth"] = r.reordered_depth;
  j["ratio"] = r.ratio;
  if (include_timing && !r.best_ae) {
    j["reorder_ms"] = r.reorder_ms;
    j["expand_ms"] = r.expand_ms;
  }
  if (r.best_ae) j["best_ae"] = *r.best_ae;
  if (r.baseline_best_ae) j["baseline_best_ae"] = *r.baseline_best_ae;
  if (r.gain) j["gain"] = *r.gain;
  if (r.metrics) j["metrics"] = to_json(*r.metrics);
  return j;
}

/// One JSON object per line.
inline std::string records_jsonl(std::span<const BenchRecord> records, bool include_timing) {
  std::string out;
  for (const auto& r : records) out += to_json(r, include_timing).dump() + "\n";
  return out;
}

inline std::string records_csv(std::span<const BenchRecord> records, bool include_timing) {
  std::string out =
      "instance,seed,n_vertices,n_edges,connected,order,colors_used,baseline_depth,"
      "reordered_depth,ratio";
  if (include_timing) out += ",reorder_ms,expand_ms";
  out += ",best_ae,baseline_best_ae,gain,error\n";
  for (const auto& r : records) {
    out += std::to_string(r.instance) + "," + std::to_string(r.spec.seed) + "," +
           std::to_string(r.spec.n_vertices) + "," + std::to_string(r.spec.n_edges) + "," +
           (r.connected ? "1" : "0") + "," + std::string(to_string(r.order)) + "," +
           std::to_string(r.colors_used) + "," + std::to_string(r.baseline_depth) + "," +
           std::to_string(r.reordered_depth) + "," + format_double(r.ratio);
    if (include_timing) out += "," + format_double(r.reorder_ms) + "," + format_double(r.expand_ms);
    out += "," + (r.best_ae ? format_double(*r.best_ae) : "") + "," +
           (r.baseline_best_ae ? format_double(*r.baseline_best_ae) : "") + "," +
           (r.gain ? format_double(*r.gain) : "") + "," + (r.error ? "error" : "") + "\n";
  }
  return out;
}

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

/// Midpoint median.
inline double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

/// Per-order aggregates over successful records.
struct OrderSummary {
  Order order = Order::baseline;
  std::size_t records = 0;
  std::size_t failures = 0;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double mean_relative_time = 0.0;  // (reorder + expand) / expand
  std::optional<double> mean_gain;
  std::optional<double> median_gain;
};

inline std::vector<OrderSummary> summarize_records(std::span<const BenchRecord> records) {
  std::map<Order, std::vector<const BenchRecord*>> by_order;
  std::vector<Order> seen;
  for (const auto& r : records) {
    if (!by_order.contains(r.order)) seen.push_back(r.order);
    by_order[r.order].push_back(&r);
  }
  std::vector<OrderSummary> out;
  for (Order order : seen) {
    OrderSummary s;
    s.order = order;
    std::vector<double> ratios;
    std::vector<double> times;
    std::vector<double> gains;
    for (const BenchRecord* r : by_order[order]) {
      if (r->error) {
        ++s.failures;
        continue;
      }
      ++s.records;
      ratios.push_back(r->ratio);
      if (r->expand_ms > 0.0) times.push_back(r->reorder_ms / r->expand_ms);
      if (r->gain) gains.push_back(*r->gain);
    }
    s.mean_ratio = mean(ratios);
    s.median_ratio = median(ratios);
    s.mean_relative_time = mean(times);
    if (!gains.empty()) {
      s.mean_gain = mean(gains);
      s.median_gain = median(gains);
    }
    out.push_back(s);
  }
  return out;
}

inline std::string summary_csv(std::span<const BenchRecord> records, bool include_timing) {
  std::string out = "order,records,failures,mean_ratio,median_ratio";
  if (include_timing) out += ",mean_relative_time";
  out += ",mean_gain,median_gain\n";
  for (const auto& s : summarize_records(records)) {
    out += std::string(to_string(s.order)) + "," + std::to_string(s.records) + "," +
           std::to_string(s.failures) + "," + format_double(s.mean_ratio) + "," +
           format_double(s.median_ratio);
    if (include_timing) out += "," + format_double(s.mean_relative_time);
    out += "," + (s.mean_gain ? format_double(*s.mean_gain) : "") + "," +
           (s.median_gain ? format_double(*s.median_gain) : "") + "\n";
  }
  return out;
}

}  // namespace pauliorder
