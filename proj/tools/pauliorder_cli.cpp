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

// Command-line front end: instance generation, coloring, reordering, depth,
// Trotter expansion, QAOA runs, cut metrics and the two benchmark studies.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pauliorder/pauliorder.hpp"

namespace po = pauliorder;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string out;
  std::string format = "json";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw po::InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw po::InputError("cannot write '" + g.out + "'");
  out << text;
}

void emit(const Globals& g, const po::Json& j) { emit(g, j.dump(2) + "\n"); }

bool csv(const Globals& g) { return g.format == "csv"; }

std::vector<po::Order> parse_orders(const std::string& text) {
  std::vector<po::Order> orders;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (!item.empty()) orders.push_back(po::parse_order(item));
  }
  if (orders.empty()) throw po::InputError("no orders given");
  return orders;
}

/// A Hamiltonian from --hamiltonian, or the max-cut Hamiltonian of --graph.
struct Input {
  std::string hamiltonian;
  std::string graph;

  void add(CLI::App* app) {
    auto* h = app->add_option("--hamiltonian", hamiltonian, "Hamiltonian text file");
    auto* gr = app->add_option("--graph", graph, "graph edge-list file");
    h->excludes(gr);
  }

  po::Hamiltonian load() const {
    if (!hamiltonian.empty()) return po::parse_hamiltonian(read_file(hamiltonian));
    if (!graph.empty()) return po::maxcut_hamiltonian(load_graph());
    throw po::InputError("one of --hamiltonian or --graph is required");
  }

  po::InteractionGraph load_graph() const {
    if (graph.empty()) throw po::InputError("--graph is required");
    return po::parse_graph(read_file(graph));
  }
};

std::string metrics_csv(const po::MetricsReport& m) {
  return "max_cut,prob_max,avg_cut,pareto_size,avg_cut_pareto,hypervolume\n" + std::to_string(m.max_cut) + "," +
         po::format_double(m.prob_max) + "," + po::format_double(m.avg_cut) + "," + std::to_string(m.pareto_size) +
         "," + po::format_double(m.avg_cut_pareto) + "," + po::format_double(m.hypervolume) + "\n";
}

po::InstanceBand band_for(const std::string& name) {
  if (name == "depth") return po::kDepthBand;
  if (name == "qaoa") return po::kQaoaBand;
  throw po::InputError("unknown band '" + name + "' (expected depth or qaoa)");
}

/// Band selection shared by the benchmark commands; explicit bounds override the preset.
struct BandOptions {
  std::string preset;
  std::optional<std::size_t> min_vertices, max_vertices, min_edges, max_edges;
  std::size_t count = 0;

  void add(CLI::App* app, std::string default_preset, std::size_t default_count) {
    preset = std::move(default_preset);
    count = default_count;
    app->add_option("--band", preset, "size band preset: depth or qaoa")->capture_default_str();
    app->add_option("--count", count, "number of instances")->capture_default_str();
    app->add_option("--min-vertices", min_vertices);
    app->add_option("--max-vertices", max_vertices);
    app->add_option("--min-edges", min_edges);
    app->add_option("--max-edges", max_edges);
  }

  po::InstanceBand band() const {
    auto b = band_for(preset);
    if (min_vertices) b.min_vertices = *min_vertices;
    if (max_vertices) b.max_vertices = *max_vertices;
    if (min_edges) b.min_edges = *min_edges;
    if (max_edges) b.max_edges = *max_edges;
    if (b.min_vertices < 2 || b.min_vertices > b.max_vertices || b.min_edges < 1 || b.min_edges > b.max_edges) {
      throw po::InputError("inconsistent size band");
    }
    return b;
  }
};

void write_bench(const Globals& g, const std::vector<po::BenchRecord>& records, bool timing,
                 const std::string& summary_path) {
  emit(g, csv(g) ? po::records_csv(records, timing) : po::records_jsonl(records, timing));
  if (!summary_path.empty()) {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw po::InputError("cannot write '" + summary_path + "'");
    out << po::summary_csv(records, timing);
  }
  for (const auto& s : po::summarize_records(records)) {
    std::fprintf(stderr, "%-12s records=%zu failures=%zu mean_ratio=%.4f", std::string(po::to_string(s.order)).c_str(),
                 s.records, s.failures, s.mean_ratio);
    if (s.median_gain) std::fprintf(stderr, " median_gain=%.4e", *s.median_gain);
    std::fprintf(stderr, "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli term reordering by graph coloring, with Trotter depth and QAOA studies"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "random seed")->capture_default_str();
  app.add_option("--workers", globals.workers, "worker threads for benchmarks")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--out", globals.out, "output file (default stdout)");
  app.add_option("--format", globals.format, "json or csv")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "random G(n, m) max-cut instance");
  std::size_t gen_vertices = 0, gen_edges = 0;
  bool gen_hamiltonian = false;
  gen->add_option("--vertices", gen_vertices)->required();
  gen->add_option("--edges", gen_edges)->required();
  gen->add_flag("--hamiltonian", gen_hamiltonian, "write the max-cut Hamiltonian instead of the edge list");

  // color
  auto* color = app.add_subcommand("color", "color the overlap or interaction graph");
  Input color_in;
  color_in.add(color);
  std::string color_method = "saturation";
  color->add_option("--method", color_method, "saturation or misra-gries")->capture_default_str();

  // reorder
  auto* reorder_cmd = app.add_subcommand("reorder", "write the color-layered Hamiltonian");
  Input reorder_in;
  reorder_in.add(reorder_cmd);
  std::string reorder_order = "saturation", reorder_pauli = "sparse";
  reorder_cmd->add_option("--order", reorder_order)->capture_default_str();
  reorder_cmd->add_option("--pauli", reorder_pauli, "sparse or dense term notation")->capture_default_str()
      ->check(CLI::IsMember({"sparse", "dense"}));

  // depth
  auto* depth = app.add_subcommand("depth", "baseline vs reordered scheduled depth");
  Input depth_in;
  depth_in.add(depth);
  std::string depth_cost = "unit", depth_order = "saturation", depth_formula = "s4";
  double depth_t = 1.0;
  bool depth_no_timing = false;
  depth->add_option("--cost", depth_cost)->capture_default_str();
  depth->add_option("--order", depth_order)->capture_default_str();
  depth->add_option("--formula", depth_formula, "s1:<k> or s4")->capture_default_str();
  depth->add_option("--t", depth_t)->capture_default_str();
  depth->add_flag("--no-timing", depth_no_timing, "omit wall-clock fields");

  // trotter
  auto* trotter = app.add_subcommand("trotter", "expand into rotation blocks");
  Input trotter_in;
  trotter_in.add(trotter);
  std::string trotter_formula = "s4", trotter_order = "baseline", trotter_cost = "unit";
  double trotter_t = 1.0;
  trotter->add_option("--formula", trotter_formula)->capture_default_str();
  trotter->add_option("--order", trotter_order)->capture_default_str();
  trotter->add_option("--cost", trotter_cost, "cost model for the reported depth")->capture_default_str();
  trotter->add_option("--t", trotter_t)->capture_default_str();

  // qaoa
  auto* qaoa = app.add_subcommand("qaoa", "optimize QAOA max-cut under the noise proxy");
  std::string qaoa_graph, qaoa_order = "saturation", qaoa_cost = "unit", qaoa_distribution;
  std::size_t qaoa_layers = 2, qaoa_max_iter = 300;
  double qaoa_noise = 0.0;
  qaoa->add_option("--graph", qaoa_graph)->required();
  qaoa->add_option("--order", qaoa_order)->capture_default_str();
  qaoa->add_option("--layers", qaoa_layers)->capture_default_str();
  qaoa->add_option("--noise-rate", qaoa_noise)->capture_default_str();
  qaoa->add_option("--max-iter", qaoa_max_iter)->capture_default_str();
  qaoa->add_option("--cost", qaoa_cost)->capture_default_str();
  qaoa->add_option("--distribution-out", qaoa_distribution, "write the best ideal cut distribution as JSON");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "cut-distribution metrics");
  std::string metrics_graph, metrics_distribution;
  double metrics_lambda = 1.0;
  metrics->add_option("--graph", metrics_graph)->required();
  metrics->add_option("--distribution", metrics_distribution, "JSON {bitstring: probability}")->required();
  metrics->add_option("--lambda", metrics_lambda, "hypervolume cut scale")->capture_default_str();

  // bench-depth
  auto* bench_depth = app.add_subcommand("bench-depth", "depth study over random instances");
  BandOptions bd_band;
  bd_band.add(bench_depth, "depth", 100);
  std::string bd_orders = "saturation,misra-gries", bd_cost = "unit", bd_formula = "s4", bd_summary;
  bool bd_no_timing = false;
  bench_depth->add_option("--orders", bd_orders)->capture_default_str();
  bench_depth->add_option("--cost", bd_cost)->capture_default_str();
  bench_depth->add_option("--formula", bd_formula)->capture_default_str();
  bench_depth->add_option("--summary", bd_summary, "per-order summary CSV path");
  bench_depth->add_flag("--no-timing", bd_no_timing, "omit wall-clock fields");

  // bench-qaoa
  auto* bench_qaoa = app.add_subcommand("bench-qaoa", "QAOA gain study over random instances");
  BandOptions bq_band;
  bq_band.add(bench_qaoa, "qaoa", 30);
  std::string bq_orders = "saturation,misra-gries", bq_cost = "unit", bq_summary;
  std::size_t bq_layers = 2, bq_max_iter = 300;
  double bq_noise = 1e-3;
  bench_qaoa->add_option("--orders", bq_orders)->capture_default_str();
  bench_qaoa->add_option("--layers", bq_layers)->capture_default_str();
  bench_qaoa->add_option("--noise-rate", bq_noise)->capture_default_str();
  bench_qaoa->add_option("--max-iter", bq_max_iter)->capture_default_str();
  bench_qaoa->add_option("--cost", bq_cost)->capture_default_str();
  bench_qaoa->add_option("--summary", bq_summary, "per-order summary CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) {
      const auto g = po::generate_instance({globals.seed, gen_vertices, gen_edges});
      emit(globals, gen_hamiltonian ? po::serialize_hamiltonian(po::maxcut_hamiltonian(g)) : po::serialize_graph(g));
    } else if (*color) {
      const auto method = po::parse_order(color_method);
      if (method == po::Order::baseline) throw po::InputError("--method must be saturation or misra-gries");
      if (method == po::Order::saturation) {
        const auto c = po::saturation_color(po::build_clique_presentation(color_in.load()));
        if (csv(globals)) {
          std::string out = "term,color\n";
          for (const auto& [t, k] : c.colors) out += std::to_string(t) + "," + std::to_string(k) + "\n";
          emit(globals, out);
        } else {
          emit(globals, po::to_json(c));
        }
      } else {
        const auto graph = color_in.graph.empty() ? po::build_interaction_graph(po::to_ising(color_in.load()))
                                                  : color_in.load_graph();
        const auto c = po::misra_gries_color(graph);
        if (!po::validate_coloring(graph, c)) throw po::InvariantViolation("Misra-Gries produced an invalid coloring");
        if (csv(globals)) {
          std::string out = "edge,color\n";
          for (const auto& [e, k] : c.colors) out += po::to_string(e) + "," + std::to_string(k) + "\n";
          emit(globals, out);
        } else {
          emit(globals, po::to_json(c));
        }
      }
    } else if (*reorder_cmd) {
      const auto layered = po::reorder(reorder_in.load(), po::parse_order(reorder_order));
      emit(globals, po::serialize_layered(layered, reorder_pauli == "dense" ? po::PauliFormat::dense
                                                                             : po::PauliFormat::sparse));
    } else if (*depth) {
      po::DepthOptions opts{po::parse_cost_model(depth_cost), po::parse_formula(depth_formula), depth_t};
      const auto d = po::depth_reduction(depth_in.load(), po::parse_order(depth_order), opts);
      if (csv(globals)) {
        std::string out = "baseline_depth,reordered_depth,ratio,colors";
        out += depth_no_timing ? "\n" : ",expand_ms,reorder_ms\n";
        out += std::to_string(d.baseline_depth) + "," + std::to_string(d.reordered_depth) + "," +
               po::format_double(d.ratio) + "," + std::to_string(d.colors);
        if (!depth_no_timing) out += "," + po::format_double(d.expand_ms) + "," + po::format_double(d.reorder_ms);
        emit(globals, out + "\n");
      } else {
        emit(globals, po::to_json(d, !depth_no_timing));
      }
    } else if (*trotter) {
      const auto layered = po::reorder(trotter_in.load(), po::parse_order(trotter_order));
      const auto seq = po::expand(layered.flatten(), po::parse_formula(trotter_formula), trotter_t);
      const auto report = po::schedule_depth(seq, po::parse_cost_model(trotter_cost));
      if (csv(globals)) {
        std::string out = "pauli,angle,start,duration\n";
        for (std::size_t i = 0; i < seq.blocks.size(); ++i) {
          out += po::to_sparse_string(seq.blocks[i].string) + "," + po::format_double(seq.blocks[i].angle) + "," +
                 std::to_string(report.start_times[i]) + "," + std::to_string(report.durations[i]) + "\n";
        }
        emit(globals, out);
      } else {
        auto j = po::to_json(seq);
        j["depth"] = report.total_depth;
        emit(globals, j);
      }
    } else if (*qaoa) {
      const auto g = po::parse_graph(read_file(qaoa_graph));
      po::OptimizerConfig cfg;
      cfg.max_iterations = qaoa_max_iter;
      cfg.seed = globals.seed;
      const auto run = po::run_qaoa(g, po::parse_order(qaoa_order), qaoa_layers,
                                    po::NoiseConfig{qaoa_noise, po::parse_cost_model(qaoa_cost)}, cfg);
      if (!qaoa_distribution.empty()) {
        const auto state = po::qaoa_state(run.best, po::maxcut_hamiltonian(g));
        std::ofstream out(qaoa_distribution, std::ios::binary);
        if (!out) throw po::InputError("cannot write '" + qaoa_distribution + "'");
        out << po::distribution_to_json(po::cut_distribution(state, g)).dump(2) << "\n";
      }
      if (csv(globals)) {
        std::string out = "iteration,ae,cumulative_max\n";
        for (std::size_t i = 0; i < run.trace.values.size(); ++i) {
          out += std::to_string(i) + "," + po::format_double(run.trace.values[i]) + "," +
                 po::format_double(run.trace.cumulative_max[i]) + "\n";
        }
        emit(globals, out);
      } else {
        emit(globals, po::to_json(run));
      }
    } else if (*metrics) {
      const auto g = po::parse_graph(read_file(metrics_graph));
      po::Json table;
      try {
        table = po::Json::parse(read_file(metrics_distribution));
      } catch (const po::Json::parse_error& e) {
        throw po::InputError(std::string("distribution JSON: ") + e.what());
      }
      const auto report = po::summarize(po::distribution_from_json(table, g), {metrics_lambda});
      if (csv(globals)) {
        emit(globals, metrics_csv(report));
      } else {
        emit(globals, po::to_json(report));
      }
    } else if (*bench_depth) {
      const auto specs = po::band_specs(bd_band.count, globals.seed, bd_band.band());
      po::DepthOptions opts{po::parse_cost_model(bd_cost), po::parse_formula(bd_formula), 1.0};
      const auto records = po::bench_depth(specs, parse_orders(bd_orders), opts, globals.workers);
      write_bench(globals, records, !bd_no_timing, bd_summary);
    } else if (*bench_qaoa) {
      const auto specs = po::band_specs(bq_band.count, globals.seed, bq_band.band());
      po::OptimizerConfig cfg;
      cfg.max_iterations = bq_max_iter;
      cfg.seed = globals.seed;
      const auto records = po::bench_qaoa(specs, parse_orders(bq_orders), bq_layers,
                                          po::NoiseConfig{bq_noise, po::parse_cost_model(bq_cost)}, cfg,
                                          globals.workers);
      write_bench(globals, records, false, bq_summary);
    }
  } catch (const po::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const po::InvariantViolation& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 0;
}
