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

#include <map>
#include <string>

#include "json.hpp"
#include "pauliorder/coloring.hpp"
#include "pauliorder/metrics.hpp"
#include "pauliorder/pauli_io.hpp"
#include "pauliorder/qaoa.hpp"
#include "pauliorder/simulator.hpp"
#include "pauliorder/trotter.hpp"

// JSON renderings of the CLI outputs. Objects use insertion order so output
// is byte-stable.

namespace pauliorder {

using Json = nlohmann::ordered_json;

/// {"coloring": {"<term index>": color, ...}, "colors_used": n}
inline Json to_json(const VertexColoring& c) {
  Json map = Json::object();
  for (const auto& [t, color] : c.colors) map[std::to_string(t)] = color;
  return Json{{"coloring", map}, {"colors_used", count_colors(c)}};
}

/// {"coloring": {"j-k": color, ...}, "colors_used": n}
inline Json to_json(const EdgeColoring& c) {
  Json map = Json::object();
  for (const auto& [e, color] : c.colors) map[to_string(e)] = color;
  return Json{{"coloring", map}, {"colors_used", count_colors(c)}};
}

inline Json to_json(const GateSequence& seq) {
  Json blocks = Json::array();
  for (const auto& b : seq.blocks) blocks.push_back({{"pauli", to_sparse_string(b.string)}, {"angle", b.angle}});
  return Json{{"n_qubits", seq.n_qubits}, {"blocks", blocks}};
}

inline Json to_json(const DepthComparison& d, bool include_timing = true) {
  Json j{{"baseline_depth", d.baseline_depth},
         {"reordered_depth", d.reordered_depth},
         {"ratio", d.ratio},
         {"colors", d.colors}};
  if (include_timing) {
    j["expand_ms"] = d.expand_ms;
    j["reorder_ms"] = d.reorder_ms;
  }
  return j;
}

inline Json to_json(const MetricsReport& m) {
  return Json{{"max_cut", m.max_cut},         {"prob_max", m.prob_max},
              {"avg_cut", m.avg_cut},         {"pareto_size", m.pareto_size},
              {"avg_cut_pareto", m.avg_cut_pareto}, {"hypervolume", m.hypervolume}};
}

/// {"<bitstring>": probability}, vertex 1 first; zero-probability outcomes
/// are omitted. Tiny nonzero ones stay so the table still sums to 1.
inline Json distribution_to_json(const CutDistribution& d) {
  Json j = Json::object();
  for (const auto& o : d.outcomes()) {
    if (o.probability > 0.0) j[bitstring(o.bits, d.n_vertices())] = o.probability;
  }
  return j;
}

/// Missing bitstrings have probability zero.
inline CutDistribution distribution_from_json(const Json& j, const InteractionGraph& g) {
  if (!j.is_object()) throw InputError("distribution JSON must be an object");
  std::map<std::string, double> table;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw InputError("probability for '" + key + "' is not a number");
    table[key] = value.get<double>();
  }
  return CutDistribution::from_probabilities(g, table);
}

inline Json to_json(const QaoaRun& run) {
  return Json{{"iterations", run.trace.values},
              {"cumulative_max", run.trace.cumulative_max},
              {"best_ae", run.best_ae()},
              {"best_betas", run.best.betas},
              {"best_gammas", run.best.gammas},
              {"depth", run.depth}};
}

}  // namespace pauliorder
