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
#include <chrono>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/pauli.hpp"
#include "pauliorder/pauli_io.hpp"
#include "pauliorder/reorder.hpp"

namespace pauliorder {

/// exp(-i * angle * string).
struct RotationBlock {
  PauliString string;
  double angle = 0.0;
};

/// Blocks in application order: blocks[0] acts first.
struct GateSequence {
  std::size_t n_qubits = 0;
  std::vector<RotationBlock> blocks;
};

/// s2 = 1 / (4 - 4^(1/3)), the fourth-order Suzuki weight.
inline double suzuki4_weight() { return 1.0 / (4.0 - std::cbrt(4.0)); }

namespace detail {

inline void append_sweep(std::vector<RotationBlock>& out, std::span<const Term> terms, double scale,
                         bool reversed) {
  auto emit = [&](const Term& t) {
    if (!t.string.is_identity()) out.push_back({t.string, scale * t.coefficient});
  };
  if (reversed) {
    std::for_each(terms.rbegin(), terms.rend(), emit);
  } else {
    std::for_each(terms.begin(), terms.end(), emit);
  }
}

inline void append_s2(std::vector<RotationBlock>& out, std::span<const Term> terms, double x) {
  append_sweep(out, terms, x / 2.0, false);
  append_sweep(out, terms, x / 2.0, true);
}

}  // namespace detail

/// First-order product formula: k sweeps over the terms with step t / k.
inline GateSequence suzuki1(const Hamiltonian& h, double t, std::size_t k) {
  if (k == 0) throw InputError("suzuki1 needs at least one step");
  GateSequence seq{h.n_qubits(), {}};
  seq.blocks.reserve(k * h.size());
  for (std::size_t step = 0; step < k; ++step) {
    detail::append_sweep(seq.blocks, h.terms(), t / static_cast<double>(k), false);
  }
  return seq;
}

inline GateSequence suzuki1(const LayeredHamiltonian& h, double t, std::size_t k) {
  return suzuki1(h.flatten(), t, k);
}

/// Symmetric second-order sweep: forward with x/2, then reversed with x/2.
inline GateSequence s2_sweep(const Hamiltonian& h, double x) {
  GateSequence seq{h.n_qubits(), {}};
  detail::append_s2(seq.blocks, h.terms(), x);
  return seq;
}

inline GateSequence s2_sweep(const LayeredHamiltonian& h, double x) { return s2_sweep(h.flatten(), x); }

/// S2(s2 t)^2 S2((1 - 4 s2) t) S2(s2 t)^2 with a single timestep.
inline GateSequence suzuki4_single_timestep(const Hamiltonian& h, double t) {
  const double s2 = suzuki4_weight();
  GateSequence seq{h.n_qubits(), {}};
  seq.blocks.reserve(10 * h.size());
  for (double weight : {s2, s2, 1.0 - 4.0 * s2, s2, s2}) {
    detail::append_s2(seq.blocks, h.terms(), weight * t);
  }
  return seq;
}

inline GateSequence suzuki4_single_timestep(const LayeredHamiltonian& h, double t) {
  return suzuki4_single_timestep(h.flatten(), t);
}

/// Product formula choice: `s1:<k>` or `s4`.
struct Formula {
  enum class Kind { first_order, fourth_order };
  Kind kind = Kind::fourth_order;
  std::size_t steps = 1;
};

inline Formula parse_formula(std::string_view text) {
  if (text == "s4") return Formula{Formula::Kind::fourth_order, 1};
  if (text.starts_with("s1:")) {
    auto k = detail::parse_number<std::size_t>(text.substr(3), "step count");
    if (k == 0) throw InputError("s1 needs at least one step");
    return Formula{Formula::Kind::first_order, k};
  }
  throw InputError("unknown formula '" + std::string(text) + "' (expected s1:<k> or s4)");
}

inline std::string to_string(const Formula& f) {
  return f.kind == Formula::Kind::fourth_order ? "s4" : "s1:" + std::to_string(f.steps);
}

inline GateSequence expand(const Hamiltonian& h, const Formula& f, double t) {
  return f.kind == Formula::Kind::fourth_order ? suzuki4_single_timestep(h, t)
                                               : suzuki1(h, t, f.steps);
}

// ---------------------------------------------------------------------------
// Depth scheduling
// ---------------------------------------------------------------------------

/// unit: every block takes one step. ladder: CNOT ladder down and up the
/// support, one rotation, plus a basis-change layer on each side when any
/// factor is X or Y.
enum class CostModel { unit, ladder };

inline CostModel parse_cost_model(std::string_view text) {
  if (text == "unit") return CostModel::unit;
  if (text == "ladder") return CostModel::ladder;
  throw InputError("unknown cost model '" + std::string(text) + "'");
}

inline std::string_view to_string(CostModel cost) {
  return cost == CostModel::unit ? "unit" : "ladder";
}

inline std::size_t block_duration(const RotationBlock& block, CostModel cost) {
  if (cost == CostModel::unit) return 1;
  const std::size_t w = block.string.weight();
  return 2 * (w - 1) + 1 + (block.string.has_xy() ? 2 : 0);
}

struct DepthReport {
  std::size_t total_depth = 0;
  std::vector<std::size_t> start_times;  // per block
  std::vector<std::size_t> durations;    // per block
  std::vector<std::size_t> frontier;     // per qubit, frontier[q - 1]
};

/// ASAP list scheduling that never reorders blocks: each block starts once
/// every qubit it touches is free, so disjoint blocks share time steps.
inline DepthReport schedule_depth(const GateSequence& seq, CostModel cost) {
  DepthReport report;
  report.frontier.assign(seq.n_qubits, 0);
  report.start_times.reserve(seq.blocks.size());
  report.durations.reserve(seq.blocks.size());
  for (const auto& block : seq.blocks) {
    if (block.string.is_identity()) throw InputError("identity blocks cannot be scheduled");
    if (block.string.max_qubit() > seq.n_qubits) throw InputError("block exceeds qubit count");
    std::size_t start = 0;
    for (const auto& [q, axis] : block.string.factors()) start = std::max(start, report.frontier[q - 1]);
    const std::size_t duration = block_duration(block, cost);
    for (const auto& [q, axis] : block.string.factors()) report.frontier[q - 1] = start + duration;
    report.start_times.push_back(start);
    report.durations.push_back(duration);
    report.total_depth = std::max(report.total_depth, start + duration);
  }
  return report;
}

struct DepthOptions {
  CostModel cost = CostModel::unit;
  Formula formula{};
  double t = 1.0;
};

struct DepthComparison {
  std::size_t baseline_depth = 0;
  std::size_t reordered_depth = 0;
  double ratio = 1.0;
  std::size_t colors = 0;
  double expand_ms = 0.0;   // expansion of the source order only
  double reorder_ms = 0.0;  // coloring + reordering + expansion
};

/// Schedules the source order and the `order` reordering of `h` and compares
/// their depths. `colors` is the layer count of the reordering.
inline DepthComparison depth_reduction(const Hamiltonian& h, Order order, const DepthOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  DepthComparison out;
  auto start = clock::now();
  const GateSequence baseline = expand(h, opts.formula, opts.t);
  out.expand_ms = ms_since(start);

  start = clock::now();
  const LayeredHamiltonian layered = reorder(h, order);
  const GateSequence reordered = expand(layered.flatten(), opts.formula, opts.t);
  out.reorder_ms = ms_since(start);

  out.baseline_depth = schedule_depth(baseline, opts.cost).total_depth;
  out.reordered_depth = schedule_depth(reordered, opts.cost).total_depth;
  out.colors = layered.layers.size();
  out.ratio = out.baseline_depth == 0 ? 1.0
                                      : static_cast<double>(out.reordered_depth) /
                                            static_cast<double>(out.baseline_depth);
  return out;
}

}  // namespace pauliorder
