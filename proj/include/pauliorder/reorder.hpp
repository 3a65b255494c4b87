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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pauliorder/coloring.hpp"
#include "pauliorder/errors.hpp"
#include "pauliorder/graph.hpp"
#include "pauliorder/pauli.hpp"
#include "pauliorder/pauli_io.hpp"

namespace pauliorder {

/// Terms sharing one color; pairwise disjoint supports.
struct Layer {
  Color color = 0;
  std::vector<Term> terms;
};

/// Color-grouped term ordering. Layers ascend by color, terms inside a layer
/// keep their source order. Identity terms are folded into
/// `identity_coefficient` since they only add a global phase.
struct LayeredHamiltonian {
  std::size_t n_qubits = 0;
  std::vector<Layer> layers;
  double identity_coefficient = 0.0;

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.terms.size();
    return n;
  }

  Hamiltonian flatten() const {
    std::vector<Term> terms;
    for (const auto& layer : layers) terms.insert(terms.end(), layer.terms.begin(), layer.terms.end());
    if (identity_coefficient != 0.0) terms.push_back({identity_coefficient, PauliString{}});
    return Hamiltonian(n_qubits, std::move(terms));
  }
};

namespace detail {

inline LayeredHamiltonian group_layers(std::size_t n_qubits,
                                       const std::map<Color, std::vector<Term>>& grouped,
                                       double identity) {
  LayeredHamiltonian out{n_qubits, {}, identity};
  for (const auto& [color, terms] : grouped) out.layers.push_back({color, terms});
  return out;
}

inline double identity_part(const Hamiltonian& h) {
  double sum = 0.0;
  for (const auto& t : h.terms()) {
    if (t.string.is_identity()) sum += t.coefficient;
  }
  return sum;
}

}  // namespace detail

inline LayeredHamiltonian reorder_by_vertex_coloring(const Hamiltonian& h, const VertexColoring& c) {
  const auto g = build_clique_presentation(h);
  for (TermIndex t = 0; t < h.size(); ++t) {
    if (!h[t].string.is_identity() && !c.colors.contains(t)) {
      throw InputError("term " + std::to_string(t) + " has no color");
    }
  }
  if (!validate_coloring(g, c)) throw InputError("vertex coloring is not valid for this Hamiltonian");
  std::map<Color, std::vector<Term>> grouped;
  for (TermIndex t = 0; t < h.size(); ++t) {
    if (!h[t].string.is_identity()) grouped[c.colors.at(t)].push_back(h[t]);
  }
  return detail::group_layers(h.n_qubits(), grouped, detail::identity_part(h));
}

/// Edge (j, k) becomes -J_jk Z_j Z_k and loop (j, j) becomes -h_j Z_j, so the
/// layered sum equals the input operator.
inline LayeredHamiltonian reorder_by_edge_coloring(const IsingHamiltonian& h, const EdgeColoring& c) {
  const auto g = build_interaction_graph(h);
  for (const auto& e : g.edges()) {
    if (!c.of(e)) throw InputError("edge " + to_string(e) + " has no color");
  }
  if (!validate_coloring(g, c)) throw InputError("edge coloring is not valid for this Hamiltonian");
  std::map<Color, std::vector<Term>> grouped;
  for (const auto& e : g.edges()) {
    Term t = e.is_loop() ? Term{-h.fields().at(e.u), PauliString::single(e.u, PauliAxis::Z)}
                         : Term{-h.couplings().at({e.u, e.v}), PauliString::zz(e.u, e.v)};
    grouped[*c.of(e)].push_back(std::move(t));
  }
  return detail::group_layers(h.n_qubits(), grouped, h.offset());
}

/// Term orderings compared throughout: source order, saturation coloring of
/// the overlap graph, Misra-Gries coloring of the interaction graph.
enum class Order { baseline, saturation, misra_gries };

inline std::string_view to_string(Order order) {
  switch (order) {
    case Order::baseline:
      return "baseline";
    case Order::saturation:
      return "saturation";
    case Order::misra_gries:
      return "misra-gries";
  }
  return "?";
}

inline Order parse_order(std::string_view text) {
  if (text == "baseline") return Order::baseline;
  if (text == "saturation") return Order::saturation;
  if (text == "misra-gries") return Order::misra_gries;
  throw InputError("unknown order '" + std::string(text) + "'");
}

/// Baseline yields one singleton layer per term (the trivial coloring).
/// Misra-Gries requires an Ising-shaped Hamiltonian.
inline LayeredHamiltonian reorder(const Hamiltonian& h, Order order) {
  switch (order) {
    case Order::baseline: {
      LayeredHamiltonian out{h.n_qubits(), {}, detail::identity_part(h)};
      Color next = 0;
      for (const auto& t : h.terms()) {
        if (!t.string.is_identity()) out.layers.push_back({next++, {t}});
      }
      return out;
    }
    case Order::saturation:
      return reorder_by_vertex_coloring(h, saturation_color(build_clique_presentation(h)));
    case Order::misra_gries: {
      const auto ising = to_ising(h);
      return reorder_by_edge_coloring(ising, misra_gries_color(build_interaction_graph(ising)));
    }
  }
  throw InvariantViolation("unhandled order");
}

/// Hamiltonian text format with a `# layer <c>` line before each layer.
inline std::string serialize_layered(const LayeredHamiltonian& h,
                                     PauliFormat format = PauliFormat::sparse) {
  std::string out = "# qubits " + std::to_string(h.n_qubits) + "\n";
  if (h.identity_coefficient != 0.0) out += format_double(h.identity_coefficient) + " I\n";
  for (const auto& layer : h.layers) {
    out += "# layer " + std::to_string(layer.color) + "\n";
    for (const auto& t : layer.terms) {
      out += format_double(t.coefficient) + ' ' +
             (format == PauliFormat::dense ? to_dense_string(t.string, h.n_qubits)
                                           : to_sparse_string(t.string)) +
             '\n';
    }
  }
  return out;
}

}  // namespace pauliorder
