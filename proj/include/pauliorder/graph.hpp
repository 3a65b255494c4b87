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
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/pauli.hpp"
#include "pauliorder/pauli_io.hpp"

namespace pauliorder {

/// Graph vertices are 1-based, matching qubit indices.
using Vertex = std::uint32_t;

/// Index of a term inside a Hamiltonian.
using TermIndex = std::size_t;

/// Undirected edge normalized so that u <= v; u == v is a self-loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

  bool is_loop() const { return u == v; }
  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/**
 * Simple graph on vertices 1..N with optional self-loops.
 *
 * For an Ising Hamiltonian the vertices are qubits, edges are ZZ couplings and
 * self-loops are Z fields. Edges are kept sorted; parallel edges are rejected.
 */
class InteractionGraph {
 public:
  InteractionGraph() = default;

  InteractionGraph(std::size_t n_vertices, std::vector<Edge> edges)
      : n_vertices_(n_vertices), edges_(std::move(edges)), incident_(n_vertices) {
    for (auto& e : edges_) {
      e = Edge::make(e.u, e.v);
      if (e.u == 0 || e.v > n_vertices_) {
        throw InputError("edge " + to_string(e) + " outside vertex range [1, " +
                         std::to_string(n_vertices_) + "]");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw InputError("parallel edges are not allowed");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      incident_[e.u - 1].push_back(i);
      if (!e.is_loop()) incident_[e.v - 1].push_back(i);
    }
  }

  std::size_t n_vertices() const { return n_vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t n_edges() const { return edges_.size(); }

  /// Indices into edges() of every edge touching `v`, self-loop included.
  std::span<const std::size_t> incident(Vertex v) const { return incident_.at(v - 1); }

  std::optional<std::size_t> index_of(Edge e) const {
    e = Edge::make(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool contains(Edge e) const { return index_of(e).has_value(); }

  bool loop_free() const {
    return std::none_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  /// Number of non-loop edges at `v`.
  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (auto i : incident(v)) d += edges_[i].is_loop() ? 0 : 1;
    return d;
  }

  /// Maximum non-loop degree.
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 1; v <= n_vertices_; ++v) best = std::max(best, degree(v));
    return best;
  }

  /// Connectivity over all vertices (isolated vertices make it disconnected).
  bool connected() const {
    if (n_vertices_ == 0) return true;
    std::vector<bool> seen(n_vertices_, false);
    std::vector<Vertex> stack{1};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto i : incident(x)) {
        Vertex y = edges_[i].other(x);
        if (!seen[y - 1]) {
          seen[y - 1] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n_vertices_;
  }

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// One edge per nonzero coupling, one self-loop per nonzero field.
inline InteractionGraph build_interaction_graph(const IsingHamiltonian& h) {
  std::vector<Edge> edges;
  for (const auto& [key, weight] : h.couplings()) edges.push_back(Edge::make(key.first, key.second));
  for (const auto& [q, weight] : h.fields()) edges.push_back(Edge{q, q});
  return InteractionGraph(h.n_qubits(), std::move(edges));
}

/// Unit-weight Ising Hamiltonian of a graph: J = 1 on edges, h = 1 on loops.
inline IsingHamiltonian ising_from_graph(const InteractionGraph& g) {
  std::map<IsingHamiltonian::Coupling, double> couplings;
  std::map<Qubit, double> fields;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      fields[e.u] = 1.0;
    } else {
      couplings[{e.u, e.v}] = 1.0;
    }
  }
  return IsingHamiltonian(std::max<std::size_t>(g.n_vertices(), 1), std::move(couplings),
                          std::move(fields));
}

/// Max-cut cost H_G = -sum_{(j,k) in E} Z_j Z_k, terms in edge order.
inline Hamiltonian maxcut_hamiltonian(const InteractionGraph& g) {
  std::vector<Term> terms;
  terms.reserve(g.n_edges());
  for (const auto& e : g.edges()) {
    terms.push_back({-1.0, e.is_loop() ? PauliString::single(e.u, PauliAxis::Z)
                                       : PauliString::zz(e.u, e.v)});
  }
  return Hamiltonian(std::max<std::size_t>(g.n_vertices(), 1), std::move(terms));
}

/**
 * Overlap graph of a Hamiltonian presented as the union of per-qubit cliques:
 * clique(q) lists the terms acting non-trivially on qubit q. Identity terms
 * belong to no clique.
 */
struct CliquePresentation {
  std::size_t n_terms = 0;
  std::vector<std::vector<TermIndex>> cliques;   // cliques[q - 1], ascending
  std::vector<std::vector<Qubit>> term_qubits;  // support of each term

  std::span<const TermIndex> clique(Qubit q) const { return cliques.at(q - 1); }
  bool is_identity(TermIndex t) const { return term_qubits[t].empty(); }

  bool adjacent(TermIndex a, TermIndex b) const {
    if (a == b) return false;
    const auto& qa = term_qubits[a];
    const auto& qb = term_qubits[b];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < qa.size() && j < qb.size()) {
      if (qa[i] == qb[j]) return true;
      qa[i] < qb[j] ? ++i : ++j;
    }
    return false;
  }
};

inline CliquePresentation build_clique_presentation(const Hamiltonian& h) {
  CliquePresentation g;
  g.n_terms = h.size();
  g.cliques.resize(h.n_qubits());
  g.term_qubits.resize(h.size());
  for (TermIndex t = 0; t < h.size(); ++t) {
    for (const auto& [q, axis] : h[t].string.factors()) {
      g.cliques[q - 1].push_back(t);
      g.term_qubits[t].push_back(q);
    }
  }
  return g;
}

/// Graph text format: `j k` per line (j == k is a self-loop), `#` comments,
/// optional `# vertices N` directive.
inline InteractionGraph parse_graph(std::string_view text,
                                    std::optional<std::size_t> n_vertices = std::nullopt) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t extent = 0;
  std::size_t number = 0;
  for (auto raw : detail::split_lines(text)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) {
      if (auto d = detail::directive(raw.substr(hash + 1), "vertices")) declared = d;
      raw = raw.substr(0, hash);
    }
    auto tokens = detail::split_ws(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw InputError("line " + std::to_string(number) + ": expected 'j k'");
    }
    auto j = detail::parse_number<std::size_t>(tokens[0], "vertex index");
    auto k = detail::parse_number<std::size_t>(tokens[1], "vertex index");
    if (j == 0 || k == 0) {
      throw InputError("line " + std::to_string(number) + ": vertices are 1-based");
    }
    extent = std::max({extent, j, k});
    edges.push_back(Edge::make(static_cast<Vertex>(j), static_cast<Vertex>(k)));
  }
  std::size_t n = n_vertices.value_or(declared.value_or(extent));
  return InteractionGraph(n, std::move(edges));
}

inline std::string serialize_graph(const InteractionGraph& g) {
  std::string out = "# vertices " + std::to_string(g.n_vertices()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace pauliorder
