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
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/graph.hpp"

namespace pauliorder {

/// Colors are dense non-negative integers starting at 0.
using Color = std::uint32_t;

/// Term index -> color. Identity terms are never colored.
struct VertexColoring {
  std::map<TermIndex, Color> colors;

  std::optional<Color> of(TermIndex t) const {
    auto it = colors.find(t);
    if (it == colors.end()) return std::nullopt;
    return it->second;
  }
};

/// Edge -> color; may be partial while an algorithm runs.
struct EdgeColoring {
  std::map<Edge, Color> colors;

  std::optional<Color> of(Edge e) const {
    auto it = colors.find(e);
    if (it == colors.end()) return std::nullopt;
    return it->second;
  }
};

template <typename Coloring>
std::size_t count_colors(const Coloring& coloring) {
  std::set<Color> used;
  for (const auto& [key, c] : coloring.colors) used.insert(c);
  return used.size();
}

// ---------------------------------------------------------------------------
// Saturation coloring of the overlap graph
// ---------------------------------------------------------------------------

enum class SaturationEvent { vertex_colored, component_done };

struct NoObserver {
  template <typename... Args>
  void operator()(Args&&...) const {}
};

/**
 * Greedy saturation coloring over the clique presentation.
 *
 * Components are grown one at a time: an uncolored seed (lowest index) gets
 * color 0, then the fringe vertex with the most distinct neighboring colors
 * (lowest index on ties) takes the smallest color absent from its
 * neighborhood. `observe(event, partial)` sees the partial coloring after
 * every assignment and at the end of each component.
 */
template <typename Observer = NoObserver>
VertexColoring saturation_color(const CliquePresentation& g, Observer&& observe = {}) {
  std::vector<std::optional<Color>> color(g.n_terms);
  const std::span<const std::optional<Color>> view(color);

  for (TermIndex seed = 0; seed < g.n_terms; ++seed) {
    if (g.is_identity(seed) || color[seed]) continue;
    color[seed] = 0;
    observe(SaturationEvent::vertex_colored, view);

    // Fringe: uncolored vertex -> set of colors among its neighbors.
    std::map<TermIndex, std::set<Color>> fringe;
    for (Qubit q : g.term_qubits[seed]) {
      for (TermIndex w : g.clique(q)) {
        if (w != seed) fringe[w] = {0};
      }
    }

    while (!fringe.empty()) {
      auto pick = fringe.begin();
      for (auto it = std::next(fringe.begin()); it != fringe.end(); ++it) {
        if (it->second.size() > pick->second.size()) pick = it;
      }
      const TermIndex v = pick->first;
      Color c = 0;
      for (Color used : pick->second) {
        if (used != c) break;
        ++c;
      }
      color[v] = c;
      fringe.erase(pick);
      for (Qubit q : g.term_qubits[v]) {
        for (TermIndex w : g.clique(q)) {
          if (w != v && !color[w]) fringe[w].insert(c);
        }
      }
      observe(SaturationEvent::vertex_colored, view);
    }
    observe(SaturationEvent::component_done, view);
  }

  VertexColoring out;
  for (TermIndex t = 0; t < g.n_terms; ++t) {
    if (color[t]) out.colors.emplace(t, *color[t]);
  }
  return out;
}

/// Proper on the overlap graph and total on non-identity terms.
inline bool validate_coloring(const CliquePresentation& g, const VertexColoring& c) {
  for (const auto& [t, color] : c.colors) {
    if (t >= g.n_terms || g.is_identity(t)) return false;
  }
  for (TermIndex t = 0; t < g.n_terms; ++t) {
    if (!g.is_identity(t) && !c.colors.contains(t)) return false;
  }
  for (const auto& clique : g.cliques) {
    std::set<Color> seen;
    for (TermIndex t : clique) {
      if (!seen.insert(c.colors.at(t)).second) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Edge coloring primitives
// ---------------------------------------------------------------------------

/// True iff no edge touching `v` (self-loop included) has color `c`.
inline bool is_free_at(const InteractionGraph& g, const EdgeColoring& col, Vertex v, Color c) {
  for (auto i : g.incident(v)) {
    auto existing = col.of(g.edges()[i]);
    if (existing && *existing == c) return false;
  }
  return true;
}

inline Color smallest_free_at(const InteractionGraph& g, const EdgeColoring& col, Vertex v) {
  std::set<Color> used;
  for (auto i : g.incident(v)) {
    if (auto c = col.of(g.edges()[i])) used.insert(*c);
  }
  Color c = 0;
  for (Color u : used) {
    if (u != c) break;
    ++c;
  }
  return c;
}

/// The non-loop edge at `v` colored `c`, if any.
inline std::optional<Edge> colored_edge_at(const InteractionGraph& g, const EdgeColoring& col,
                                           Vertex v, Color c) {
  for (auto i : g.incident(v)) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) continue;
    auto existing = col.of(e);
    if (existing && *existing == c) return e;
  }
  return std::nullopt;
}

/// Proper (no two edges sharing an endpoint share a color); may be partial.
inline bool is_valid_partial(const InteractionGraph& g, const EdgeColoring& col) {
  for (const auto& [e, c] : col.colors) {
    if (!g.contains(e)) return false;
  }
  for (Vertex v = 1; v <= g.n_vertices(); ++v) {
    std::set<Color> seen;
    for (auto i : g.incident(v)) {
      if (auto c = col.of(g.edges()[i])) {
        if (!seen.insert(*c).second) return false;
      }
    }
  }
  return true;
}

/// Proper and total on every edge, self-loops included.
inline bool validate_coloring(const InteractionGraph& g, const EdgeColoring& col) {
  return col.colors.size() == g.n_edges() && is_valid_partial(g, col);
}

/**
 * Fan (e_1; e_2, ..., e_k) around `center` with e_j = (center, w_j).
 *
 * Valid when the w_j are distinct, e_1 is uncolored, the rest are colored,
 * and color(e_{j+1}) is free on w_j.
 */
struct Fan {
  Vertex center = 0;
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  Vertex leaf(std::size_t j) const { return edges[j].other(center); }

  Fan prefix(std::size_t length) const {
    return Fan{center, std::vector<Edge>(edges.begin(), edges.begin() + length)};
  }
};

inline bool is_valid_fan(const InteractionGraph& g, const EdgeColoring& col, const Fan& fan) {
  if (fan.edges.empty()) return false;
  std::set<Vertex> leaves;
  for (std::size_t j = 0; j < fan.size(); ++j) {
    const Edge& e = fan.edges[j];
    if (e.is_loop() || !e.touches(fan.center) || !g.contains(e)) return false;
    if (!leaves.insert(fan.leaf(j)).second) return false;
    if (col.of(e).has_value() != (j > 0)) return false;
  }
  for (std::size_t j = 0; j + 1 < fan.size(); ++j) {
    if (!is_free_at(g, col, fan.leaf(j), *col.of(fan.edges[j + 1]))) return false;
  }
  return true;
}

/// Grows (e1;) greedily, always appending the candidate with the lowest
/// leaf index, until no colored edge at `center` extends it.
inline Fan find_maximal_fan(const InteractionGraph& g, const EdgeColoring& col, Edge e1,
                            Vertex center) {
  e1 = Edge::make(e1.u, e1.v);
  if (e1.is_loop() || !e1.touches(center) || !g.contains(e1) || col.of(e1)) {
    throw InputError("a fan must start at an uncolored non-loop edge of its center");
  }
  Fan fan{center, {e1}};
  std::set<Vertex> leaves{e1.other(center)};
  while (true) {
    const Vertex last = fan.leaf(fan.size() - 1);
    std::optional<Edge> best;
    for (auto i : g.incident(center)) {
      const Edge& e = g.edges()[i];
      if (e.is_loop()) continue;
      auto c = col.of(e);
      if (!c || leaves.contains(e.other(center))) continue;
      if (!is_free_at(g, col, last, *c)) continue;
      if (!best || e.other(center) < best->other(center)) best = e;
    }
    if (!best) return fan;
    fan.edges.push_back(*best);
    leaves.insert(best->other(center));
  }
}

/// Maximal path of non-loop edges colored c or d, ordered end to end.
struct CdPath {
  Color c = 0;
  Color d = 0;
  std::vector<Edge> edges;

  bool empty() const { return edges.empty(); }
};

/// The c/d-path through `v`; empty when no edge at `v` has color c or d.
inline CdPath find_cd_path(const InteractionGraph& g, const EdgeColoring& col, Color c, Color d,
                           Vertex v) {
  CdPath path{c, d, {}};
  if (c == d) return path;
  std::set<Edge> used;
  auto walk = [&](Color first) {
    std::vector<Edge> out;
    Vertex x = v;
    Color want = first;
    while (auto e = colored_edge_at(g, col, x, want)) {
      if (!used.insert(*e).second) break;
      out.push_back(*e);
      x = e->other(x);
      want = want == c ? d : c;
    }
    return out;
  };
  auto forward = walk(c);
  auto backward = walk(d);
  path.edges.assign(forward.rbegin(), forward.rend());
  path.edges.insert(path.edges.end(), backward.begin(), backward.end());
  return path;
}

/// Swaps colors c and d on the path edges. Every path edge must carry c or d.
inline EdgeColoring invert_cd_path(EdgeColoring col, const CdPath& path) {
  for (const auto& e : path.edges) {
    auto it = col.colors.find(e);
    if (it == col.colors.end() || (it->second != path.c && it->second != path.d)) {
      throw InvariantViolation("c/d-path edge " + to_string(e) + " is not colored c or d");
    }
    it->second = it->second == path.c ? path.d : path.c;
  }
  return col;
}

/// color(e_j) <- color(e_{j+1}) for j < k, then e_k becomes uncolored.
inline EdgeColoring rotate_fan(EdgeColoring col, const Fan& fan) {
  for (std::size_t j = 0; j + 1 < fan.size(); ++j) {
    col.colors[fan.edges[j]] = col.colors.at(fan.edges[j + 1]);
  }
  if (fan.size() > 1) col.colors.erase(fan.edges.back());
  return col;
}

enum class MisraGriesStep { inverted, rotated, colored, loop_colored };

/**
 * Misra-Gries edge coloring, extended to self-loops.
 *
 * Non-loop edges are processed in lexicographic order, each with its lower
 * endpoint as fan center. Self-loops are colored last with the smallest color
 * absent at their vertex. At most max_degree() + 1 colors on loop-free
 * graphs. `observe(step, coloring)` runs after every recoloring.
 */
template <typename Observer = NoObserver>
EdgeColoring misra_gries_color(const InteractionGraph& g, Observer&& observe = {}) {
  EdgeColoring col;
  for (const Edge& e1 : g.edges()) {
    if (e1.is_loop()) continue;
    const Vertex v = e1.u;
    Fan fan = find_maximal_fan(g, col, e1, v);
    const Color c = smallest_free_at(g, col, v);
    // d free on w_1 keeps e_1 colorable unless the path ends at w_1; then use
    // the last leaf, which always leaves a valid prefix.
    Color d = smallest_free_at(g, col, fan.leaf(0));
    CdPath path = find_cd_path(g, col, c, d, v);
    const bool reaches_w1 = std::any_of(path.edges.begin(), path.edges.end(),
                                        [&](const Edge& e) { return e.touches(fan.leaf(0)); });
    if (reaches_w1) {
      d = smallest_free_at(g, col, fan.leaf(fan.size() - 1));
      path = find_cd_path(g, col, c, d, v);
    }
    if (!path.empty()) {
      col = invert_cd_path(std::move(col), path);
      observe(MisraGriesStep::inverted, std::as_const(col));
    }

    std::size_t k = fan.size();
    while (k > 0 && !(is_free_at(g, col, fan.leaf(k - 1), d) && is_valid_fan(g, col, fan.prefix(k)))) {
      --k;
    }
    if (k == 0 || !is_free_at(g, col, v, d)) {
      throw InvariantViolation("no fan prefix admits color " + std::to_string(d) + " at edge " +
                               to_string(e1));
    }
    fan = fan.prefix(k);
    if (k > 1) {
      col = rotate_fan(std::move(col), fan);
      observe(MisraGriesStep::rotated, std::as_const(col));
    }
    col.colors[fan.edges.back()] = d;
    observe(MisraGriesStep::colored, std::as_const(col));
  }

  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) continue;
    col.colors[e] = smallest_free_at(g, col, e.u);
    observe(MisraGriesStep::loop_colored, std::as_const(col));
  }
  return col;
}

}  // namespace pauliorder
