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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/graph.hpp"

namespace pauliorder {

/// Outcomes at or below this probability are outside the support.
inline constexpr double kSupportThreshold = 1e-12;

/// Bit j - 1 of the basis index is the measured value of vertex j.
inline std::size_t cut_value(const InteractionGraph& g, std::uint64_t bits) {
  std::size_t cut = 0;
  for (const auto& e : g.edges()) {
    cut += ((bits >> (e.u - 1)) & 1U) != ((bits >> (e.v - 1)) & 1U) ? 1 : 0;
  }
  return cut;
}

/// Renders x_1 x_2 ... x_n, vertex 1 first.
inline std::string bitstring(std::uint64_t bits, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t j = 0; j < n; ++j) {
    if ((bits >> j) & 1U) out[j] = '1';
  }
  return out;
}

inline std::uint64_t parse_bitstring(std::string_view text, std::size_t n) {
  if (text.size() != n) throw InputError("bitstring '" + std::string(text) + "' has the wrong length");
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (text[j] == '1') {
      bits |= std::uint64_t{1} << j;
    } else if (text[j] != '0') {
      throw InputError("bitstring '" + std::string(text) + "' has a non-binary character");
    }
  }
  return bits;
}

struct CutOutcome {
  std::uint64_t bits = 0;
  double probability = 0.0;
  std::size_t cut = 0;
};

/// Probability of each measured bitstring together with its cut value.
class CutDistribution {
 public:
  CutDistribution(std::size_t n_vertices, std::size_t n_edges, std::vector<CutOutcome> outcomes)
      : n_vertices_(n_vertices), n_edges_(n_edges), outcomes_(std::move(outcomes)) {
    double total = 0.0;
    for (const auto& o : outcomes_) {
      if (!(o.probability >= 0.0)) throw InputError("probabilities must be non-negative");
      if (o.cut > n_edges_) throw InputError("cut value exceeds the edge count");
      total += o.probability;
    }
    if (std::abs(total - 1.0) > 1e-10) {
      throw InputError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
  }

  /// Attaches cut values from `g` to a bitstring -> probability table.
  static CutDistribution from_probabilities(const InteractionGraph& g,
                                            const std::map<std::string, double>& table) {
    if (!g.loop_free()) throw InputError("cut distributions need a loop-free graph");
    std::vector<CutOutcome> outcomes;
    outcomes.reserve(table.size());
    for (const auto& [text, p] : table) {
      auto bits = parse_bitstring(text, g.n_vertices());
      outcomes.push_back({bits, p, cut_value(g, bits)});
    }
    return CutDistribution(g.n_vertices(), g.n_edges(), std::move(outcomes));
  }

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_edges() const { return n_edges_; }
  const std::vector<CutOutcome>& outcomes() const { return outcomes_; }

  std::vector<CutOutcome> support() const {
    std::vector<CutOutcome> out;
    for (const auto& o : outcomes_) {
      if (o.probability > kSupportThreshold) out.push_back(o);
    }
    return out;
  }

 private:
  std::size_t n_vertices_;
  std::size_t n_edges_;
  std::vector<CutOutcome> outcomes_;
};

inline std::size_t max_cut_value(const CutDistribution& d) {
  auto support = d.support();
  if (support.empty()) throw InputError("distribution has empty support");
  std::size_t best = 0;
  for (const auto& o : support) best = std::max(best, o.cut);
  return best;
}

/// Probability of sampling a cut that attains max_cut_value.
inline double prob_of_max(const CutDistribution& d) {
  const std::size_t best = max_cut_value(d);
  double p = 0.0;
  for (const auto& o : d.outcomes()) {
    if (o.cut == best) p += o.probability;
  }
  return p;
}

inline double avg_cut_value(const CutDistribution& d) {
  double sum = 0.0;
  for (const auto& o : d.outcomes()) sum += o.probability * static_cast<double>(o.cut);
  return sum;
}

/**
 * Support outcomes not strictly dominated in both probability and cut value.
 *
 * Sweeps outcomes by descending probability; an outcome is dominated iff some
 * strictly more probable outcome has a strictly larger cut. Result is sorted
 * by bitstring.
 */
inline std::vector<CutOutcome> pareto_set(const CutDistribution& d) {
  auto points = d.support();
  std::sort(points.begin(), points.end(), [](const CutOutcome& a, const CutOutcome& b) {
    return a.probability > b.probability;
  });
  std::vector<CutOutcome> front;
  bool have_higher = false;
  std::size_t best_higher = 0;
  std::size_t i = 0;
  while (i < points.size()) {
    std::size_t j = i;
    std::size_t group_best = 0;
    while (j < points.size() && points[j].probability == points[i].probability) {
      if (!have_higher || points[j].cut >= best_higher) front.push_back(points[j]);
      group_best = std::max(group_best, points[j].cut);
      ++j;
    }
    best_higher = have_higher ? std::max(best_higher, group_best) : group_best;
    have_higher = true;
    i = j;
  }
  std::sort(front.begin(), front.end(),
            [](const CutOutcome& a, const CutOutcome& b) { return a.bits < b.bits; });
  return front;
}

/// Expected cut conditioned on the outcome being Pareto-optimal.
inline double avg_cut_pareto(const CutDistribution& d) {
  const auto front = pareto_set(d);
  if (front.empty()) throw InputError("distribution has empty support");
  double mass = 0.0;
  double weighted = 0.0;
  for (const auto& o : front) {
    mass += o.probability;
    weighted += o.probability * static_cast<double>(o.cut);
  }
  return weighted / mass;
}

struct HypervolumeConfig {
  double lambda = 1.0;
};

/// Area of the union of rectangles [0, P(c)] x [0, lambda * cut(c)] over the
/// support, accumulated as a staircase in order of descending probability.
inline double hypervolume(const CutDistribution& d, const HypervolumeConfig& cfg = {}) {
  if (!(cfg.lambda > 0.0)) throw InputError("hypervolume lambda must be positive");
  auto points = d.support();
  std::sort(points.begin(), points.end(), [](const CutOutcome& a, const CutOutcome& b) {
    return a.probability > b.probability || (a.probability == b.probability && a.cut > b.cut);
  });
  double area = 0.0;
  double height = 0.0;
  for (const auto& o : points) {
    const double y = cfg.lambda * static_cast<double>(o.cut);
    if (y > height) {
      area += o.probability * (y - height);
      height = y;
    }
  }
  return area;
}

struct MetricsReport {
  std::size_t max_cut = 0;
  double prob_max = 0.0;
  double avg_cut = 0.0;
  std::size_t pareto_size = 0;
  double avg_cut_pareto = 0.0;
  double hypervolume = 0.0;
};

inline MetricsReport summarize(const CutDistribution& d, const HypervolumeConfig& cfg = {}) {
  MetricsReport r;
  r.max_cut = max_cut_value(d);
  r.prob_max = prob_of_max(d);
  r.avg_cut = avg_cut_value(d);
  r.pareto_size = pareto_set(d).size();
  r.avg_cut_pareto = avg_cut_pareto(d);
  r.hypervolume = hypervolume(d, cfg);
  return r;
}

}  // namespace pauliorder
