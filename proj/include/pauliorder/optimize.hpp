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
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliorder/errors.hpp"

namespace pauliorder {

struct OptimizerConfig {
  std::size_t max_iterations = 300;  // objective evaluations
  double initial_scale = 0.25;       // simplex edge length
  double tolerance = 1e-10;          // stop when best and worst values differ by less
  std::uint64_t seed = 0;

  void validate() const {
    if (max_iterations < 1) throw InputError("max_iterations must be at least 1");
    if (!(tolerance > 0.0)) throw InputError("tolerance must be positive");
    if (!(initial_scale > 0.0)) throw InputError("initial simplex scale must be positive");
  }
};

/// Every objective evaluation in order, its running maximum, and the best point.
struct EnergyTrace {
  std::vector<double> values;
  std::vector<double> cumulative_max;
  std::vector<double> best_params;

  bool empty() const { return values.empty(); }
  double best() const { return cumulative_max.empty() ? 0.0 : cumulative_max.back(); }
};

/// Raised when the objective returns NaN or infinity.
class NonFiniteObjective : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

/// Simplex vertex offsets: each axis gets +-scale * [0.75, 1.25), drawn from
/// the seed. Seed 0 gives the plain +scale simplex.
inline std::vector<double> simplex_steps(std::size_t dim, double scale, std::uint64_t seed) {
  std::vector<double> steps(dim, scale);
  if (seed == 0) return steps;
  std::mt19937_64 rng(seed);
  for (auto& s : steps) {
    const std::uint64_t r = rng();
    const double unit = static_cast<double>(r >> 11) * 0x1.0p-53;
    s = scale * (0.75 + 0.5 * unit) * ((r & 1U) ? -1.0 : 1.0);
  }
  return steps;
}

}  // namespace detail

/**
 * Nelder-Mead maximization with reflection 1, expansion 2, contraction 0.5
 * and shrink 0.5. Stops when the simplex values span less than
 * `cfg.tolerance` or after `cfg.max_iterations` evaluations.
 */
inline EnergyTrace nelder_mead_maximize(const std::function<double(std::span<const double>)>& objective,
                                        std::vector<double> x0, const OptimizerConfig& cfg = {}) {
  cfg.validate();
  if (x0.empty()) throw InputError("Nelder-Mead needs at least one parameter");
  for (double v : x0) {
    if (!std::isfinite(v)) throw InputError("initial point must be finite");
  }
  const std::size_t dim = x0.size();
  EnergyTrace trace;
  double best_value = -std::numeric_limits<double>::infinity();

  // Returns false once the evaluation budget is spent.
  auto evaluate = [&](const std::vector<double>& x, double& out) {
    if (trace.values.size() >= cfg.max_iterations) return false;
    const double f = objective(x);
    if (!std::isfinite(f)) {
      std::ostringstream msg;
      msg << "objective returned " << f << " at evaluation " << trace.values.size() << ", x = [";
      for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
      msg << "]";
      throw NonFiniteObjective(msg.str());
    }
    trace.values.push_back(f);
    if (f > best_value) {
      best_value = f;
      trace.best_params = x;
    }
    trace.cumulative_max.push_back(best_value);
    out = f;
    return true;
  };

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  const auto steps = detail::simplex_steps(dim, cfg.initial_scale, cfg.seed);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) {
    if (!evaluate(simplex[i], values[i])) return trace;
  }

  auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  std::vector<std::size_t> order(dim + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    {
      std::vector<std::vector<double>> s2;
      std::vector<double> v2;
      for (auto i : order) {
        s2.push_back(simplex[i]);
        v2.push_back(values[i]);
      }
      simplex = std::move(s2);
      values = std::move(v2);
    }
    if (values.front() - values.back() < cfg.tolerance) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    const auto& worst = simplex[dim];
    const double f_best = values.front();
    const double f_second_worst = values[dim - 1];
    const double f_worst = values[dim];

    auto reflected = blend(centroid, worst, -1.0);
    double f_reflected;
    if (!evaluate(reflected, f_reflected)) break;

    if (f_reflected > f_best) {
      auto expanded = blend(centroid, worst, -2.0);
      double f_expanded;
      if (!evaluate(expanded, f_expanded)) break;
      if (f_expanded > f_reflected) {
        simplex[dim] = std::move(expanded);
        values[dim] = f_expanded;
      } else {
        simplex[dim] = std::move(reflected);
        values[dim] = f_reflected;
      }
      continue;
    }
    if (f_reflected > f_second_worst) {
      simplex[dim] = std::move(reflected);
      values[dim] = f_reflected;
      continue;
    }

    const bool outside = f_reflected > f_worst;
    auto contracted = outside ? blend(centroid, reflected, 0.5) : blend(centroid, worst, 0.5);
    double f_contracted;
    if (!evaluate(contracted, f_contracted)) break;
    if (outside ? f_contracted >= f_reflected : f_contracted > f_worst) {
      simplex[dim] = std::move(contracted);
      values[dim] = f_contracted;
      continue;
    }

    bool budget_left = true;
    for (std::size_t i = 1; i <= dim && budget_left; ++i) {
      simplex[i] = blend(simplex[0], simplex[i], 0.5);
      budget_left = evaluate(simplex[i], values[i]);
    }
    if (!budget_left) break;
  }
  return trace;
}

}  // namespace pauliorder
