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

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/graph.hpp"
#include "pauliorder/metrics.hpp"
#include "pauliorder/pauli.hpp"
#include "pauliorder/trotter.hpp"

namespace pauliorder {

using Amplitude = std::complex<double>;

/// Desk-scale cap on simulated qubits.
inline constexpr std::size_t kMaxSimulatedQubits = 16;

/**
 * Dense state over n qubits. Basis index bit j - 1 holds qubit j, and |0>
 * is the +1 eigenstate of Z.
 */
class Statevector {
 public:
  /// |0...0>.
  explicit Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxSimulatedQubits) {
      throw InputError("statevectors support 1 to " + std::to_string(kMaxSimulatedQubits) +
                       " qubits, got " + std::to_string(n_qubits_));
    }
    amplitudes_.assign(std::size_t{1} << n_qubits_, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
  }

  static Statevector basis(std::size_t n_qubits, std::uint64_t index) {
    Statevector s(n_qubits);
    if (index >= s.dimension()) throw InputError("basis index out of range");
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
  }

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
  Amplitude& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return sum;
  }

 private:
  std::size_t n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Uniform superposition, the top eigenstate of the mixer sum_j X_j.
inline Statevector prepare_plus_state(std::size_t n_qubits) {
  Statevector s(n_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  for (auto& amp : s.amplitudes()) amp = a;
  return s;
}

namespace detail {

/// P = i^{#Y} X^{x_mask} Z^{z_mask}, so P|b> = phase(b) |b ^ x_mask>.
struct PauliMasks {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  std::size_t y_count = 0;
};

inline PauliMasks masks_of(const PauliString& p) {
  PauliMasks m;
  for (const auto& [q, axis] : p.factors()) {
    const std::uint64_t bit = std::uint64_t{1} << (q - 1);
    if (axis != PauliAxis::Z) m.x_mask |= bit;
    if (axis != PauliAxis::X) m.z_mask |= bit;
    if (axis == PauliAxis::Y) ++m.y_count;
  }
  return m;
}

inline Amplitude i_power(std::size_t k) {
  switch (k % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

/// Coefficient of |b ^ x_mask> in P|b>.
inline Amplitude pauli_phase(const PauliMasks& m, std::uint64_t b) {
  const Amplitude base = i_power(m.y_count);
  return (std::popcount(b & m.z_mask) & 1U) ? -base : base;
}

inline void check_fits(const Statevector& s, const PauliString& p) {
  if (p.max_qubit() > s.n_qubits()) throw InputError("Pauli string exceeds the statevector size");
}

}  // namespace detail

/// s <- cos(theta) s - i sin(theta) P s.
inline void apply_pauli_exp(Statevector& s, const RotationBlock& block) {
  detail::check_fits(s, block.string);
  const auto m = detail::masks_of(block.string);
  const double c = std::cos(block.angle);
  const Amplitude minus_i_sin{0.0, -std::sin(block.angle)};
  auto amp = s.amplitudes();
  if (m.x_mask == 0) {
    for (std::uint64_t b = 0; b < amp.size(); ++b) {
      amp[b] *= c + minus_i_sin * detail::pauli_phase(m, b);
    }
    return;
  }
  for (std::uint64_t b = 0; b < amp.size(); ++b) {
    const std::uint64_t partner = b ^ m.x_mask;
    if (partner < b) continue;
    const Amplitude a0 = amp[b];
    const Amplitude a1 = amp[partner];
    // (P s)[b] = phase(partner) a1 and (P s)[partner] = phase(b) a0.
    amp[b] = c * a0 + minus_i_sin * detail::pauli_phase(m, partner) * a1;
    amp[partner] = c * a1 + minus_i_sin * detail::pauli_phase(m, b) * a0;
  }
}

inline void apply_sequence(Statevector& s, const GateSequence& seq) {
  for (const auto& block : seq.blocks) apply_pauli_exp(s, block);
}

/// exp(-i beta sum_j X_j), applied qubit by qubit.
inline void apply_mixer(Statevector& s, double beta) {
  for (Qubit q = 1; q <= s.n_qubits(); ++q) {
    apply_pauli_exp(s, {PauliString::single(q, PauliAxis::X), beta});
  }
}

/// exp(-i gamma C) as one exponential per term, in the Hamiltonian's order.
/// Exact when the terms commute (always the case for Ising costs).
inline void apply_cost_layer(Statevector& s, const Hamiltonian& cost, double gamma) {
  for (const auto& t : cost.terms()) {
    if (!t.string.is_identity()) apply_pauli_exp(s, {t.string, gamma * t.coefficient});
  }
}

/// Variational parameters; layer k applies gammas[k] then betas[k].
struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  std::size_t layers() const { return betas.size(); }

  void validate() const {
    if (betas.empty() || betas.size() != gammas.size()) {
      throw InputError("QAOA parameters need equal-length beta and gamma vectors, p >= 1");
    }
  }

  /// [beta_0..beta_{p-1}, gamma_0..gamma_{p-1}].
  std::vector<double> flatten() const {
    std::vector<double> x(betas);
    x.insert(x.end(), gammas.begin(), gammas.end());
    return x;
  }

  static QaoaParams unflatten(std::span<const double> x) {
    if (x.empty() || x.size() % 2 != 0) throw InputError("parameter vector must have even length");
    const std::size_t p = x.size() / 2;
    return QaoaParams{{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
  }
};

/// U(beta, gamma)|+>, cost layer applied before the mixer in every layer.
inline Statevector qaoa_state(const QaoaParams& params, const Hamiltonian& cost) {
  params.validate();
  Statevector s = prepare_plus_state(cost.n_qubits());
  for (std::size_t k = 0; k < params.layers(); ++k) {
    apply_cost_layer(s, cost, params.gammas[k]);
    apply_mixer(s, params.betas[k]);
  }
  return s;
}

inline Statevector qaoa_state(const QaoaParams& params, const IsingHamiltonian& cost) {
  return qaoa_state(params, from_ising(cost));
}

/// sum_j coeff_j <s|P_j|s>.
inline double expectation(const Statevector& s, const Hamiltonian& h) {
  if (h.n_qubits() > s.n_qubits()) throw InputError("Hamiltonian exceeds the statevector size");
  auto amp = s.amplitudes();
  double total = 0.0;
  for (const auto& t : h.terms()) {
    const auto m = detail::masks_of(t.string);
    Amplitude value{0.0, 0.0};
    for (std::uint64_t b = 0; b < amp.size(); ++b) {
      value += std::conj(amp[b ^ m.x_mask]) * detail::pauli_phase(m, b) * amp[b];
    }
    total += t.coefficient * value.real();
  }
  return total;
}

/// Global depolarizing proxy: `rate` is the per-depth-unit probability.
struct NoiseConfig {
  double rate = 0.0;
  CostModel cost = CostModel::unit;

  void validate() const {
    if (!(rate >= 0.0 && rate < 1.0)) throw InputError("noise rate must lie in [0, 1)");
  }

  double survival(std::size_t depth) const {
    return std::pow(1.0 - rate, static_cast<double>(depth));
  }
};

/// (1 - rate)^depth * <H>; exact for global depolarizing since every
/// non-identity Pauli term is traceless.
inline double noisy_expectation(const Statevector& s, const Hamiltonian& h, std::size_t depth,
                                const NoiseConfig& noise) {
  noise.validate();
  return noise.survival(depth) * expectation(s, h);
}

/// Exact |amplitude|^2 of every bitstring with its cut value on `g`.
inline CutDistribution cut_distribution(const Statevector& s, const InteractionGraph& g) {
  if (!g.loop_free()) throw InputError("cut distributions need a loop-free graph");
  if (g.n_vertices() != s.n_qubits()) throw InputError("graph and statevector sizes differ");
  std::vector<CutOutcome> outcomes;
  outcomes.reserve(s.dimension());
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    outcomes.push_back({b, std::norm(s[b]), cut_value(g, b)});
  }
  return CutDistribution(g.n_vertices(), g.n_edges(), std::move(outcomes));
}

}  // namespace pauliorder
