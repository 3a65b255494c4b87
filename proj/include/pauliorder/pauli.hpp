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
#include <utility>
#include <vector>

#include "pauliorder/errors.hpp"

namespace pauliorder {

/// Qubit indices are 1-based throughout the public API.
using Qubit = std::uint32_t;

/// Non-identity single-qubit Pauli factor. Identity is represented by absence.
enum class PauliAxis : std::uint8_t { X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return '?';
}

/**
 * Sparse tensor product of Pauli matrices.
 *
 * Stored as (qubit, axis) factors sorted by qubit with no repeated qubit. An
 * empty factor list is the identity string.
 */
class PauliString {
 public:
  using Factor = std::pair<Qubit, PauliAxis>;

  PauliString() = default;

  /// Canonicalizes `factors`. Repeating a qubit with the same axis collapses
  /// to one factor; repeating it with a different axis is an InputError.
  explicit PauliString(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> unique;
    unique.reserve(factors_.size());
    for (const auto& f : factors_) {
      if (f.first == 0) throw InputError("Pauli qubit indices are 1-based; got 0");
      if (!unique.empty() && unique.back().first == f.first) {
        if (unique.back().second != f.second) {
          throw InputError("qubit " + std::to_string(f.first) +
                           " carries conflicting Pauli axes");
        }
        continue;
      }
      unique.push_back(f);
    }
    factors_ = std::move(unique);
  }

  static PauliString single(Qubit q, PauliAxis axis) { return PauliString({{q, axis}}); }

  static PauliString zz(Qubit j, Qubit k) {
    return PauliString({{j, PauliAxis::Z}, {k, PauliAxis::Z}});
  }

  std::span<const Factor> factors() const { return factors_; }
  std::size_t weight() const { return factors_.size(); }
  bool is_identity() const { return factors_.empty(); }

  std::optional<PauliAxis> at(Qubit q) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), q,
                               [](const Factor& f, Qubit v) { return f.first < v; });
    if (it == factors_.end() || it->first != q) return std::nullopt;
    return it->second;
  }

  /// Largest qubit index in the support, 0 for the identity.
  Qubit max_qubit() const { return factors_.empty() ? 0 : factors_.back().first; }

  bool has_xy() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second != PauliAxis::Z; });
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Factor> factors_;
};

/// True iff both strings act non-trivially on some common qubit.
inline bool overlap(const PauliString& a, const PauliString& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) return true;
    if (fa[i].first < fb[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

/// Symplectic commutation test: the number of shared qubits carrying
/// different axes must be even.
inline bool commutes(const PauliString& a, const PauliString& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t anticommuting = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) ++anticommuting;
      ++i;
      ++j;
    } else if (fa[i].first < fb[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return anticommuting % 2 == 0;
}

struct Term {
  double coefficient = 0.0;
  PauliString string;

  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * Real-weighted sum of Pauli strings on `n_qubits` qubits.
 *
 * Construction merges terms with equal strings (coefficients summed, merged
 * term kept at its first position) and drops terms whose coefficient is zero.
 */
class Hamiltonian {
 public:
  Hamiltonian(std::size_t n_qubits, std::vector<Term> terms) : n_qubits_(n_qubits) {
    if (n_qubits_ == 0) throw InputError("a Hamiltonian needs at least one qubit");
    std::map<PauliString, std::size_t> position;
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
      if (t.string.max_qubit() > n_qubits_) {
        throw InputError("term acts on qubit " + std::to_string(t.string.max_qubit()) +
                         " but the Hamiltonian has " + std::to_string(n_qubits_) +
                         " qubits");
      }
      auto [it, inserted] = position.try_emplace(t.string, merged.size());
      if (inserted) {
        merged.push_back(std::move(t));
      } else {
        merged[it->second].coefficient += t.coefficient;
      }
    }
    std::erase_if(merged, [](const Term& t) { return t.coefficient == 0.0; });
    terms_ = std::move(merged);
  }

  std::size_t n_qubits() const { return n_qubits_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  /// Sum of |coefficient| over all terms; bounds every expectation value.
  double coefficient_norm() const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.coefficient < 0 ? -t.coefficient : t.coefficient;
    return sum;
  }

 private:
  std::size_t n_qubits_;
  std::vector<Term> terms_;
};

/**
 * H = offset - sum_{j<k} J_jk Z_j Z_k - sum_j h_j Z_j.
 *
 * Weights are arbitrary nonzero reals; max-cut instances use J = 1. The
 * offset carries identity terms so the conversion from Hamiltonian is
 * lossless.
 */
class IsingHamiltonian {
 public:
  using Coupling = std::pair<Qubit, Qubit>;

  IsingHamiltonian(std::size_t n_qubits, std::map<Coupling, double> couplings,
                   std::map<Qubit, double> fields, double offset = 0.0)
      : n_qubits_(n_qubits),
        couplings_(std::move(couplings)),
        fields_(std::move(fields)),
        offset_(offset) {
    if (n_qubits_ == 0) throw InputError("an Ising Hamiltonian needs at least one qubit");
    for (const auto& [key, weight] : couplings_) {
      if (key.first == 0 || key.first >= key.second || key.second > n_qubits_) {
        throw InputError("coupling keys must satisfy 1 <= j < k <= N");
      }
      if (weight == 0.0) throw InputError("stored couplings must be nonzero");
    }
    for (const auto& [q, weight] : fields_) {
      if (q == 0 || q > n_qubits_) throw InputError("field index out of range");
      if (weight == 0.0) throw InputError("stored fields must be nonzero");
    }
  }

  std::size_t n_qubits() const { return n_qubits_; }
  const std::map<Coupling, double>& couplings() const { return couplings_; }
  const std::map<Qubit, double>& fields() const { return fields_; }
  double offset() const { return offset_; }

 private:
  std::size_t n_qubits_;
  std::map<Coupling, double> couplings_;
  std::map<Qubit, double> fields_;
  double offset_;
};

/// Reads the couplings and fields off a Z/ZZ Hamiltonian, negating
/// coefficients so that a term -Z1Z2 becomes J_12 = 1.
inline IsingHamiltonian to_ising(const Hamiltonian& h) {
  std::map<IsingHamiltonian::Coupling, double> couplings;
  std::map<Qubit, double> fields;
  double offset = 0.0;
  for (const auto& t : h.terms()) {
    const auto f = t.string.factors();
    if (t.string.has_xy() || f.size() > 2) {
      throw NotIsingError("term is not of the form Z_j or Z_j Z_k");
    }
    if (f.empty()) {
      offset += t.coefficient;
    } else if (f.size() == 1) {
      fields[f[0].first] = -t.coefficient;
    } else {
      couplings[{f[0].first, f[1].first}] = -t.coefficient;
    }
  }
  return IsingHamiltonian(h.n_qubits(), std::move(couplings), std::move(fields), offset);
}

/// Couplings first (key order), then fields, then the identity offset.
inline Hamiltonian from_ising(const IsingHamiltonian& ising) {
  std::vector<Term> terms;
  for (const auto& [key, weight] : ising.couplings()) {
    terms.push_back({-weight, PauliString::zz(key.first, key.second)});
  }
  for (const auto& [q, weight] : ising.fields()) {
    terms.push_back({-weight, PauliString::single(q, PauliAxis::Z)});
  }
  if (ising.offset() != 0.0) terms.push_back({ising.offset(), PauliString{}});
  return Hamiltonian(ising.n_qubits(), std::move(terms));
}

}  // namespace pauliorder
