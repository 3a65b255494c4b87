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

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "pauliorder/errors.hpp"
#include "pauliorder/pauli.hpp"

// Hamiltonian text format: one `<coefficient> <pauli>` per line, where the
// Pauli string is dense ("IZZ") or sparse ("Z2 Z3"). `#` starts a comment and
// the directive `# qubits N` fixes the qubit count.

namespace pauliorder {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("cannot parse " + std::string(what) + " from '" + std::string(token) + "'");
  }
  return value;
}

inline std::optional<PauliAxis> axis_from_char(char c) {
  switch (c) {
    case 'X':
      return PauliAxis::X;
    case 'Y':
      return PauliAxis::Y;
    case 'Z':
      return PauliAxis::Z;
    default:
      return std::nullopt;
  }
}

inline bool is_dense_token(std::string_view token) {
  return !token.empty() && token.find_first_not_of("IXYZ") == std::string_view::npos;
}

/// Recognizes `# <key> <value>` directives inside comments.
inline std::optional<std::size_t> directive(std::string_view comment, std::string_view key) {
  auto tokens = split_ws(comment);
  if (tokens.size() == 2 && tokens[0] == key) {
    return parse_number<std::size_t>(tokens[1], key);
  }
  return std::nullopt;
}

/// Smallest qubit count able to hold `text`, and whether it is dense.
inline std::pair<std::size_t, bool> pauli_extent(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "I") return {0, false};
  if (tokens.size() == 1 && is_dense_token(tokens[0])) return {tokens[0].size(), true};
  std::size_t extent = 0;
  for (auto tok : tokens) {
    if (tok.size() < 2) throw InputError("bad sparse Pauli token '" + std::string(tok) + "'");
    extent = std::max(extent, parse_number<std::size_t>(tok.substr(1), "qubit index"));
  }
  return {extent, false};
}

}  // namespace detail

/// Parses dense ("IIXIYZ", length n), sparse ("X3 Y5 Z6", 1-based) or "I".
inline PauliString parse_pauli_string(std::string_view text, std::size_t n_qubits) {
  auto tokens = detail::split_ws(text);
  if (tokens.empty()) throw InputError("empty Pauli string");
  if (tokens.size() == 1 && tokens[0] == "I") return PauliString{};

  std::vector<PauliString::Factor> factors;
  if (tokens.size() == 1 && detail::is_dense_token(tokens[0])) {
    auto dense = tokens[0];
    if (dense.size() != n_qubits) {
      throw InputError("dense Pauli string '" + std::string(dense) + "' has length " +
                       std::to_string(dense.size()) + ", expected " +
                       std::to_string(n_qubits));
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (auto axis = detail::axis_from_char(dense[i])) {
        factors.emplace_back(static_cast<Qubit>(i + 1), *axis);
      }
    }
    return PauliString(std::move(factors));
  }

  for (auto tok : tokens) {
    if (tok.size() < 2) throw InputError("bad sparse Pauli token '" + std::string(tok) + "'");
    const char letter = tok.front();
    auto index = detail::parse_number<std::size_t>(tok.substr(1), "qubit index");
    if (index < 1 || index > n_qubits) {
      throw InputError("qubit index " + std::to_string(index) + " outside [1, " +
                       std::to_string(n_qubits) + "]");
    }
    if (letter == 'I') continue;
    auto axis = detail::axis_from_char(letter);
    if (!axis) throw InputError(std::string("unknown Pauli character '") + letter + "'");
    factors.emplace_back(static_cast<Qubit>(index), *axis);
  }
  return PauliString(std::move(factors));
}

/// "X3 Y5 Z6", or "I" for the identity.
inline std::string to_sparse_string(const PauliString& p) {
  if (p.is_identity()) return "I";
  std::string out;
  for (const auto& [q, axis] : p.factors()) {
    if (!out.empty()) out += ' ';
    out += axis_char(axis);
    out += std::to_string(q);
  }
  return out;
}

inline std::string to_dense_string(const PauliString& p, std::size_t n_qubits) {
  if (p.max_qubit() > n_qubits) throw InputError("Pauli string does not fit the qubit count");
  std::string out(n_qubits, 'I');
  for (const auto& [q, axis] : p.factors()) out[q - 1] = axis_char(axis);
  return out;
}

/// Shortest decimal that reads back to the same double.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw InvariantViolation("to_chars failed");
  return std::string(buf, ptr);
}

enum class PauliFormat { sparse, dense };

/// Reads the Hamiltonian text format. The qubit count comes from
/// `n_qubits`, else from a `# qubits N` directive, else from the widest term.
inline Hamiltonian parse_hamiltonian(std::string_view text,
                                     std::optional<std::size_t> n_qubits = std::nullopt) {
  struct Line {
    std::size_t number;
    std::string_view coefficient;
    std::string_view pauli;
  };
  std::vector<Line> lines;
  std::optional<std::size_t> declared;
  std::size_t dense_width = 0;
  std::size_t extent = 0;
  std::size_t number = 0;
  for (auto raw : detail::split_lines(text)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) {
      if (auto d = detail::directive(raw.substr(hash + 1), "qubits")) declared = d;
      raw = raw.substr(0, hash);
    }
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    auto split = line.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw InputError("line " + std::to_string(number) + ": expected '<coefficient> <pauli>'");
    }
    Line parsed{number, line.substr(0, split), detail::trim(line.substr(split))};
    try {
      auto [width, dense] = detail::pauli_extent(parsed.pauli);
      if (dense) {
        if (dense_width != 0 && dense_width != width) {
          throw InputError("dense Pauli strings of different lengths");
        }
        dense_width = width;
      }
      extent = std::max(extent, width);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
    lines.push_back(parsed);
  }

  std::size_t n = n_qubits.value_or(declared.value_or(std::max<std::size_t>(extent, 1)));
  if (dense_width != 0 && !n_qubits && !declared) n = dense_width;
  if (extent > n) throw InputError("terms act beyond the declared qubit count");

  std::vector<Term> terms;
  terms.reserve(lines.size());
  for (const auto& line : lines) {
    try {
      double c = detail::parse_number<double>(line.coefficient, "real coefficient");
      terms.push_back({c, parse_pauli_string(line.pauli, n)});
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return Hamiltonian(n, std::move(terms));
}

inline std::string serialize_hamiltonian(const Hamiltonian& h,
                                         PauliFormat format = PauliFormat::sparse) {
  std::string out = "# qubits " + std::to_string(h.n_qubits()) + "\n";
  for (const auto& t : h.terms()) {
    out += format_double(t.coefficient);
    out += ' ';
    out += format == PauliFormat::dense && !t.string.is_identity()
               ? to_dense_string(t.string, h.n_qubits())
               : to_sparse_string(t.string);
    out += '\n';
  }
  return out;
}

}  // namespace pauliorder
