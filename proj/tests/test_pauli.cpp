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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "pauliorder/pauli.hpp"
#include "pauliorder/pauli_io.hpp"

using namespace pauliorder;

namespace {

PauliString dense(std::string_view s) { return parse_pauli_string(s, s.size()); }

}  // namespace

TEST_CASE("parse_pauli_string reads dense, sparse and identity forms", "[pauli]") {
  auto p = parse_pauli_string("IIXIYZ", 6);
  REQUIRE(p.weight() == 3);
  CHECK(p.at(3) == PauliAxis::X);
  CHECK(p.at(5) == PauliAxis::Y);
  CHECK(p.at(6) == PauliAxis::Z);
  CHECK_FALSE(p.at(1).has_value());
  CHECK(p == parse_pauli_string("X3 Y5 Z6", 6));

  CHECK(parse_pauli_string("I", 4).is_identity());

  auto zz = parse_pauli_string("Z1 Z2", 3);
  CHECK(zz == PauliString::zz(1, 2));
}

TEST_CASE("parse_pauli_string rejects malformed input", "[pauli]") {
  CHECK_THROWS_AS(parse_pauli_string("X7", 6), InputError);
  CHECK_THROWS_AS(parse_pauli_string("X0", 6), InputError);
  CHECK_THROWS_AS(parse_pauli_string("X1 Z1", 2), InputError);
  CHECK_THROWS_AS(parse_pauli_string("Q1", 2), InputError);
  CHECK_THROWS_AS(parse_pauli_string("IXA", 3), InputError);
  CHECK_THROWS_AS(parse_pauli_string("IXX", 4), InputError);
  CHECK_THROWS_AS(parse_pauli_string("", 4), InputError);
  // Same axis twice is the same factor.
  CHECK(parse_pauli_string("X1 X1", 2) == PauliString::single(1, PauliAxis::X));
}

TEST_CASE("overlap follows shared support", "[pauli]") {
  CHECK(overlap(dense("IXX"), dense("YIX")));
  CHECK_FALSE(overlap(dense("IZZ"), dense("ZII")));
  CHECK_FALSE(overlap(PauliString{}, dense("XYZ")));
  CHECK(overlap(dense("XII"), dense("XII")));
  CHECK(overlap(dense("IXI"), dense("ZYX")) == overlap(dense("ZYX"), dense("IXI")));
}

TEST_CASE("commutes uses the symplectic count", "[pauli]") {
  CHECK(commutes(dense("IIX"), dense("IXX")));
  CHECK_FALSE(commutes(PauliString::single(1, PauliAxis::X), PauliString::single(1, PauliAxis::Z)));
  CHECK(commutes(dense("IZZ"), dense("ZII")));
  CHECK(commutes(dense("XX"), dense("ZZ")));
  CHECK_FALSE(commutes(dense("XY"), dense("XZ")));
}

TEST_CASE("non-overlap implies commutation, checked against dense commutators", "[pauli][oracle]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto a = oracle::random_pauli(n, rng, true);
    auto b = oracle::random_pauli(n, rng, true);
    auto ma = oracle::dense(a, n);
    auto mb = oracle::dense(b, n);
    const bool dense_commute = (ma * mb - mb * ma).norm() < 1e-12;
    REQUIRE(commutes(a, b) == dense_commute);
    if (!overlap(a, b)) REQUIRE(dense_commute);
    REQUIRE(overlap(a, b) == overlap(b, a));
    if (!a.is_identity()) REQUIRE(overlap(a, a));
  }
}

TEST_CASE("Hamiltonian merges duplicates and drops zeros", "[pauli]") {
  Hamiltonian h(2, {{1.0, PauliString::zz(1, 2)}, {2.0, PauliString::zz(1, 2)}});
  REQUIRE(h.size() == 1);
  CHECK(h[0].coefficient == 3.0);

  Hamiltonian cancel(2, {{1.0, PauliString::single(1, PauliAxis::X)},
                         {0.5, PauliString::single(2, PauliAxis::Z)},
                         {-1.0, PauliString::single(1, PauliAxis::X)}});
  REQUIRE(cancel.size() == 1);
  CHECK(cancel[0].string == PauliString::single(2, PauliAxis::Z));

  CHECK_THROWS_AS(Hamiltonian(2, {{1.0, PauliString::single(3, PauliAxis::X)}}), InputError);
  CHECK_THROWS_AS(Hamiltonian(0, {}), InputError);
}

TEST_CASE("to_ising negates coefficients and round-trips", "[pauli]") {
  Hamiltonian triangle(3, {{-1.0, PauliString::zz(1, 2)},
                           {-1.0, PauliString::zz(2, 3)},
                           {-1.0, PauliString::zz(1, 3)}});
  auto ising = to_ising(triangle);
  CHECK(ising.couplings() == std::map<IsingHamiltonian::Coupling, double>{
                                 {{1, 2}, 1.0}, {{2, 3}, 1.0}, {{1, 3}, 1.0}});
  CHECK(ising.fields().empty());

  auto field = to_ising(Hamiltonian(1, {{-1.0, PauliString::single(1, PauliAxis::Z)}}));
  CHECK(field.fields() == std::map<Qubit, double>{{1, 1.0}});

  CHECK_THROWS_AS(to_ising(Hamiltonian(1, {{1.0, PauliString::single(1, PauliAxis::X)}})),
                  NotIsingError);
  CHECK_THROWS_AS(to_ising(parse_hamiltonian("1 Z1 Z2 Z3\n")), NotIsingError);

  auto back = from_ising(ising);
  std::set<std::pair<PauliString, double>> a;
  std::set<std::pair<PauliString, double>> b;
  for (const auto& t : triangle.terms()) a.insert({t.string, t.coefficient});
  for (const auto& t : back.terms()) b.insert({t.string, t.coefficient});
  CHECK(a == b);
}

TEST_CASE("Hamiltonian text format", "[pauli][io]") {
  const char* text =
      "# a comment\n"
      "-1 Z1 Z2\n"
      "\n"
      "0.5 IZZ   # trailing comment\n"
      "+2.25 I\n";
  auto h = parse_hamiltonian(text);
  REQUIRE(h.n_qubits() == 3);
  REQUIRE(h.size() == 3);
  CHECK(h[0].coefficient == -1.0);
  CHECK(h[1].string == PauliString::zz(2, 3));
  CHECK(h[2].string.is_identity());

  CHECK(parse_hamiltonian("# qubits 5\n1 X2\n").n_qubits() == 5);
  CHECK_THROWS_AS(parse_hamiltonian("1+2j X1\n"), InputError);
  CHECK_THROWS_AS(parse_hamiltonian("1j X1\n"), InputError);
  CHECK_THROWS_AS(parse_hamiltonian("X1\n"), InputError);
  CHECK_THROWS_AS(parse_hamiltonian("1 XX\n1 XXX\n"), InputError);
}

TEST_CASE("serialize then parse is the identity, sparse and dense", "[pauli][io][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto h = oracle::random_hamiltonian(n, 1 + rng() % 10, rng);
    for (auto format : {PauliFormat::sparse, PauliFormat::dense}) {
      auto again = parse_hamiltonian(serialize_hamiltonian(h, format));
      REQUIRE(again.n_qubits() == h.n_qubits());
      REQUIRE(std::equal(h.terms().begin(), h.terms().end(), again.terms().begin(), again.terms().end()));
    }
    auto p = oracle::random_pauli(n, rng, true);
    REQUIRE(parse_pauli_string(to_sparse_string(p), n) == p);
    REQUIRE(parse_pauli_string(to_dense_string(p, n), n) == p);
  }
}
