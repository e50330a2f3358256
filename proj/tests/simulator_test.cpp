// Copyright 2026 The stabrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stabrank/dense.hpp"
#include "stabrank/parallel.hpp"
#include "stabrank/simulator.hpp"

using namespace stabrank;

namespace {

constexpr double kPi = 3.14159265358979323846;

QuantumCircuit random_circuit(std::mt19937 &rng, size_t n, size_t depth, size_t m, bool rotations) {
  const GateKind cliffords[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Z,
                                GateKind::CX, GateKind::CZ};
  const double angles[] = {0.3, -1.2, kPi / 8, 2.5};
  QuantumCircuit c;
  c.n = n;
  std::vector<bool> slot(depth + m, false);
  for (size_t i = 0; i < m; i++) slot[rng() % slot.size()] = true;
  for (size_t i = 0; i < slot.size(); i++) {
    Gate g{GateKind::H, rng() % n, 0};
    if (slot[i]) {
      int pick = static_cast<int>(rng() % (rotations ? 3 : 2));
      g.kind = pick == 0 ? GateKind::T : (pick == 1 ? GateKind::Tdg : GateKind::RZ);
      g.angle = angles[rng() % 4];
    } else {
      g.kind = cliffords[rng() % 7];
      if (is_two_qubit(g.kind)) {
        if (n < 2) continue;
        do g.q1 = rng() % n;
        while (g.q1 == g.q0);
      }
    }
    c.append(g);
  }
  return c;
}

F2Vector bits_of(uint64_t x, size_t n) { return F2Vector::from_word(x, n); }

}  // namespace

TEST(Gadgetize, CountsAndAncillaLayout) {
  QuantumCircuit c = parse_circuit("qubits 2\nH 0\nT 0\nCX 0 1\nRZ(0.4) 1\nTDG 1\n");
  GadgetizedCircuit g = gadgetize(c);
  EXPECT_EQ(g.m, 3u);
  EXPECT_EQ(g.clifford.n, 5u);
  EXPECT_EQ(g.clifford.non_clifford_count(), 0u);
  ASSERT_EQ(g.angles.size(), 3u);
  EXPECT_NEAR(g.angles[0], kPi / 4, 1e-15);
  EXPECT_NEAR(g.angles[1], 0.4, 1e-15);
  EXPECT_NEAR(g.angles[2], -kPi / 4, 1e-15);
  EXPECT_EQ(g.data_qubits, (std::vector<size_t>{0, 1, 1}));
  EXPECT_EQ(g.magic_kind(), "R");
  EXPECT_EQ(gadgetize(parse_circuit("qubits 1\nH 0\n")).m, 0u);
}

TEST(Gadgetize, DenseGadgetIdentity) {
  std::mt19937 rng(81);
  for (int trial = 0; trial < 20; trial++) {
    size_t n = 1 + rng() % 4;
    QuantumCircuit c = random_circuit(rng, n, 15, 1 + rng() % 5, true);
    GadgetizedCircuit g = gadgetize(c);
    Eigen::VectorXcd magic = Eigen::VectorXcd::Ones(1);
    for (double th : g.angles) magic = dense::kron(magic, dense::r_state<double>(th));
    Eigen::VectorXcd v = dense::apply_gates(dense::kron(dense::zero_ket<double>(n), magic), g.clifford.gates);
    for (size_t q = n + g.m; q-- > n;) v = dense::postselect(v, q, false);
    v *= std::pow(2.0, g.m / 2.0);
    Eigen::VectorXcd expect = dense::apply_gates(dense::zero_ket<double>(n), c.gates);
    EXPECT_LT((v - expect).norm(), 1e-10);
  }
}

TEST(Gadgetize, AnglesAreNormalized) {
  EXPECT_NEAR(normalize_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(normalize_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(normalize_angle(2 * kPi + 0.1), 0.1, 1e-12);
}

TEST(MagicRegister, GroupsEqualAnglesAndPermutesIntoPlace) {
  std::vector<double> angles = {kPi / 4, 0.3, kPi / 4, -kPi / 4, 0.3, kPi / 4};
  MagicRegister reg = build_magic_register(angles, MagicStrategy::Auto);
  ASSERT_EQ(reg.groups.size(), 2u);
  EXPECT_EQ(reg.groups[0].ancillas, (std::vector<size_t>{0, 2, 3, 5}));
  EXPECT_EQ(reg.groups[0].quarter_turns, (std::vector<int>{0, 0, 3, 0}));
  EXPECT_EQ(reg.groups[1].ancillas, (std::vector<size_t>{1, 4}));
  Eigen::VectorXcd expect = Eigen::VectorXcd::Ones(1);
  for (double th : angles) expect = dense::kron(expect, dense::r_state<double>(th));
  EXPECT_NEAR(fidelity_vs_dense(reg.state, expect), 1.0, 1e-12);
  EXPECT_LT((to_dense(reg.state) - expect).norm(), 1e-12);
}

TEST(MagicRegister, QuarterTurnShiftsShareAGroup) {
  std::vector<double> angles = {0.4, 0.4 + kPi / 2, 0.4 - kPi, 0.4 + kPi / 2 - 2 * kPi};
  MagicRegister reg = build_magic_register(angles, MagicStrategy::Auto);
  ASSERT_EQ(reg.groups.size(), 1u);
  Eigen::VectorXcd expect = Eigen::VectorXcd::Ones(1);
  for (double th : angles) expect = dense::kron(expect, dense::r_state<double>(th));
  EXPECT_LT((to_dense(reg.state) - expect).norm(), 1e-12);
}

TEST(MagicRegister, StrategiesAgree) {
  std::vector<double> angles(7, kPi / 4);
  angles[3] = -kPi / 4;
  Eigen::VectorXcd expect = Eigen::VectorXcd::Ones(1);
  for (double th : angles) expect = dense::kron(expect, dense::r_state<double>(th));
  for (MagicStrategy s : {MagicStrategy::Auto, MagicStrategy::Chain, MagicStrategy::Naive}) {
    MagicRegister reg = build_magic_register(angles, s);
    EXPECT_LT((to_dense(reg.state) - expect).norm(), 1e-12) << strategy_name(s);
  }
  EXPECT_EQ(build_magic_register(angles, MagicStrategy::Naive).state.size(), 128u);
}

TEST(Simulator, BellAmplitude) {
  CircuitSimulator sim(parse_circuit("qubits 2\nH 0\nCX 0 1\n"));
  EXPECT_NEAR(std::abs(sim.amplitude(bits_of(0, 2)) - 1 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(sim.probability({0}, F2Vector::from_string("0")), 0.5, 1e-15);
  EXPECT_EQ(sim.output_state().size(), 1u);
}

TEST(Simulator, TOnPlusThenHadamard) {
  CircuitSimulator sim(parse_circuit("qubits 1\nH 0\nT 0\nH 0\n"));
  std::complex<double> expect = (1.0 + std::polar(1.0, kPi / 4)) / 2.0;
  EXPECT_LT(std::abs(sim.amplitude(bits_of(0, 1)) - expect), 1e-14);
}

TEST(Simulator, RandomTCircuitsMatchDense) {
  std::mt19937 rng(82);
  for (int trial = 0; trial < 15; trial++) {
    QuantumCircuit c = random_circuit(rng, 6, 30, 8, false);
    Eigen::VectorXcd ref = dense::apply_gates(dense::zero_ket<double>(6), c.gates);
    CircuitSimulator sim(c);
    EXPECT_LE(sim.magic().state.size(), 12u);
    for (uint64_t x = 0; x < 64; x++) {
      ASSERT_LT(std::abs(sim.amplitude(bits_of(x, 6)) - ref[static_cast<Eigen::Index>(x)]), 1e-8);
    }
  }
}

TEST(Simulator, MarginalProbabilityMatchesDense) {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 15; trial++) {
    QuantumCircuit c = random_circuit(rng, 5, 25, 4, true);
    Eigen::VectorXcd ref = dense::apply_gates(dense::zero_ket<double>(5), c.gates);
    CircuitSimulator sim(c);
    std::vector<size_t> qubits = {4, 1, 2};
    F2Vector y = bits_of(rng() % 8, 3);
    double expect = 0;
    for (Eigen::Index x = 0; x < 32; x++) {
      if (((x >> 4) & 1) == y.get(0) && ((x >> 1) & 1) == y.get(1) && ((x >> 2) & 1) == y.get(2)) {
        expect += std::norm(ref[x]);
      }
    }
    EXPECT_NEAR(sim.probability(qubits, y), expect, 1e-8);
  }
}

TEST(Simulator, FullWidthProbabilityIsSquaredAmplitude) {
  CircuitSimulator sim(parse_circuit("qubits 3\nH 0\nT 0\nCX 0 2\nH 1\nRZ(0.7) 1\nH 1\n"));
  F2Vector x = F2Vector::from_string("101");
  EXPECT_NEAR(sim.probability({0, 1, 2}, x), std::norm(sim.amplitude(x)), 1e-15);
}

TEST(Simulator, ResultDoesNotDependOnThreadCount) {
  std::mt19937 rng(84);
  QuantumCircuit c = random_circuit(rng, 6, 30, 10, true);
  set_thread_count(1);
  std::complex<double> a = CircuitSimulator(c).amplitude(bits_of(5, 6));
  set_thread_count(4);
  std::complex<double> b = CircuitSimulator(c).amplitude(bits_of(5, 6));
  set_thread_count(0);
  EXPECT_EQ(a, b);
}

TEST(Simulator, ErrorsOnBadShapesAndLargeMarginals) {
  CircuitSimulator sim(parse_circuit("qubits 2\nH 0\n"));
  EXPECT_THROW(sim.amplitude(bits_of(0, 3)), std::invalid_argument);
  EXPECT_THROW(sim.probability({0, 0}, F2Vector::from_string("00")), std::invalid_argument);
  EXPECT_THROW(sim.probability({7}, F2Vector::from_string("0")), std::out_of_range);
  QuantumCircuit wide;
  wide.n = 24;
  CircuitSimulator big(wide);
  try {
    big.probability({0}, F2Vector::from_string("0"));
    FAIL() << "expected a marginal-size error";
  } catch (const std::length_error &e) {
    EXPECT_NE(std::string(e.what()).find("use smaller marginal"), std::string::npos);
  }
}

TEST(CostReport, TermCountsAndExponents) {
  QuantumCircuit c6;
  c6.n = 1;
  for (int i = 0; i < 6; i++) c6.append({GateKind::T, 0});
  CostReport r6 = cost_report(c6);
  EXPECT_EQ(r6.terms, 6u);
  EXPECT_NEAR(r6.exponent, std::log2(6.0) / 6, 1e-12);
  QuantumCircuit c10 = c6;
  for (int i = 0; i < 4; i++) c10.append({GateKind::T, 0});
  CostReport r10 = cost_report(c10);
  EXPECT_EQ(r10.terms, 18u);
  EXPECT_NEAR(r10.exponent, 0.417, 5e-4);
  CostReport clifford = cost_report(parse_circuit("qubits 2\nH 0\nCX 0 1\n"));
  EXPECT_EQ(clifford.terms, 1u);
  EXPECT_EQ(clifford.m, 0u);
  EXPECT_EQ(cost_report(c10, MagicStrategy::Naive).terms, 1024u);
  EXPECT_TRUE(r10.to_json().contains("groups"));
}

TEST(CostReport, PredictionMatchesBuiltRegister) {
  std::mt19937 rng(85);
  for (int trial = 0; trial < 10; trial++) {
    QuantumCircuit c = random_circuit(rng, 3, 10, 6, true);
    for (MagicStrategy s : {MagicStrategy::Auto, MagicStrategy::Naive}) {
      CircuitSimulator sim(c, s);
      EXPECT_EQ(cost_report(c, s).terms, sim.magic().state.size());
    }
  }
}

TEST(Strategy, NamesRoundTrip) {
  for (const char *name : {"auto", "chain", "naive"}) EXPECT_EQ(strategy_name(strategy_from_name(name)), name);
  EXPECT_THROW(strategy_from_name("fast"), std::invalid_argument);
}
