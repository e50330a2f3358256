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

#include <random>

#include "stabrank/dense.hpp"

using namespace stabrank;

namespace {

constexpr double kPi = 3.14159265358979323846;
using C = std::complex<double>;

}  // namespace

TEST(DenseStates, TStateAmplitudes) {
  Eigen::VectorXcd t = dense::t_state<double>();
  EXPECT_NEAR(std::abs(t[0] - 1 / std::sqrt(2.0)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(t[1] - std::polar(1 / std::sqrt(2.0), kPi / 4)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(t.dot(dense::t_perp_state<double>())), 0.0, 1e-16);
}

TEST(DenseStates, FStateIsNormalizedWithFixedBeta) {
  EXPECT_NEAR(dense::f_state<double>().norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::cos(2 * dense::f_beta<double>()), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(std::abs(dense::f_state<double>().dot(dense::f_perp_state<double>())), 0.0, 1e-15);
}

TEST(DenseStates, Cat2OfTIsPhasedBellState) {
  Eigen::VectorXcd cat = dense::cat_t<double>(2);
  Eigen::VectorXcd expect(4);
  expect << 1, 0, 0, C(0, 1);
  expect /= std::sqrt(2.0);
  EXPECT_LT((cat - expect).norm(), 1e-15);
}

TEST(DenseStates, Cat1IsZeroKet) {
  EXPECT_LT((dense::cat_t<double>(1) - dense::zero_ket<double>(1)).norm(), 1e-15);
  EXPECT_LT((dense::cat_r<double>(0.37, 1) - dense::zero_ket<double>(1)).norm(), 1e-15);
}

TEST(DenseStates, CapIsEnforced) {
  EXPECT_THROW(dense::zero_ket<double>(25), std::length_error);
  EXPECT_THROW(dense::cat_t<double>(10, 8), std::length_error);
}

TEST(DenseGates, HadamardMakesPlus) {
  Eigen::VectorXcd v = dense::apply_gates(dense::zero_ket<double>(1), {Gate{GateKind::H, 0}});
  EXPECT_NEAR(std::abs(v[0] - 1 / std::sqrt(2.0)), 0.0, 1e-16);
  EXPECT_NEAR(std::abs(v[1] - 1 / std::sqrt(2.0)), 0.0, 1e-16);
}

TEST(DenseGates, BellPreparationUsesLittleEndianIndices) {
  Eigen::VectorXcd v = dense::apply_gates(dense::zero_ket<double>(3), {{GateKind::H, 0}, {GateKind::CX, 0, 2}});
  EXPECT_NEAR(std::abs(v[0]), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(v[5]), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
}

TEST(DenseGates, AllSingleQubitMatricesAreUnitary) {
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z, GateKind::A,
                     GateKind::Adg, GateKind::T, GateKind::Tdg, GateKind::RZ}) {
    Eigen::Matrix2cd u = dense::gate_matrix<double>(k, 0.81);
    EXPECT_LT((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm(), 1e-15) << gate_name(k);
  }
  Eigen::Matrix2cd rz = dense::gate_matrix<double>(GateKind::RZ, 0.5);
  EXPECT_LT(std::abs(rz(0, 0) - 1.0), 1e-16);
  EXPECT_LT(std::abs(rz(1, 1) - std::polar(1.0, 0.5)), 1e-16);
  EXPECT_LT((dense::gate_matrix<double>(GateKind::T) - dense::gate_matrix<double>(GateKind::RZ, kPi / 4)).norm(),
            1e-16);
}

TEST(DenseGates, RandomCircuitsPreserveNorm) {
  std::mt19937 rng(31);
  const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::T, GateKind::CX, GateKind::CZ, GateKind::RZ, GateKind::Y};
  for (int trial = 0; trial < 20; trial++) {
    size_t n = 2 + rng() % 8;
    std::vector<Gate> gates;
    for (int i = 0; i < 100; i++) {
      Gate g{kinds[rng() % 7], rng() % n, 0, 0.1 * static_cast<double>(rng() % 63)};
      if (is_two_qubit(g.kind)) {
        do g.q1 = rng() % n;
        while (g.q1 == g.q0);
      }
      gates.push_back(g);
    }
    EXPECT_NEAR(dense::apply_gates(dense::zero_ket<double>(n), gates).norm(), 1.0, 1e-12);
  }
}

TEST(DenseOps, KronPutsFirstFactorInLowBits) {
  Eigen::VectorXcd a = dense::basis_ket<double>(1, 1);
  Eigen::VectorXcd b = dense::basis_ket<double>(2, 0);
  Eigen::VectorXcd k = dense::kron(a, b);
  EXPECT_EQ(k.size(), 8);
  EXPECT_NEAR(std::abs(k[1]), 1.0, 1e-16);
}

TEST(DenseOps, PostselectAndPermute) {
  Eigen::VectorXcd v = dense::basis_ket<double>(3, 0b110);
  Eigen::VectorXcd p = dense::postselect(v, 1, true);
  EXPECT_NEAR(std::abs(p[0b10]), 1.0, 1e-16);
  EXPECT_NEAR(dense::postselect(v, 1, false).norm(), 0.0, 1e-16);
  Eigen::VectorXcd q = dense::permute(v, {2, 0, 1});
  EXPECT_NEAR(std::abs(q[0b101]), 1.0, 1e-16);
}

TEST(DenseOps, PauliExpectationsOfBellState) {
  Eigen::VectorXcd bell = dense::apply_gates(dense::zero_ket<double>(2), {{GateKind::H, 0}, {GateKind::CX, 0, 1}});
  EXPECT_NEAR(dense::pauli_expectation(bell, 0b11, 0b00).real(), 1.0, 1e-15);
  EXPECT_NEAR(dense::pauli_expectation(bell, 0b00, 0b11).real(), 1.0, 1e-15);
  EXPECT_NEAR(dense::pauli_expectation(bell, 0b11, 0b11).real(), -1.0, 1e-15);
  EXPECT_NEAR(dense::pauli_expectation(bell, 0b01, 0b00).real(), 0.0, 1e-15);
}
