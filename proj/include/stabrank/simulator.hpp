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

#ifndef STABRANK_SIMULATOR_HPP
#define STABRANK_SIMULATOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabrank/circuit.hpp"
#include "stabrank/decomposition.hpp"

namespace stabrank {

enum class MagicStrategy { Auto, Chain, Naive };

MagicStrategy strategy_from_name(const std::string &name);
std::string strategy_name(MagicStrategy s);

/// Clifford circuit on n + m qubits; ancilla n + i serves the i-th non-Clifford gate.
/// U|0^n> = 2^{m/2} (I (x) <0^m|) clifford (|0^n> (x) |R_{angles[0]}> ... |R_{angles[m-1]}>).
struct GadgetizedCircuit {
  size_t n = 0;
  size_t m = 0;
  QuantumCircuit clifford;
  std::vector<double> angles;
  std::vector<size_t> data_qubits;

  /// "none", "T" (all angles pi/4 or -pi/4) or "R".
  std::string magic_kind() const;
};

/// T = RZ(pi/4), T^dag = RZ(-pi/4), RZ(theta) = diag(1, e^{i theta}).
GadgetizedCircuit gadgetize(const QuantumCircuit &c);

/// Angle in (-pi, pi].
double normalize_angle(double theta);

/// Ancillas whose angles differ from theta by whole quarter turns; ancilla j of the group
/// holds S^{quarter_turns[j]} |R_theta>.
struct AngleGroup {
  double theta = 0.0;
  std::vector<size_t> ancillas;
  std::vector<int> quarter_turns;
  uint64_t terms = 0;
  std::string construction;
};

struct MagicRegister {
  std::vector<AngleGroup> groups;
  Decomposition state{0};
};

/// Groups angles equal modulo pi/2 in first-appearance order with planned term counts; nothing is built.
std::vector<AngleGroup> plan_magic_register(const std::vector<double> &angles, MagicStrategy strategy);
/// Decomposition of the ancilla register, qubit i holding |R_{angles[i]}>.
MagicRegister build_magic_register(const std::vector<double> &angles, MagicStrategy strategy);

class CircuitSimulator {
 public:
  explicit CircuitSimulator(const QuantumCircuit &c, MagicStrategy strategy = MagicStrategy::Auto);

  size_t num_qubits() const { return gadgets_.n; }
  const GadgetizedCircuit &gadgets() const { return gadgets_; }
  const MagicRegister &magic() const { return magic_; }
  /// U|0^n> as a decomposition over the data qubits.
  const Decomposition &output_state() const { return output_; }

  /// <x|U|0^n>, summed over terms in a fixed order with compensation.
  cplx amplitude(const F2Vector &x) const;
  /// Probability that the listed qubits read `bits`; the other qubits are summed out exactly.
  double probability(const std::vector<size_t> &qubits, const F2Vector &bits) const;

 private:
  GadgetizedCircuit gadgets_;
  MagicRegister magic_;
  Decomposition output_{0};
};

inline constexpr size_t kMaxMarginalQubits = 20;

struct CostReport {
  size_t n = 0;
  size_t m = 0;
  size_t t_count = 0;
  size_t rotation_count = 0;
  uint64_t terms = 1;
  double exponent = 0.0;
  std::string strategy;
  std::vector<AngleGroup> groups;

  nlohmann::json to_json() const;
};

CostReport cost_report(const QuantumCircuit &c, MagicStrategy strategy = MagicStrategy::Auto);

}  // namespace stabrank

#endif
