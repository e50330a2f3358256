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

#ifndef STABRANK_GATE_HPP
#define STABRANK_GATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabrank {

enum class GateKind { H, S, Sdg, X, Y, Z, CX, CZ, A, Adg, T, Tdg, RZ };

struct Gate {
  GateKind kind;
  size_t q0 = 0;
  size_t q1 = 0;
  /// Rotation angle; meaningful for RZ only. RZ(theta) = diag(1, e^{i theta}).
  double angle = 0.0;
};

bool is_two_qubit(GateKind k);
bool is_clifford(GateKind k);
std::string_view gate_name(GateKind k);
/// Case-insensitive lookup; accepts aliases such as CNOT, SDG, S_DAG, TDG.
std::optional<GateKind> gate_from_name(std::string_view name);
/// Inverse gate (H, X, Y, Z, CX, CZ are self-inverse).
Gate inverse(const Gate &g);
std::vector<Gate> inverse(const std::vector<Gate> &gates);

}  // namespace stabrank

#endif
