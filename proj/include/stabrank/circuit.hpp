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

#ifndef STABRANK_CIRCUIT_HPP
#define STABRANK_CIRCUIT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stabrank/gate.hpp"

namespace stabrank {

struct QuantumCircuit {
  size_t n = 0;
  std::vector<Gate> gates;

  size_t t_count() const;
  size_t rotation_count() const;
  /// Number of non-Clifford gates (T, T^dag, RZ).
  size_t non_clifford_count() const;
  void append(const Gate &g);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// Format: "qubits N" first, then one gate per line ("H 0", "CX 0 1", "RZ(0.3) 2"); '#' starts a comment.
QuantumCircuit parse_circuit(std::string_view text);
std::string format_circuit(const QuantumCircuit &c);

}  // namespace stabrank

#endif
