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

#include "stabrank/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace stabrank {

bool is_two_qubit(GateKind k) { return k == GateKind::CX || k == GateKind::CZ; }

bool is_clifford(GateKind k) { return k != GateKind::T && k != GateKind::Tdg && k != GateKind::RZ; }

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::Sdg:
      return "SDG";
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::CX:
      return "CX";
    case GateKind::CZ:
      return "CZ";
    case GateKind::A:
      return "A";
    case GateKind::Adg:
      return "ADG";
    case GateKind::T:
      return "T";
    case GateKind::Tdg:
      return "TDG";
    case GateKind::RZ:
      return "RZ";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  std::string u(name);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  if (u == "H") return GateKind::H;
  if (u == "S") return GateKind::S;
  if (u == "SDG" || u == "S_DAG" || u == "S†") return GateKind::Sdg;
  if (u == "X") return GateKind::X;
  if (u == "Y") return GateKind::Y;
  if (u == "Z") return GateKind::Z;
  if (u == "CX" || u == "CNOT") return GateKind::CX;
  if (u == "CZ") return GateKind::CZ;
  if (u == "A") return GateKind::A;
  if (u == "ADG" || u == "A_DAG") return GateKind::Adg;
  if (u == "T") return GateKind::T;
  if (u == "TDG" || u == "T_DAG" || u == "T†") return GateKind::Tdg;
  if (u == "RZ") return GateKind::RZ;
  return std::nullopt;
}

Gate inverse(const Gate &g) {
  Gate r = g;
  switch (g.kind) {
    case GateKind::S:
      r.kind = GateKind::Sdg;
      break;
    case GateKind::Sdg:
      r.kind = GateKind::S;
      break;
    case GateKind::A:
      r.kind = GateKind::Adg;
      break;
    case GateKind::Adg:
      r.kind = GateKind::A;
      break;
    case GateKind::T:
      r.kind = GateKind::Tdg;
      break;
    case GateKind::Tdg:
      r.kind = GateKind::T;
      break;
    case GateKind::RZ:
      r.angle = -g.angle;
      break;
    default:
      break;
  }
  return r;
}

std::vector<Gate> inverse(const std::vector<Gate> &gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return out;
}

size_t QuantumCircuit::t_count() const {
  return std::count_if(gates.begin(), gates.end(),
                       [](const Gate &g) { return g.kind == GateKind::T || g.kind == GateKind::Tdg; });
}

size_t QuantumCircuit::rotation_count() const {
  return std::count_if(gates.begin(), gates.end(), [](const Gate &g) { return g.kind == GateKind::RZ; });
}

size_t QuantumCircuit::non_clifford_count() const { return t_count() + rotation_count(); }

void QuantumCircuit::append(const Gate &g) {
  if (g.q0 >= n || (is_two_qubit(g.kind) && (g.q1 >= n || g.q1 == g.q0))) {
    throw std::out_of_range("gate " + std::string(gate_name(g.kind)) + " acts outside the register");
  }
  gates.push_back(g);
}

namespace {

std::vector<std::string> split_ws(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

size_t parse_index(const std::string &tok, size_t line) {
  size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected a qubit index, got '" + tok + "'");
  }
  return v;
}

double parse_angle(const std::string &tok, size_t line) {
  const char *begin = tok.c_str();
  char *end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError(line, "malformed angle '" + tok + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(line, "angle is not finite");
  }
  return v;
}

}  // namespace

QuantumCircuit parse_circuit(std::string_view text) {
  QuantumCircuit c;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    lineno++;
    auto hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.resize(hash);
    }
    std::vector<std::string> tok = split_ws(raw);
    if (tok.empty()) {
      continue;
    }
    if (!have_header) {
      if (tok[0] != "qubits" || tok.size() != 2) {
        throw ParseError(lineno, "first statement must be 'qubits N'");
      }
      c.n = parse_index(tok[1], lineno);
      have_header = true;
      continue;
    }
    std::string name = tok[0];
    Gate g{GateKind::H};
    auto paren = name.find('(');
    if (paren != std::string::npos) {
      if (name.back() != ')') {
        throw ParseError(lineno, "unterminated angle in '" + name + "'");
      }
      std::string head = name.substr(0, paren);
      auto kind = gate_from_name(head);
      if (!kind || *kind != GateKind::RZ) {
        throw ParseError(lineno, "only RZ takes an angle, got '" + head + "'");
      }
      g.kind = GateKind::RZ;
      g.angle = parse_angle(name.substr(paren + 1, name.size() - paren - 2), lineno);
    } else {
      auto kind = gate_from_name(name);
      if (!kind || *kind == GateKind::A || *kind == GateKind::Adg) {
        throw ParseError(lineno, "unknown gate '" + name + "'");
      }
      if (*kind == GateKind::RZ) {
        throw ParseError(lineno, "RZ requires an angle, e.g. RZ(0.5)");
      }
      g.kind = *kind;
    }
    size_t arity = is_two_qubit(g.kind) ? 2 : 1;
    if (tok.size() != arity + 1) {
      throw ParseError(lineno, std::string(gate_name(g.kind)) + " takes " + std::to_string(arity) + " qubit index(es)");
    }
    g.q0 = parse_index(tok[1], lineno);
    if (arity == 2) {
      g.q1 = parse_index(tok[2], lineno);
      if (g.q1 == g.q0) {
        throw ParseError(lineno, "two-qubit gate needs distinct qubits");
      }
    }
    if (g.q0 >= c.n || (arity == 2 && g.q1 >= c.n)) {
      throw ParseError(lineno, "qubit index out of range (register has " + std::to_string(c.n) + " qubits)");
    }
    c.gates.push_back(g);
  }
  if (!have_header) {
    throw ParseError(lineno, "missing 'qubits N' header");
  }
  return c;
}

std::string format_circuit(const QuantumCircuit &c) {
  std::ostringstream out;
  out << "qubits " << c.n << "\n";
  for (const Gate &g : c.gates) {
    if (g.kind == GateKind::RZ) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "RZ(%.17g)", g.angle);
      out << buf << " " << g.q0 << "\n";
    } else if (is_two_qubit(g.kind)) {
      out << gate_name(g.kind) << " " << g.q0 << " " << g.q1 << "\n";
    } else {
      out << gate_name(g.kind) << " " << g.q0 << "\n";
    }
  }
  return out.str();
}

}  // namespace stabrank
