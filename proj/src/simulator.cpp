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

#include "stabrank/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabrank/builders.hpp"
#include "stabrank/chains.hpp"
#include "stabrank/parallel.hpp"

namespace stabrank {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAngleTol = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kAngleTol; }

enum class GroupKind { T, Tdg, R };

GroupKind group_kind(double theta) {
  if (near(theta, kPi / 4)) return GroupKind::T;
  if (near(theta, -kPi / 4)) return GroupKind::Tdg;
  return GroupKind::R;
}

MagicSpec group_spec(double theta) {
  return group_kind(theta) == GroupKind::R ? MagicSpec::r(theta) : MagicSpec::t();
}

bool stabilizer_angle(double theta) { return is_quarter_turn(theta, nullptr, kAngleTol); }

uint64_t planned_terms(double theta, size_t k, MagicStrategy s, std::string *construction) {
  if (stabilizer_angle(theta)) {
    *construction = "stabilizer product";
    return 1;
  }
  MagicSpec spec = group_spec(theta);
  switch (s) {
    case MagicStrategy::Naive:
      *construction = "product of " + std::to_string(k) + " two-term qubits";
      return k >= 64 ? UINT64_MAX : uint64_t{1} << k;
    case MagicStrategy::Chain:
      if (k >= 2) {
        CatPlan plan = plan_cat(spec, k);
        *construction = "projector x " + plan.describe();
        return plan.predicted_terms * magic_projector(spec).size();
      }
      [[fallthrough]];
    case MagicStrategy::Auto: {
      PowerPlan plan = plan_power(spec, k);
      *construction = plan.describe();
      return plan.predicted_terms;
    }
  }
  return 0;
}

Decomposition group_state(double theta, size_t k, MagicStrategy s) {
  MagicSpec spec = group_spec(theta);
  Decomposition d(k);
  if (stabilizer_angle(theta)) {
    d = r_power(theta, k);
  } else if (s == MagicStrategy::Naive) {
    Decomposition one = spec.family == MagicFamily::T ? build_t1() : build_r1(theta);
    d = one;
    for (size_t i = 1; i < k; i++) d = tensor(d, one);
  } else if (s == MagicStrategy::Chain && k >= 2) {
    d = apply_local_sum(build_cat(spec, k), 0, magic_projector(spec));
    d.scale(Scalar::sqrt2_pow(1));
  } else {
    d = magic_power(spec, k);
  }
  if (group_kind(theta) == GroupKind::Tdg) d = conjugate(d);
  return d;
}

}  // namespace

MagicStrategy strategy_from_name(const std::string &name) {
  if (name == "auto") return MagicStrategy::Auto;
  if (name == "chain") return MagicStrategy::Chain;
  if (name == "naive") return MagicStrategy::Naive;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected auto, chain or naive)");
}

std::string strategy_name(MagicStrategy s) {
  switch (s) {
    case MagicStrategy::Auto:
      return "auto";
    case MagicStrategy::Chain:
      return "chain";
    case MagicStrategy::Naive:
      return "naive";
  }
  return "?";
}

double normalize_angle(double theta) {
  double r = std::remainder(theta, 2 * kPi);
  if (near(r, -kPi)) r = kPi;
  return r;
}

std::string GadgetizedCircuit::magic_kind() const {
  if (m == 0) return "none";
  for (double a : angles) {
    if (group_kind(a) == GroupKind::R) return "R";
  }
  return "T";
}

GadgetizedCircuit gadgetize(const QuantumCircuit &c) {
  GadgetizedCircuit g;
  g.n = c.n;
  g.m = c.non_clifford_count();
  g.clifford.n = c.n + g.m;
  size_t next = c.n;
  for (const Gate &gate : c.gates) {
    double theta = 0.0;
    switch (gate.kind) {
      case GateKind::T:
        theta = kPi / 4;
        break;
      case GateKind::Tdg:
        theta = -kPi / 4;
        break;
      case GateKind::RZ:
        theta = normalize_angle(gate.angle);
        break;
      default:
        g.clifford.append(gate);
        continue;
    }
    g.clifford.append({GateKind::CX, gate.q0, next});
    g.angles.push_back(theta);
    g.data_qubits.push_back(gate.q0);
    next++;
  }
  return g;
}

std::vector<AngleGroup> plan_magic_register(const std::vector<double> &angles, MagicStrategy strategy) {
  std::vector<AngleGroup> groups;
  for (size_t i = 0; i < angles.size(); i++) {
    bool placed = false;
    for (AngleGroup &g : groups) {
      double turns = (angles[i] - g.theta) / (kPi / 2);
      double k = std::round(turns);
      if (std::abs(turns - k) * (kPi / 2) <= kAngleTol) {
        g.ancillas.push_back(i);
        g.quarter_turns.push_back(static_cast<int>(((static_cast<long long>(k) % 4) + 4) % 4));
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({angles[i], {i}, {0}, 0, ""});
  }
  for (AngleGroup &g : groups) {
    g.terms = planned_terms(g.theta, g.ancillas.size(), strategy, &g.construction);
  }
  return groups;
}

MagicRegister build_magic_register(const std::vector<double> &angles, MagicStrategy strategy) {
  MagicRegister reg;
  reg.groups = plan_magic_register(angles, strategy);
  if (angles.empty()) return reg;
  std::vector<size_t> perm(angles.size());
  size_t offset = 0;
  bool first = true;
  for (AngleGroup &g : reg.groups) {
    Decomposition d = group_state(g.theta, g.ancillas.size(), strategy);
    for (size_t j = 0; j < g.ancillas.size(); j++) {
      for (int t = 0; t < g.quarter_turns[j]; t++) d.apply(Gate{GateKind::S, j});
    }
    g.terms = d.size();
    for (size_t j = 0; j < g.ancillas.size(); j++) perm[g.ancillas[j]] = offset + j;
    offset += g.ancillas.size();
    reg.state = first ? std::move(d) : tensor(reg.state, d);
    first = false;
  }
  reg.state = permute_qubits(reg.state, perm);
  return reg;
}

CircuitSimulator::CircuitSimulator(const QuantumCircuit &c, MagicStrategy strategy)
    : gadgets_(gadgetize(c)), magic_(build_magic_register(gadgets_.angles, strategy)), output_(c.n) {
  const size_t n = gadgets_.n;
  const size_t m = gadgets_.m;
  if (m == 0) {
    StabilizerState s(n);
    s.apply(gadgets_.clifford.gates);
    output_.add_term(Scalar::one(), std::move(s));
    return;
  }
  const Decomposition &reg = magic_.state;
  std::vector<Term> slots(reg.size(), Term{Scalar::zero(), StabilizerState::zero_state(n)});
  const StabilizerState data(n);
  parallel_for(reg.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; i++) {
      StabilizerState s = tensor(data, reg[i].state);
      s.apply(gadgets_.clifford.gates);
      for (size_t q = n + m; q-- > n;) s.postselect_in_place(q, false);
      slots[i] = Term{reg[i].coeff * Scalar::sqrt2_pow(static_cast<int>(m)), std::move(s)};
    }
  });
  output_.reserve(slots.size());
  for (Term &t : slots) output_.add_term(t.coeff, std::move(t.state));
}

cplx CircuitSimulator::amplitude(const F2Vector &x) const {
  if (x.size() != num_qubits()) {
    throw std::invalid_argument("bit string has " + std::to_string(x.size()) + " bits, circuit has " +
                                std::to_string(num_qubits()) + " qubits");
  }
  std::vector<cplx> values(output_.size());
  parallel_for(values.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; i++) values[i] = (output_[i].coeff * output_[i].state.amplitude_exact(x)).value();
  });
  CompensatedSum acc;
  for (const cplx &v : values) acc.add(v);
  return acc.value();
}

double CircuitSimulator::probability(const std::vector<size_t> &qubits, const F2Vector &bits) const {
  const size_t n = num_qubits();
  if (qubits.size() != bits.size()) throw std::invalid_argument("one bit per marginal qubit");
  std::vector<bool> fixed(n, false);
  F2Vector x(n);
  for (size_t i = 0; i < qubits.size(); i++) {
    if (qubits[i] >= n) throw std::out_of_range("marginal qubit out of range");
    if (fixed[qubits[i]]) throw std::invalid_argument("marginal qubit listed twice");
    fixed[qubits[i]] = true;
    x.set(qubits[i], bits.get(i));
  }
  std::vector<size_t> free;
  for (size_t q = 0; q < n; q++) {
    if (!fixed[q]) free.push_back(q);
  }
  if (free.size() > kMaxMarginalQubits) {
    throw std::length_error("marginal sums over " + std::to_string(free.size()) + " qubits (limit " +
                            std::to_string(kMaxMarginalQubits) +
                            "); use smaller marginal: approximate norm estimation is not implemented");
  }
  CompensatedSum acc;
  for (uint64_t c = 0; c < (uint64_t{1} << free.size()); c++) {
    for (size_t i = 0; i < free.size(); i++) x.set(free[i], (c >> i) & 1);
    acc.add(std::norm(amplitude(x)));
  }
  return acc.value().real();
}

CostReport cost_report(const QuantumCircuit &c, MagicStrategy strategy) {
  GadgetizedCircuit g = gadgetize(c);
  CostReport r;
  r.n = c.n;
  r.m = g.m;
  r.t_count = c.t_count();
  r.rotation_count = c.rotation_count();
  r.strategy = strategy_name(strategy);
  r.groups = plan_magic_register(g.angles, strategy);
  for (const AngleGroup &grp : r.groups) {
    r.terms = grp.terms != 0 && r.terms > UINT64_MAX / grp.terms ? UINT64_MAX : r.terms * grp.terms;
  }
  r.exponent = r.m == 0 ? 0.0 : std::log2(static_cast<double>(r.terms)) / static_cast<double>(r.m);
  return r;
}

nlohmann::json CostReport::to_json() const {
  nlohmann::json groups_json = nlohmann::json::array();
  for (const AngleGroup &g : groups) {
    groups_json.push_back(
        {{"theta", g.theta},
                           {"ancillas", g.ancillas},
                           {"quarter_turns", g.quarter_turns},
                           {"terms", g.terms},
                           {"construction", g.construction}});
  }
  return {{"n", n},
          {"m", m},
          {"t_count", t_count},
          {"rotation_count", rotation_count},
          {"terms", terms},
          {"exponent", exponent},
          {"strategy", strategy},
          {"groups", groups_json}};
}

}  // namespace stabrank
