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

#ifndef STABRANK_CHAINS_HPP
#define STABRANK_CHAINS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stabrank/decomposition.hpp"

namespace stabrank {

enum class MagicFamily { T, F, R };

/// Single-qubit magic state |psi> and its orthogonal partner; theta is used by R only.
struct MagicSpec {
  MagicFamily family = MagicFamily::T;
  double theta = 0.0;

  static MagicSpec t() { return {MagicFamily::T, 0.0}; }
  static MagicSpec f() { return {MagicFamily::F, 0.0}; }
  static MagicSpec r(double theta) { return {MagicFamily::R, theta}; }
  std::string name() const;
};

/// Decomposition of |cat_k(psi)> for a block size the family provides (see block_sizes).
Decomposition cat_block(const MagicSpec &spec, size_t k);
std::vector<size_t> block_sizes(const MagicSpec &spec);

/// |psi><psi| as a sum of single-qubit Cliffords.
std::vector<LocalTerm> magic_projector(const MagicSpec &spec);
/// Searches the 24 single-qubit Cliffords for the shortest expansion of |psi><psi|
/// (pairs first, then triples). Returns an empty list when none fits to 1e-10.
std::vector<LocalTerm> clifford_scan_projector(std::complex<double> a, std::complex<double> b);
/// The 24 single-qubit Cliffords modulo phase, as gate words over {H, S}.
std::vector<std::vector<GateKind>> single_qubit_cliffords();

/// Cat assembly program. A plan starts with a ket; each bra consumes the last open qubit of
/// the structure, then each further leg attaches to a fresh ket's first qubit (LegNew) or to
/// another open qubit of the structure (LegSelf).
struct CatStep {
  enum class Kind { Ket, Bra, LegNew, LegSelf };
  Kind kind;
  size_t block = 0;
};

struct CatPlan {
  MagicSpec spec;
  size_t m = 0;
  std::vector<CatStep> steps;
  uint64_t predicted_terms = 0;
  size_t contracted_qubits = 0;
  std::string describe() const;
};

/// Cheapest plan for |cat_m>, ties broken toward fewer contracted qubits.
CatPlan plan_cat(const MagicSpec &spec, size_t m);
/// Builds the planned decomposition, rescaled to equal |cat_m> exactly.
Decomposition execute_cat_plan(const CatPlan &plan);
Decomposition build_cat(const MagicSpec &spec, size_t m);

struct PowerPlan {
  enum class Kind { Leaf, Projected, Product, StabilizerProduct };
  Kind kind = Kind::Leaf;
  MagicSpec spec;
  size_t m = 0;
  uint64_t predicted_terms = 0;
  std::string leaf;
  CatPlan cat;
  std::vector<PowerPlan> parts;
  std::string describe() const;
};

PowerPlan plan_power(const MagicSpec &spec, size_t m);
Decomposition execute_power_plan(const PowerPlan &plan);
Decomposition magic_power(const MagicSpec &spec, size_t m);

/// ell cat6 blocks joined by ell-1 <cat2| bonds; exactly 3^ell terms for |cat_{4 ell + 2}>.
Decomposition chain_T(size_t ell);
/// 5t+1 cat6(R) kets and t cat6(R) bras; |cat_{24t+6}(R_theta)> with at most 4^{6t+1} terms.
Decomposition chain_R(double theta, size_t t);
CatPlan chain_T_plan(size_t ell);
CatPlan chain_R_plan(double theta, size_t t);

Decomposition t_power(size_t m);
Decomposition f_power(size_t m);
Decomposition r_power(double theta, size_t m);

struct SymmetricPowerReport {
  std::vector<double> thetas;
  std::vector<std::complex<double>> coefficients;
  double residual = 0.0;
};

/// |psi>^m = sum_i c_i |R_{theta_i}>^m with theta_i = 2 pi i/(m+1), i = 1..m+1.
Decomposition symmetric_power(std::complex<double> a, std::complex<double> b, size_t m,
                              SymmetricPowerReport *report = nullptr);

}  // namespace stabrank

#endif
