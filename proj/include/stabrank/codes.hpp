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

#ifndef STABRANK_CODES_HPP
#define STABRANK_CODES_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabrank/decomposition.hpp"
#include "stabrank/f2.hpp"

namespace stabrank {

/// Binary linear code of length m and dimension k; G is a k x m full-rank generator.
struct LinearCode {
  size_t m = 0;
  size_t k = 0;
  F2Matrix G;

  /// Dependent rows are dropped (G is replaced by its nonzero rref rows).
  static LinearCode from_generator(const F2Matrix &g);
  static LinearCode repetition(size_t m);
  static LinearCode zero(size_t m);
  static LinearCode full(size_t m);

  std::vector<F2Vector> basis() const;
  bool contains(const F2Vector &x) const;
  /// Equality of row spaces.
  bool same_code(const LinearCode &other) const;
};

/// Evaluations of all monomials of degree <= a in b variables; the point index is the bit
/// pattern of the variables, so m = 2^b.
LinearCode reed_muller(size_t a, size_t b);
LinearCode dual(const LinearCode &code);

/// ceil(b/(b-a-1)) >= 4, read as divisibility of every dual weight by 8. For a = b the dual
/// is {0}; for a = b-1 it is the repetition code of length 2^b.
bool rm_stabilizer_condition(size_t a, size_t b);

enum class CodeStateMethod { MagicBasis, DualPhase };

/// 2^{-k/2} sum_{x in L} |x^>, with |0^> = |T> and |1^> = |T_perp>, or the equal vector
/// 2^{(k-m)/2} sum_{x in L_perp} e^{i pi |x|/4} |x>.
Eigen::VectorXcd code_state_dense(const LinearCode &code, CodeStateMethod method = CodeStateMethod::MagicBasis,
                                  size_t cap = 24);

struct CodeDecompositionInfo {
  std::string method;
  size_t terms = 0;
};

/// Exact decomposition of the normalized code state; never more than 2^{m-k} terms.
Decomposition code_state_decomposition(const LinearCode &code, CodeDecompositionInfo *info = nullptr);

struct PrefixContraction {
  std::vector<size_t> permutation;  // new qubit i is old qubit permutation[i]
  std::complex<double> constant;    // (<T|^k (x) I)|L^> = constant |T>^{m-k}
  double residual = 0.0;            // norm of what is left after removing constant |T>^{m-k}
  bool proportional = false;
};

/// Moves the pivot columns of rref(G) to the front and contracts them with <T|.
PrefixContraction contract_T_prefix(const LinearCode &code, size_t cap = 24);

/// log2(chi_upper)/(m - 2k). Requires 2k < m and chi_upper >= 1.
double theorem5_bound(const LinearCode &code, double chi_upper);

}  // namespace stabrank

#endif
