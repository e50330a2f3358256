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

#ifndef STABRANK_BUILDERS_HPP
#define STABRANK_BUILDERS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "stabrank/decomposition.hpp"

namespace stabrank {

/// 2^{-(m-1)/2} sum over even-weight x of |x>.
StabilizerState even_state(size_t m);
/// prod_{i<j} CZ_ij applied to even_state(m).
StabilizerState k_state(size_t m);
/// |0^m> + i^k |1^m>, unnormalized.
StabilizerState ghz_state(size_t m, int k);

Decomposition build_t1();
Decomposition build_t2();
Decomposition build_t3();
Decomposition build_cat2();
Decomposition build_cat4();
Decomposition build_cat6();
Decomposition build_cat1_f();
Decomposition build_cat2_f();
Decomposition build_cat6_f();
Decomposition build_r1(double theta);
Decomposition build_r2(double theta);
Decomposition build_cat2_r(double theta);
Decomposition build_cat6_r(double theta);
Decomposition build_e(size_t m);
Decomposition build_k(size_t m);

/// a|0> + b|1>, one term per nonzero entry.
Decomposition qubit_decomposition(cplx a, cplx b);

struct BuilderParams {
  size_t m = 0;
  double theta = 0.0;
};

/// Names: t1 t2 t3 cat2 cat4 cat6 cat1_F cat2_F cat6_F r1 r2 cat2_R cat6_R E K.
/// Throws std::invalid_argument for an unknown name.
Decomposition build_named(std::string_view name, const BuilderParams &params = {});
std::vector<std::string> builder_names();

/// True when e^{i phase} is a power of i to within tol; k receives the power.
bool is_quarter_turn(double phase, int *k, double tol = 1e-12);

}  // namespace stabrank

#endif
