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

#include "stabrank/scalar.hpp"

#include <cmath>
#include <sstream>

namespace stabrank {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Scalar::Scalar(int phase8_, int sqrt2_exp_, cplx factor_)
    : phase8(((phase8_ % 8) + 8) % 8), sqrt2_exp(sqrt2_exp_), factor(factor_) {}

cplx omega_value(int k) {
  static const cplx table[8] = {{1.0, 0.0},       {kInvSqrt2, kInvSqrt2},   {0.0, 1.0},
                                {-kInvSqrt2, kInvSqrt2}, {-1.0, 0.0}, {-kInvSqrt2, -kInvSqrt2},
                                {0.0, -1.0},      {kInvSqrt2, -kInvSqrt2}};
  return table[((k % 8) + 8) % 8];
}

double sqrt2_pow_value(int e) {
  double v = std::ldexp(1.0, e / 2 - (e < 0 && e % 2 != 0 ? 1 : 0));
  if (e % 2 != 0) {
    v *= std::sqrt(2.0);
  }
  return v;
}

cplx Scalar::value() const { return factor * omega_value(phase8) * sqrt2_pow_value(sqrt2_exp); }

double Scalar::abs2() const { return std::norm(factor) * std::ldexp(1.0, sqrt2_exp); }

Scalar Scalar::conj() const { return Scalar((8 - phase8) & 7, sqrt2_exp, std::conj(factor)); }

Scalar &Scalar::operator*=(const Scalar &o) {
  phase8 = (phase8 + o.phase8) & 7;
  sqrt2_exp += o.sqrt2_exp;
  factor *= o.factor;
  return *this;
}

Scalar &Scalar::operator*=(cplx z) {
  factor *= z;
  return *this;
}

Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
Scalar operator*(Scalar a, cplx z) { return a *= z; }

std::string Scalar::to_string() const {
  std::ostringstream out;
  out << "(" << factor.real() << (factor.imag() < 0 ? "" : "+") << factor.imag() << "i)*w^" << phase8
      << "*sqrt2^" << sqrt2_exp;
  return out.str();
}

}  // namespace stabrank
