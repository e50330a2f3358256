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

#ifndef STABRANK_SCALAR_HPP
#define STABRANK_SCALAR_HPP

#include <complex>
#include <string>

namespace stabrank {

using cplx = std::complex<double>;

/// factor * exp(i pi phase8 / 4) * sqrt(2)^sqrt2_exp.
/// The power of sqrt(2) is exact, so long chains of 2^{-1/2} factors never underflow.
struct Scalar {
  int phase8 = 0;
  int sqrt2_exp = 0;
  cplx factor{1.0, 0.0};

  Scalar() = default;
  Scalar(int phase8_, int sqrt2_exp_, cplx factor_ = {1.0, 0.0});
  static Scalar one() { return Scalar(); }
  static Scalar zero() { return Scalar(0, 0, cplx{0.0, 0.0}); }
  /// Wraps a floating complex value with no exact part.
  static Scalar from_complex(cplx z) { return Scalar(0, 0, z); }
  static Scalar omega(int k) { return Scalar(k, 0); }
  static Scalar sqrt2_pow(int e) { return Scalar(0, e); }

  bool is_zero() const { return factor == cplx{0.0, 0.0}; }
  cplx value() const;
  double abs2() const;
  Scalar conj() const;

  Scalar &operator*=(const Scalar &o);
  Scalar &operator*=(cplx z);
  Scalar &mul_i(int k = 1) {
    phase8 = (phase8 + 2 * k) & 7;
    return *this;
  }
  Scalar &negate() {
    phase8 = (phase8 + 4) & 7;
    return *this;
  }

  std::string to_string() const;
};

Scalar operator*(Scalar a, const Scalar &b);
Scalar operator*(Scalar a, cplx z);

/// exp(i pi k / 4) exactly on the unit circle.
cplx omega_value(int k);
double sqrt2_pow_value(int e);

}  // namespace stabrank

#endif
