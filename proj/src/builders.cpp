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

#include "stabrank/builders.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stabrank {

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx expi(double phase) { return std::polar(1.0, phase); }

StabilizerState uniform_state(size_t m) {
  StabilizerState s(m);
  for (size_t q = 0; q < m; q++) {
    s.apply_h(q);
  }
  return s;
}

void apply_all_cz(StabilizerState &s) {
  size_t m = s.num_qubits();
  for (size_t a = 0; a < m; a++) {
    for (size_t b = a + 1; b < m; b++) {
      s.apply_cz(a, b);
    }
  }
}

}  // namespace

bool is_quarter_turn(double phase, int *k, double tol) {
  double r = phase / (kPi / 2);
  double nearest = std::round(r);
  if (std::abs(r - nearest) * (kPi / 2) > tol) {
    return false;
  }
  if (k) {
    *k = static_cast<int>(((static_cast<long long>(nearest) % 4) + 4) % 4);
  }
  return true;
}

StabilizerState even_state(size_t m) {
  if (m == 0) {
    throw std::invalid_argument("even-weight state needs m >= 1");
  }
  std::vector<F2Vector> basis;
  for (size_t j = 1; j < m; j++) {
    F2Vector b(m);
    b.set(0, true);
    b.set(j, true);
    basis.push_back(b);
  }
  StabilizerState s = StabilizerState::affine(basis, F2Vector(m));
  s.scale(Scalar::sqrt2_pow(-static_cast<int>(m - 1)));
  return s;
}

StabilizerState k_state(size_t m) {
  StabilizerState s = even_state(m);
  apply_all_cz(s);
  return s;
}

StabilizerState ghz_state(size_t m, int k) {
  StabilizerState s(m);
  s.apply_h(0);
  for (size_t q = 1; q < m; q++) {
    s.apply_cx(0, q);
  }
  for (int i = 0; i < ((k % 4) + 4) % 4; i++) {
    s.apply_s(0);
  }
  s.scale(Scalar::sqrt2_pow(1));
  return s;
}

Decomposition qubit_decomposition(cplx a, cplx b) {
  Decomposition d(1);
  d.add_term(Scalar::from_complex(a), StabilizerState::basis_state(F2Vector::from_string("0")));
  d.add_term(Scalar::from_complex(b), StabilizerState::basis_state(F2Vector::from_string("1")));
  return d;
}

Decomposition build_t1() {
  Decomposition d(1);
  d.add_term(Scalar(0, -1), StabilizerState::basis_state(F2Vector::from_string("0")));
  d.add_term(Scalar(1, -1), StabilizerState::basis_state(F2Vector::from_string("1")));
  return d;
}

Decomposition build_t2() {
  Decomposition d(2);
  d.add_term(Scalar(0, -2), ghz_state(2, 1));
  StabilizerState flip = ghz_state(2, 0);
  flip.apply_x(0);
  d.add_term(Scalar(1, -2), flip);
  return d;
}

Decomposition build_t3() {
  const cplx wbar = expi(-kPi / 4);
  const cplx i(0, 1);
  Decomposition d(3);
  d.add_term(Scalar(0, -3, 1.0 - wbar), ghz_state(3, 0));
  StabilizerState parity_phase = uniform_state(3);
  for (size_t q = 0; q < 3; q++) {
    parity_phase.apply_s(q);
  }
  StabilizerState weight_phase = parity_phase;
  apply_all_cz(parity_phase);
  d.add_term(Scalar(0, 0, (wbar + i) / 2.0), parity_phase);
  d.add_term(Scalar(0, 0, (wbar - i) / 2.0), weight_phase);
  return d;
}

Decomposition build_cat2() { return Decomposition::single(ghz_state(2, 1), Scalar(0, -1)); }

Decomposition build_cat4() {
  Decomposition d(4);
  d.add_term(Scalar(2, 0), even_state(4));
  d.add_term(Scalar(7, -2), ghz_state(4, 3));
  return d;
}

Decomposition build_cat6() {
  Decomposition d(6);
  d.add_term(Scalar(0, -3), ghz_state(6, 3));
  d.add_term(Scalar(3, -1), even_state(6));
  d.add_term(Scalar(5, -1), k_state(6));
  return d;
}

Decomposition build_cat1_f() {
  const double beta = std::acos(1.0 / std::sqrt(3.0)) / 2;
  const double s = 1.0 / std::sqrt(2.0);
  return qubit_decomposition(s * (std::cos(beta) + std::sin(beta)),
                             s * expi(kPi / 4) * (std::sin(beta) - std::cos(beta)));
}

Decomposition build_cat2_f() { return build_cat2(); }

Decomposition build_cat6_f() {
  const double c = 2.0 / 3.0;
  Decomposition d(6);
  d.add_term(Scalar(0, -1, c), ghz_state(6, 3));
  StabilizerState psi2 = uniform_state(6);
  for (size_t q = 0; q < 6; q++) {
    psi2.apply_s(q);
    psi2.apply_z(q);
  }
  apply_all_cz(psi2);
  d.add_term(Scalar(3, 0, c), psi2);
  StabilizerState psi3 = uniform_state(6);
  for (size_t q = 0; q < 6; q++) {
    psi3.apply_z(q);
  }
  apply_all_cz(psi3);
  d.add_term(Scalar(5, 0, c), psi3);
  return d;
}

Decomposition build_r1(double theta) {
  Decomposition d(1);
  d.add_term(Scalar(0, -1), StabilizerState::basis_state(F2Vector::from_string("0")));
  d.add_term(Scalar(0, -1, expi(theta)), StabilizerState::basis_state(F2Vector::from_string("1")));
  return d;
}

Decomposition build_r2(double theta) {
  Decomposition d(2);
  int k = 0;
  if (is_quarter_turn(2 * theta, &k)) {
    d.add_term(Scalar(0, -2), ghz_state(2, k));
  } else {
    d.add_term(Scalar(0, -2), StabilizerState::basis_state(F2Vector::from_string("00")));
    d.add_term(Scalar(0, -2, expi(2 * theta)), StabilizerState::basis_state(F2Vector::from_string("11")));
  }
  StabilizerState flip = ghz_state(2, 0);
  flip.apply_x(0);
  d.add_term(Scalar(0, -2, expi(theta)), flip);
  return d;
}

Decomposition build_cat2_r(double theta) {
  Decomposition d(2);
  int k = 0;
  if (is_quarter_turn(2 * theta, &k)) {
    d.add_term(Scalar(0, -1), ghz_state(2, k));
  } else {
    d.add_term(Scalar(0, -1), StabilizerState::basis_state(F2Vector::from_string("00")));
    d.add_term(Scalar(0, -1, expi(2 * theta)), StabilizerState::basis_state(F2Vector::from_string("11")));
  }
  return d;
}

Decomposition build_cat6_r(double theta) {
  Decomposition d(6);
  d.add_term(Scalar(0, -5, 1.0 - expi(4 * theta)), StabilizerState::basis_state(F2Vector(6)));
  d.add_term(Scalar(0, -5, expi(6 * theta) - expi(2 * theta)), StabilizerState::basis_state(F2Vector::ones(6)));
  d.add_term(Scalar(0, 0, expi(3 * theta) * std::cos(theta)), even_state(6));
  d.add_term(Scalar(2, 0, expi(3 * theta) * std::sin(theta)), k_state(6));
  return d;
}

Decomposition build_e(size_t m) { return Decomposition::single(even_state(m)); }

Decomposition build_k(size_t m) { return Decomposition::single(k_state(m)); }

std::vector<std::string> builder_names() {
  return {"t1", "t2", "t3", "cat2", "cat4", "cat6", "cat1_F", "cat2_F", "cat6_F",
          "r1", "r2", "cat2_R", "cat6_R", "E", "K"};
}

Decomposition build_named(std::string_view name, const BuilderParams &p) {
  if (name == "t1") return build_t1();
  if (name == "t2") return build_t2();
  if (name == "t3") return build_t3();
  if (name == "cat2") return build_cat2();
  if (name == "cat4") return build_cat4();
  if (name == "cat6") return build_cat6();
  if (name == "cat1_F") return build_cat1_f();
  if (name == "cat2_F") return build_cat2_f();
  if (name == "cat6_F") return build_cat6_f();
  if (name == "r1") return build_r1(p.theta);
  if (name == "r2") return build_r2(p.theta);
  if (name == "cat2_R") return build_cat2_r(p.theta);
  if (name == "cat6_R") return build_cat6_r(p.theta);
  if (name == "E" || name == "K") {
    if (p.m == 0) {
      throw std::invalid_argument(std::string(name) + " needs m >= 1");
    }
    return name == "E" ? build_e(p.m) : build_k(p.m);
  }
  throw std::invalid_argument("unknown builder '" + std::string(name) + "'");
}

}  // namespace stabrank
