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

#include "stabrank/json_io.hpp"

#include <fstream>

namespace stabrank {

namespace {

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) {
    throw JsonFormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const json &j, const char *key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception &e) {
    throw JsonFormatError(std::string("field '") + key + "': " + e.what());
  }
}

F2Vector bits(const std::string &s, size_t len, const char *what) {
  if (s.size() != len) {
    throw JsonFormatError(std::string(what) + " has length " + std::to_string(s.size()) + ", expected " +
                          std::to_string(len));
  }
  try {
    return F2Vector::from_string(s);
  } catch (const std::exception &e) {
    throw JsonFormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json scalar_to_json(const Scalar &s) {
  return {{"re", s.factor.real()}, {"im", s.factor.imag()}, {"sqrt2_exponent", s.sqrt2_exp}, {"phase8", s.phase8}};
}

Scalar scalar_from_json(const json &j) {
  int phase8 = j.contains("phase8") ? get_as<int>(j, "phase8") : 0;
  int e = j.contains("sqrt2_exponent") ? get_as<int>(j, "sqrt2_exponent") : 0;
  return Scalar(phase8, e, cplx(get_as<double>(j, "re"), get_as<double>(j, "im")));
}

json state_to_json(const StabilizerState &s) {
  AffineForm f = s.affine_form();
  json basis = json::array();
  for (const F2Vector &b : f.basis) basis.push_back(b.to_string());
  json q = json::array();
  for (size_t r = 0; r < f.q_upper.rows(); r++) q.push_back(f.q_upper.row(r).to_string());
  return {{"n", f.n},         {"is_zero", f.is_zero}, {"basis", basis},
          {"offset", f.offset.to_string()}, {"l", f.l.to_string()}, {"q", q},
          {"scalar", scalar_to_json(f.scalar)}};
}

StabilizerState state_from_json(const json &j) {
  AffineForm f;
  f.n = get_as<size_t>(j, "n");
  f.is_zero = j.contains("is_zero") && get_as<bool>(j, "is_zero");
  if (f.is_zero) {
    return StabilizerState::zero_state(f.n);
  }
  const json &basis = field(j, "basis");
  if (!basis.is_array()) throw JsonFormatError("'basis' must be an array");
  for (const json &row : basis) {
    if (!row.is_string()) throw JsonFormatError("basis rows must be bit strings");
    f.basis.push_back(bits(row.get<std::string>(), f.n, "basis row"));
  }
  f.offset = bits(get_as<std::string>(j, "offset"), f.n, "offset");
  f.l = bits(get_as<std::string>(j, "l"), f.n, "l");
  const json &q = field(j, "q");
  if (!q.is_array() || q.size() != f.n) throw JsonFormatError("'q' must hold one row per qubit");
  f.q_upper = F2Matrix(f.n, f.n);
  for (size_t r = 0; r < f.n; r++) {
    if (!q[r].is_string()) throw JsonFormatError("q rows must be bit strings");
    F2Vector row = bits(q[r].get<std::string>(), f.n, "q row");
    for (size_t c = 0; c < r; c++) {
      if (row.get(c)) throw JsonFormatError("q must be upper triangular");
    }
    f.q_upper.set_row(r, row);
  }
  f.scalar = scalar_from_json(field(j, "scalar"));
  try {
    return StabilizerState::from_affine_form(f);
  } catch (const std::exception &e) {
    throw JsonFormatError(std::string("invalid stabilizer state: ") + e.what());
  }
}

json decomposition_to_json(const Decomposition &d, const json &target) {
  json terms = json::array();
  for (const Term &t : d.terms()) {
    terms.push_back({{"coeff", scalar_to_json(t.coeff)}, {"state", state_to_json(t.state)}});
  }
  json out = {{"version", kDecompositionFormatVersion}, {"n", d.num_qubits()}, {"terms", terms}};
  if (!target.is_null()) out["target"] = target;
  return out;
}

Decomposition decomposition_from_json(const json &j) {
  int version = get_as<int>(j, "version");
  if (version != kDecompositionFormatVersion) {
    throw JsonFormatError("unsupported decomposition version " + std::to_string(version));
  }
  size_t n = get_as<size_t>(j, "n");
  const json &terms = field(j, "terms");
  if (!terms.is_array()) throw JsonFormatError("'terms' must be an array");
  Decomposition d(n);
  d.reserve(terms.size());
  for (const json &t : terms) {
    StabilizerState s = state_from_json(field(t, "state"));
    if (s.num_qubits() != n) throw JsonFormatError("term qubit count differs from n");
    d.add_term(scalar_from_json(field(t, "coeff")), std::move(s));
  }
  return d;
}

void write_json_file(const std::string &path, const json &j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(1) << "\n";
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw JsonFormatError("'" + path + "': " + e.what());
  }
}

}  // namespace stabrank
