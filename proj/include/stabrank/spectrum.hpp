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

#ifndef STABRANK_SPECTRUM_HPP
#define STABRANK_SPECTRUM_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "stabrank/decomposition.hpp"

namespace stabrank {

/// Hermitian Pauli i^{x.z} X(x) Z(z).
struct PauliOperator {
  F2Vector x;
  F2Vector z;

  PauliOperator() = default;
  PauliOperator(F2Vector x_, F2Vector z_);
  /// One character per qubit from {I, X, Y, Z}, qubit 0 first.
  static PauliOperator from_string(const std::string &s);
  /// Single-qubit letters at given qubits, e.g. ({X, Y}, {0, 3}) on n qubits.
  static PauliOperator from_sites(size_t n, const std::string &letters, const std::vector<size_t> &qubits);
  size_t num_qubits() const { return x.size(); }
  std::string to_string() const;
};

/// <psi|P|psi>/<psi|psi>.
std::complex<double> pauli_expectation(const Eigen::VectorXcd &psi, const PauliOperator &p);
std::complex<double> pauli_expectation(const StabilizerState &s, const PauliOperator &p);
std::complex<double> pauli_expectation(const Decomposition &d, const PauliOperator &p);

struct SpectrumBucket {
  double value;
  size_t count;
};

struct PauliSpectrum {
  size_t n = 0;
  /// Expectation of P(x, z) at index (x << n) | z; all real for Hermitian P.
  std::vector<double> values;
  double tolerance = 1e-9;

  /// Signed values, ascending.
  std::vector<SpectrumBucket> buckets() const;
  /// Values taken in absolute value, ascending; this multiset is invariant under Cliffords.
  std::vector<SpectrumBucket> abs_buckets() const;
  size_t zero_count() const;
  size_t unit_count() const;
};

inline constexpr size_t kSpectrumCap = 12;

PauliSpectrum full_spectrum(const Eigen::VectorXcd &psi, double tolerance = 1e-9);
bool same_abs_multiset(const PauliSpectrum &a, const PauliSpectrum &b);

/// True iff exactly 2^n Paulis have |<P>| = 1.
bool is_stabilizer_state(const Eigen::VectorXcd &psi, double tolerance = 1e-9);

struct Rank2Form {
  std::vector<Gate> circuit;  // C, in application order
  int a = 0;
  size_t b = 0;
};

/// Clifford C with C|phi1> ~ |0^n> and C|phi2> ~ |1^a 0^b +^{n-a-b}>; a = 0 iff <phi1|phi2> != 0.
Rank2Form canonical_rank2_form(const StabilizerState &phi1, const StabilizerState &phi2);

/// Every n-qubit stabilizer state once up to global phase, normalized; n <= 4.
std::vector<StabilizerState> enumerate_stabilizer_states(size_t n);
/// 2^n prod_{k=1}^n (2^k + 1).
uint64_t stabilizer_state_count(size_t n);

struct CertificateAssertion {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CandidateCount {
  std::string label;
  std::complex<double> gamma;
  bool orthogonal = false;
  size_t zero_count = 0;
  bool multiset_differs = false;
};

struct Cat5Certificate {
  std::vector<CertificateAssertion> assertions;
  size_t cat5_zero_count = 0;
  std::vector<CandidateCount> candidates;
  bool rank_at_least_3 = false;

  nlohmann::json to_json() const;
};

/// |0^5> + g|10+++> for the orthogonal case, |0^5> + g|0++++> otherwise; normalized.
Eigen::VectorXcd cat5_candidate(std::complex<double> gamma, bool orthogonal);
Cat5Certificate cat5_certificate();

}  // namespace stabrank

#endif
