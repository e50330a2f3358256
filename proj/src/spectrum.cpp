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

#include "stabrank/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "stabrank/dense.hpp"
#include "stabrank/parallel.hpp"

namespace stabrank {

namespace {

uint64_t mask_of(const F2Vector &v) { return v.to_word(); }

void require_spectrum_size(size_t n) {
  if (n > kSpectrumCap) {
    throw std::length_error("Pauli spectrum of " + std::to_string(n) + " qubits exceeds cap " +
                            std::to_string(kSpectrumCap));
  }
}

size_t qubits_of(const Eigen::VectorXcd &psi) {
  if (psi.size() == 0 || (psi.size() & (psi.size() - 1)) != 0) {
    throw std::invalid_argument("state vector length must be a power of two");
  }
  return static_cast<size_t>(std::countr_zero(static_cast<uint64_t>(psi.size())));
}

std::vector<SpectrumBucket> bucketize(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<SpectrumBucket> out;
  for (double x : v) {
    if (out.empty() || x - out.back().value > tol) {
      out.push_back({x, 1});
    } else {
      out.back().count++;
    }
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

PauliOperator::PauliOperator(F2Vector x_, F2Vector z_) : x(std::move(x_)), z(std::move(z_)) {
  if (x.size() != z.size()) throw std::invalid_argument("Pauli masks differ in length");
}

PauliOperator PauliOperator::from_string(const std::string &s) {
  F2Vector x(s.size()), z(s.size());
  for (size_t i = 0; i < s.size(); i++) {
    switch (s[i]) {
      case 'I':
        break;
      case 'X':
        x.set(i, true);
        break;
      case 'Y':
        x.set(i, true);
        z.set(i, true);
        break;
      case 'Z':
        z.set(i, true);
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli letter '") + s[i] + "'");
    }
  }
  return {x, z};
}

PauliOperator PauliOperator::from_sites(size_t n, const std::string &letters, const std::vector<size_t> &qubits) {
  if (letters.size() != qubits.size()) throw std::invalid_argument("one qubit per Pauli letter");
  std::string s(n, 'I');
  for (size_t i = 0; i < qubits.size(); i++) {
    if (qubits[i] >= n) throw std::out_of_range("Pauli qubit out of range");
    s[qubits[i]] = letters[i];
  }
  return from_string(s);
}

std::string PauliOperator::to_string() const {
  std::string s(x.size(), 'I');
  for (size_t i = 0; i < x.size(); i++) {
    s[i] = x.get(i) ? (z.get(i) ? 'Y' : 'X') : (z.get(i) ? 'Z' : 'I');
  }
  return s;
}

std::complex<double> pauli_expectation(const Eigen::VectorXcd &psi, const PauliOperator &p) {
  if (qubits_of(psi) != p.num_qubits()) throw std::invalid_argument("Pauli and state sizes differ");
  if (psi.squaredNorm() == 0.0) throw std::invalid_argument("expectation in the zero state");
  return dense::pauli_expectation<double>(psi, mask_of(p.x), mask_of(p.z));
}

std::complex<double> pauli_expectation(const StabilizerState &s, const PauliOperator &p) {
  return pauli_expectation(s.to_dense(kDefaultDenseCap), p);
}

std::complex<double> pauli_expectation(const Decomposition &d, const PauliOperator &p) {
  return pauli_expectation(to_dense(d, kDefaultDenseCap), p);
}

std::vector<SpectrumBucket> PauliSpectrum::buckets() const { return bucketize(values, tolerance); }

std::vector<SpectrumBucket> PauliSpectrum::abs_buckets() const {
  std::vector<double> a(values.size());
  std::transform(values.begin(), values.end(), a.begin(), [](double v) { return std::abs(v); });
  return bucketize(std::move(a), tolerance);
}

size_t PauliSpectrum::zero_count() const {
  return static_cast<size_t>(std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v) <= tolerance; }));
}

size_t PauliSpectrum::unit_count() const {
  return static_cast<size_t>(
      std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(std::abs(v) - 1.0) <= tolerance; }));
}

PauliSpectrum full_spectrum(const Eigen::VectorXcd &psi, double tolerance) {
  const size_t n = qubits_of(psi);
  require_spectrum_size(n);
  const double norm2 = psi.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("spectrum of the zero state");
  const uint64_t dim = uint64_t{1} << n;
  PauliSpectrum out;
  out.n = n;
  out.tolerance = tolerance;
  out.values.assign(dim * dim, 0.0);
  const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  parallel_for(dim, [&](size_t b, size_t e) {
    std::vector<std::complex<double>> f(dim);
    for (uint64_t x = b; x < e; x++) {
      for (uint64_t j = 0; j < dim; j++) f[j] = std::conj(psi[static_cast<Eigen::Index>(j ^ x)]) * psi[static_cast<Eigen::Index>(j)];
      for (uint64_t h = 1; h < dim; h <<= 1) {
        for (uint64_t i = 0; i < dim; i += h << 1) {
          for (uint64_t j = i; j < i + h; j++) {
            std::complex<double> u = f[j], v = f[j + h];
            f[j] = u + v;
            f[j + h] = u - v;
          }
        }
      }
      for (uint64_t z = 0; z < dim; z++) {
        out.values[(x << n) | z] = (ipow[std::popcount(x & z) & 3] * f[z]).real() / norm2;
      }
    }
  });
  return out;
}

bool same_abs_multiset(const PauliSpectrum &a, const PauliSpectrum &b) {
  std::vector<SpectrumBucket> x = a.abs_buckets(), y = b.abs_buckets();
  if (x.size() != y.size()) return false;
  double tol = std::max(a.tolerance, b.tolerance);
  for (size_t i = 0; i < x.size(); i++) {
    if (x[i].count != y[i].count || std::abs(x[i].value - y[i].value) > tol) return false;
  }
  return true;
}

bool is_stabilizer_state(const Eigen::VectorXcd &psi, double tolerance) {
  PauliSpectrum s = full_spectrum(psi, tolerance);
  return s.unit_count() == (size_t{1} << s.n);
}

Rank2Form canonical_rank2_form(const StabilizerState &phi1, const StabilizerState &phi2) {
  if (phi1.num_qubits() != phi2.num_qubits()) throw std::invalid_argument("states differ in qubit count");
  if (phi1.is_zero() || phi2.is_zero()) throw std::invalid_argument("canonical form of a zero state");
  const size_t n = phi1.num_qubits();
  Rank2Form out;
  StabilizerState psi = phi2;
  auto emit = [&](Gate g) {
    psi.apply(g);
    out.circuit.push_back(g);
  };

  Scalar lambda;
  for (const Gate &g : inverse(phi1.preparation_circuit(&lambda))) emit(g);

  // Make every basis vector of the support a unit vector on its pivot.
  AffineForm f = psi.affine_form();
  for (const F2Vector &g : f.basis) {
    size_t p = g.first_one();
    for (size_t t = p + 1; t < n; t++) {
      if (g.get(t)) emit({GateKind::CX, p, t});
    }
  }
  f = psi.affine_form();
  std::vector<bool> is_pivot(n, false);
  for (const F2Vector &g : f.basis) {
    if (g.weight() != 1) throw std::logic_error("support basis did not reduce to unit vectors");
    is_pivot[g.first_one()] = true;
  }
  const size_t d = f.basis.size();

  size_t t0 = f.offset.first_one();
  out.a = t0 < n ? 1 : 0;
  if (out.a) {
    for (size_t t = t0 + 1; t < n; t++) {
      if (f.offset.get(t)) emit({GateKind::CX, t0, t});
    }
  }

  std::vector<size_t> order;
  if (out.a) order.push_back(t0);
  for (size_t q = 0; q < n; q++) {
    if (!is_pivot[q] && !(out.a && q == t0)) order.push_back(q);
  }
  for (size_t q = 0; q < n; q++) {
    if (is_pivot[q]) order.push_back(q);
  }
  std::vector<size_t> cur(n);
  for (size_t q = 0; q < n; q++) cur[q] = q;
  for (size_t i = 0; i < n; i++) {
    if (cur[i] == order[i]) continue;
    size_t j = static_cast<size_t>(std::find(cur.begin(), cur.end(), order[i]) - cur.begin());
    emit({GateKind::CX, i, j});
    emit({GateKind::CX, j, i});
    emit({GateKind::CX, i, j});
    std::swap(cur[i], cur[j]);
  }

  f = psi.affine_form();
  for (size_t q = 0; q < n; q++) {
    if (f.l.get(q)) emit({GateKind::Sdg, q});
  }
  f = psi.affine_form();
  for (size_t q = 0; q < n; q++) {
    if (f.q_upper.get(q, q)) emit({GateKind::Z, q});
    for (size_t r = q + 1; r < n; r++) {
      if (f.q_upper.get(q, r)) emit({GateKind::CZ, q, r});
    }
  }

  f = psi.affine_form();
  bool ok = f.l.is_zero() && f.basis.size() == d;
  for (size_t q = 0; q < n && ok; q++) ok = f.q_upper.row(q).is_zero();
  for (size_t j = 0; j < d && ok; j++) ok = f.basis[j].weight() == 1 && f.basis[j].first_one() == n - d + j;
  F2Vector expect(n);
  if (out.a) expect.set(0, true);
  if (!ok || !(f.offset == expect)) throw std::logic_error("canonical rank-2 reduction failed");
  out.b = n - static_cast<size_t>(out.a) - d;
  return out;
}

uint64_t stabilizer_state_count(size_t n) {
  uint64_t c = uint64_t{1} << n;
  for (size_t k = 1; k <= n; k++) c *= (uint64_t{1} << k) + 1;
  return c;
}

std::vector<StabilizerState> enumerate_stabilizer_states(size_t n) {
  if (n > 4) throw std::length_error("stabilizer enumeration is limited to n <= 4");
  std::vector<StabilizerState> out;
  for (size_t d = 0; d <= n; d++) {
    for (uint64_t pivmask = 0; pivmask < (uint64_t{1} << n); pivmask++) {
      if (static_cast<size_t>(std::popcount(pivmask)) != d) continue;
      std::vector<size_t> piv;
      for (size_t q = 0; q < n; q++) {
        if ((pivmask >> q) & 1) piv.push_back(q);
      }
      // Free entries of row j: non-pivot columns to the right of its pivot.
      std::vector<std::pair<size_t, size_t>> free;
      for (size_t j = 0; j < d; j++) {
        for (size_t c = piv[j] + 1; c < n; c++) {
          if (!((pivmask >> c) & 1)) free.push_back({j, c});
        }
      }
      std::vector<size_t> nonpiv;
      for (size_t q = 0; q < n; q++) {
        if (!((pivmask >> q) & 1)) nonpiv.push_back(q);
      }
      const size_t nq = d * (d + 1) / 2;
      for (uint64_t fm = 0; fm < (uint64_t{1} << free.size()); fm++) {
        std::vector<F2Vector> basis(d, F2Vector(n));
        for (size_t j = 0; j < d; j++) basis[j].set(piv[j], true);
        for (size_t i = 0; i < free.size(); i++) {
          if ((fm >> i) & 1) basis[free[i].first].set(free[i].second, true);
        }
        for (uint64_t hm = 0; hm < (uint64_t{1} << nonpiv.size()); hm++) {
          F2Vector h(n);
          for (size_t i = 0; i < nonpiv.size(); i++) {
            if ((hm >> i) & 1) h.set(nonpiv[i], true);
          }
          for (uint64_t lm = 0; lm < (uint64_t{1} << d); lm++) {
            for (uint64_t qm = 0; qm < (uint64_t{1} << nq); qm++) {
              AffineForm f;
              f.n = n;
              f.basis = basis;
              f.offset = h;
              f.l = F2Vector(n);
              f.q_upper = F2Matrix(n, n);
              size_t bit = 0;
              for (size_t j = 0; j < d; j++) {
                if ((lm >> j) & 1) f.l.set(piv[j], true);
                for (size_t k = j; k < d; k++, bit++) {
                  if ((qm >> bit) & 1) f.q_upper.set(piv[j], piv[k], true);
                }
              }
              f.scalar = Scalar(0, -static_cast<int>(d));
              out.push_back(StabilizerState::from_affine_form(f));
            }
          }
        }
      }
    }
  }
  return out;
}

Eigen::VectorXcd cat5_candidate(std::complex<double> gamma, bool orthogonal) {
  using dense::basis_ket;
  using dense::kron;
  const double s = 1 / std::sqrt(2.0);
  Eigen::VectorXcd zero = basis_ket<double>(1, 0);
  Eigen::VectorXcd one = basis_ket<double>(1, 1);
  Eigen::VectorXcd plus = (zero + one) * s;
  Eigen::VectorXcd first = orthogonal ? one : zero;
  Eigen::VectorXcd second = orthogonal ? zero : plus;
  Eigen::VectorXcd other = kron(kron(kron(kron(first, second), plus), plus), plus);
  Eigen::VectorXcd v = basis_ket<double>(5, 0) + gamma * other;
  return v / v.norm();
}

Cat5Certificate cat5_certificate() {
  Cat5Certificate cert;
  auto check = [&](std::string name, bool pass, std::string details) {
    cert.assertions.push_back({std::move(name), pass, std::move(details)});
  };
  const Eigen::VectorXcd cat5 = dense::cat_t<double>(5);
  const PauliSpectrum ps = full_spectrum(cat5);
  cert.cat5_zero_count = ps.zero_count();

  const double allowed[4] = {0.0, 0.25, 0.5, 1.0};
  auto in_allowed = [&](double v) {
    for (double a : allowed) {
      if (std::abs(std::abs(v) - a) <= 1e-9) return true;
    }
    return false;
  };
  size_t outside = 0;
  for (double v : ps.values) outside += in_allowed(v) ? 0 : 1;
  check("cat5 |<P>| in {0, 1/4, 1/2, 1}", outside == 0, std::to_string(outside) + " values outside the set");
  check("cat5 is not a stabilizer state", ps.unit_count() != 32, std::to_string(ps.unit_count()) + " Paulis with |<P>| = 1");
  size_t fixed = static_cast<size_t>(std::count_if(ps.values.begin(), ps.values.end(), [](double v) { return std::abs(v - 1.0) <= 1e-9; }));
  check("cat5 is fixed by exactly 2 Paulis (b = 1)", fixed == 2, std::to_string(fixed) + " Paulis with <P> = +1");
  check("cat5 zero count is 782", cert.cat5_zero_count == 782, std::to_string(cert.cat5_zero_count));

  const double r2 = 1 / std::sqrt(2.0);
  struct Cand {
    std::string label;
    std::complex<double> gamma;
    bool orthogonal;
  };
  const std::vector<Cand> cands = {
      {"orthogonal (1+i)/sqrt2", {r2, r2}, true},    {"orthogonal (1-i)/sqrt2", {r2, -r2}, true},
      {"orthogonal (-1-i)/sqrt2", {-r2, -r2}, true}, {"orthogonal (-1+i)/sqrt2", {-r2, r2}, true},
      {"non-orthogonal i", {0, 1}, false},           {"non-orthogonal -i", {0, -1}, false},
      {"non-orthogonal -1/2", {-0.5, 0}, false},
  };
  for (const Cand &c : cands) {
    Eigen::VectorXcd v = cat5_candidate(c.gamma, c.orthogonal);
    const double r = std::abs(c.gamma);
    const double rc = c.gamma.real();
    const double rs = c.gamma.imag();
    struct Formula {
      std::string pauli;
      std::vector<size_t> qubits;
      double closed;
    };
    std::vector<Formula> formulas;
    if (c.orthogonal) {
      formulas = {{"Z", {0}, std::abs((1 - r * r) / (1 + r * r))},
                  {"X", {0}, std::abs(rc / (std::sqrt(2.0) * (1 + r * r)))},
                  {"XY", {0, 3}, std::abs(rs / (std::sqrt(2.0) * (1 + r * r)))}};
    } else {
      const double den = 1 + r * r + rc / 2;
      formulas = {{"ZX", {1, 2}, std::abs(rc / 2 / den)}, {"Y", {1}, std::abs(rs / 2 / den)}};
    }
    for (const Formula &f : formulas) {
      PauliOperator p = PauliOperator::from_sites(5, f.pauli, f.qubits);
      double got = std::abs(pauli_expectation(v, p));
      bool pass = std::abs(got - f.closed) <= 1e-12 && in_allowed(f.closed);
      check(c.label + ": |<" + p.to_string() + ">| closed form", pass,
            "computed " + fmt(got) + ", closed form " + fmt(f.closed));
    }
    PauliSpectrum cs = full_spectrum(v);
    CandidateCount cc{c.label, c.gamma, c.orthogonal, cs.zero_count(), !same_abs_multiset(cs, ps)};
    check(c.label + ": spectrum differs from cat5", cc.multiset_differs, "zero count " + std::to_string(cc.zero_count));
    if (c.orthogonal) {
      check(c.label + ": zero count is 710", cc.zero_count == 710, std::to_string(cc.zero_count));
    }
    cert.candidates.push_back(cc);
  }
  cert.rank_at_least_3 = std::all_of(cert.assertions.begin(), cert.assertions.end(),
                                     [](const CertificateAssertion &a) { return a.pass; });
  return cert;
}

nlohmann::json Cat5Certificate::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const CertificateAssertion &x : assertions) {
    a.push_back({{"name", x.name}, {"pass", x.pass}, {"details", x.details}});
  }
  nlohmann::json c = nlohmann::json::array();
  for (const CandidateCount &x : candidates) {
    c.push_back({{"label", x.label},
                 {"gamma", {{"re", x.gamma.real()}, {"im", x.gamma.imag()}}},
                 {"orthogonal", x.orthogonal},
                 {"zero_count", x.zero_count},
                 {"multiset_differs", x.multiset_differs}});
  }
  return {{"assertions", a},
          {"zero_counts", {{"cat5", cat5_zero_count}, {"candidates", c}}},
          {"rank_at_least_3", rank_at_least_3}};
}

}  // namespace stabrank
