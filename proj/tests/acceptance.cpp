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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stabrank/builders.hpp"
#include "stabrank/chains.hpp"
#include "stabrank/codes.hpp"
#include "stabrank/dense.hpp"
#include "stabrank/simulator.hpp"
#include "stabrank/spectrum.hpp"

using namespace stabrank;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string &what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

template <typename... Args>
std::string fmt(const char *f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<void(Check &)> body;
};

Eigen::VectorXcd product_of_rotations(const std::vector<double> &angles) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (double th : angles) v = dense::kron(v, dense::r_state<double>(th));
  return v;
}

void canonical_decompositions(Check &c) {
  auto fid_ok = [&](const Decomposition &d, const Eigen::VectorXcd &ref, const std::string &name) {
    double f = fidelity_vs_dense(d, ref);
    c.expect(f >= 1 - 1e-10, name + fmt(" fidelity %.15f", f));
  };
  fid_ok(build_t2(), dense::tensor_power<double>(dense::t_state<double>(), 2), "t2");
  fid_ok(build_cat2(), dense::cat_t<double>(2), "cat2");
  fid_ok(build_cat4(), dense::cat_t<double>(4), "cat4");
  fid_ok(build_cat6(), dense::cat_t<double>(6), "cat6");
  fid_ok(build_cat6_f(), dense::cat_f<double>(6), "cat6_F");
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 10; i++) {
    double th = angle(rng);
    fid_ok(build_cat2_r(th), dense::cat_r<double>(th, 2), fmt("cat2_R(%.6f)", th));
    fid_ok(build_cat6_r(th), dense::cat_r<double>(th, 6), fmt("cat6_R(%.6f)", th));
  }
  std::printf("  t2=%zu cat2=%zu cat4=%zu cat6=%zu cat6_F=%zu terms\n", build_t2().size(), build_cat2().size(),
              build_cat4().size(), build_cat6().size(), build_cat6_f().size());
}

void table_cells(Check &c) {
  const size_t power_cell[] = {2, 3, 4, 6, 6, 12, 12};
  const size_t cat_cell[] = {1, 2, 2, 3, 3, 6, 6};
  for (size_t m = 2; m <= 8; m++) {
    Decomposition p = t_power(m);
    Decomposition k = build_cat(MagicSpec::t(), m);
    double fp = fidelity_vs_dense(p, dense::tensor_power<double>(dense::t_state<double>(), m));
    double fk = fidelity_vs_dense(k, dense::cat_t<double>(m));
    std::printf("  m=%zu  T^m: %2zu terms (cell %2zu) fid %.15f   cat_m: %zu terms (cell %zu) fid %.15f\n", m,
                p.size(), power_cell[m - 2], fp, k.size(), cat_cell[m - 2], fk);
    c.expect(p.size() <= power_cell[m - 2], fmt("T^%zu has %zu terms", m, p.size()));
    c.expect(k.size() <= cat_cell[m - 2], fmt("cat_%zu has %zu terms", m, k.size()));
    c.expect(std::abs(1 - fp) <= 1e-10 && std::abs(1 - fk) <= 1e-10, fmt("fidelity at m=%zu", m));
  }
}

void t_chain(Check &c) {
  for (size_t ell = 1; ell <= 12; ell++) {
    Decomposition d = chain_T(ell);
    uint64_t expect = static_cast<uint64_t>(std::llround(std::pow(3.0, static_cast<double>(ell))));
    c.expect(d.size() == expect && d.num_qubits() == 4 * ell + 2, fmt("chain_T(%zu) has %zu terms", ell, d.size()));
    if (ell <= 5) {
      double f = fidelity_vs_dense(d, dense::cat_t<double>(4 * ell + 2));
      std::printf("  chain_T(%zu): %zu qubits, %zu terms, fidelity %.15f\n", ell, d.num_qubits(), d.size(), f);
      c.expect(std::abs(1 - f) <= 1e-9, fmt("chain_T(%zu) fidelity %.15f", ell, f));
    } else if (ell == 12) {
      // <0^50|cat_50> = 2^{-24.5}; <1^50|cat_50> = 2^{-24.5} e^{i 50 pi/4}.
      std::complex<double> a0 = amplitude(d, F2Vector(50));
      std::complex<double> a1 = amplitude(d, F2Vector::ones(50));
      double expect_abs = std::pow(2.0, -24.5);
      std::complex<double> expect1 = std::polar(expect_abs, 50 * kPi / 4);
      std::printf("  chain_T(12): 50 qubits, %zu terms, <0|psi> = %.6e (expect %.6e), exponent %.4f\n", d.size(),
                  a0.real(), expect_abs, std::log2(static_cast<double>(d.size())) / 50);
      c.expect(std::abs(a0 - expect_abs) <= 1e-9 * expect_abs, "chain_T(12) amplitude at 0^50");
      c.expect(std::abs(a1 - expect1) <= 1e-9 * expect_abs, "chain_T(12) amplitude at 1^50");
      c.expect(std::log2(static_cast<double>(d.size())) / 50 <= 0.40, "exponent at m = 50");
    } else {
      std::printf("  chain_T(%zu): %zu qubits, %zu terms\n", ell, d.num_qubits(), d.size());
    }
  }
  Decomposition t10 = t_power(10);
  double f10 = fidelity_vs_dense(t10, dense::tensor_power<double>(dense::t_state<double>(), 10));
  std::printf("  t_power(10): %zu terms, fidelity %.15f\n", t10.size(), f10);
  c.expect(t10.size() <= 18 && std::abs(1 - f10) <= 1e-9, "t_power(10)");
  PowerPlan p50 = plan_power(MagicSpec::t(), 50);
  std::printf("  (info) t_power(50) plan: %llu terms, exponent %.4f\n",
              static_cast<unsigned long long>(p50.predicted_terms),
              std::log2(static_cast<double>(p50.predicted_terms)) / 50);
}

void rotation_powers(Check &c) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  double worst = 0;
  for (int i = 0; i < 10; i++) {
    double th = angle(rng);
    for (size_t m = 1; m <= 12; m++) {
      Decomposition d = r_power(th, m);
      double f = fidelity_vs_dense(d, dense::tensor_power<double>(dense::r_state<double>(th), m));
      worst = std::max(worst, std::abs(1 - f));
      c.expect(std::abs(1 - f) <= 1e-8, fmt("r_power(%.4f, %zu) fidelity %.15f", th, m, f));
    }
  }
  std::printf("  r_power dense check: worst |1 - fidelity| = %.2e over 10 angles, m <= 12\n", worst);
  double worst_slack = -1e9;
  for (size_t m = 1; m <= 60; m++) {
    double th = angle(rng);
    uint64_t terms = plan_power(MagicSpec::r(th), m).predicted_terms;
    double slack = std::log2(static_cast<double>(terms)) - (m / 2.0 + 3);
    worst_slack = std::max(worst_slack, slack);
    c.expect(slack <= 1e-12, fmt("r_power term count at m=%zu", m));
  }
  std::printf("  term counts vs 2^{m/2+3}, m <= 60: max log2 slack %.3f\n", worst_slack);

  for (int i = 0; i < 10; i++) {
    double th = angle(rng);
    Eigen::VectorXcd cat2 = dense::cat_r<double>(th, 2);
    Eigen::VectorXcd r = dense::r_state<double>(th);
    Eigen::VectorXcd bra(2);
    for (int a = 0; a < 2; a++) bra[a] = std::conj(cat2[a]) * r[0] + std::conj(cat2[a + 2]) * r[1];
    Eigen::VectorXcd expect = r.conjugate() / std::sqrt(2.0);
    c.expect((bra - expect).norm() <= 1e-12, fmt("effective bra identity at %.4f", th));
    Decomposition six = build_cat6_r(th);
    Decomposition ten = contract_bra(tensor(six, six), build_cat2_r(th), {5, 6});
    double f = fidelity_vs_dense(ten, dense::cat_r<double>(th, 10));
    c.expect(std::abs(1 - f) <= 1e-10, fmt("cat10(R) contraction fidelity %.15f", f));
  }
  double th = angle(rng);
  CatPlan plan = chain_R_plan(th, 1);
  Decomposition chain = chain_R(th, 1);
  std::printf("  chain_R(%.4f, 1): %zu qubits, %zu terms (plan %llu, limit %d)\n", th, chain.num_qubits(), chain.size(),
              static_cast<unsigned long long>(plan.predicted_terms), 1 << 14);
  c.expect(chain.num_qubits() == 30 && chain.size() <= (1u << 14), "chain_R(theta, 1) shape");
  std::mt19937 pick(99);
  const double base = std::pow(2.0, -15) / std::sqrt(2.0);
  for (int i = 0; i < 24; i++) {
    F2Vector x(30);
    for (size_t q = 0; q < 30; q++) x.set(q, pick() & 1);
    double w = static_cast<double>(x.weight());
    std::complex<double> expect = std::polar(base, w * th) * (1.0 + (x.weight() % 2 == 0 ? 1.0 : -1.0));
    c.expect(std::abs(amplitude(chain, x) - expect) <= 1e-9 * base, "chain_R(theta, 1) amplitude");
  }
}

void symmetric_powers(Check &c) {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  double worst = 0;
  for (int i = 0; i < 50; i++) {
    std::complex<double> a(g(rng), g(rng)), b(g(rng), g(rng));
    Eigen::VectorXcd psi = dense::qubit<double>(a, b);
    for (size_t m = 1; m <= 12; m++) {
      Decomposition d = symmetric_power(a, b, m);
      double f = fidelity_vs_dense(d, dense::tensor_power<double>(psi, m));
      worst = std::max(worst, std::abs(1 - f));
      c.expect(std::abs(1 - f) <= 1e-7, fmt("symmetric_power state %d m=%zu fidelity %.12f", i, m, f));
      c.expect(static_cast<double>(d.size()) <= (m + 1) * std::pow(2.0, m / 2.0 + 3),
               fmt("symmetric_power term count m=%zu", m));
    }
  }
  std::printf("  50 random states, m <= 12: worst |1 - fidelity| = %.2e\n", worst);
}

QuantumCircuit random_circuit(std::mt19937 &rng) {
  const GateKind cliffords[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y,
                                GateKind::Z, GateKind::CX, GateKind::CZ};
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  QuantumCircuit c;
  c.n = 1 + rng() % 8;
  size_t depth = rng() % 41;
  size_t m = rng() % 11;
  std::vector<int> slot(depth + m, 0);
  for (size_t i = 0; i < m; i++) {
    size_t s;
    do s = rng() % slot.size();
    while (slot[s]);
    slot[s] = 1;
  }
  std::vector<double> pool = {angle(rng), angle(rng)};
  for (int s : slot) {
    Gate g{GateKind::H, rng() % c.n, 0};
    if (s) {
      int kind = static_cast<int>(rng() % 4);
      g.kind = kind == 0 ? GateKind::T : (kind == 1 ? GateKind::Tdg : GateKind::RZ);
      g.angle = pool[rng() % 2];
    } else {
      g.kind = cliffords[rng() % 8];
      if (is_two_qubit(g.kind)) {
        if (c.n < 2) g.kind = GateKind::H;
        else {
          do g.q1 = rng() % c.n;
          while (g.q1 == g.q0);
        }
      }
    }
    c.append(g);
  }
  return c;
}

void simulator(Check &c) {
  std::mt19937 rng(6);
  double worst_amp = 0, worst_prob = 0;
  size_t max_terms = 0;
  for (int trial = 0; trial < 200; trial++) {
    QuantumCircuit circ = random_circuit(rng);
    const size_t n = circ.n;
    Eigen::VectorXcd ref = dense::apply_gates(dense::zero_ket<double>(n), circ.gates);
    CircuitSimulator sim(circ);
    max_terms = std::max(max_terms, sim.output_state().size());
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
      double e = std::abs(sim.amplitude(F2Vector::from_word(x, n)) - ref[static_cast<Eigen::Index>(x)]);
      worst_amp = std::max(worst_amp, e);
    }
    std::vector<size_t> qubits;
    for (size_t q = 0; q < n; q++) {
      if (rng() & 1) qubits.push_back(q);
    }
    if (qubits.empty()) qubits.push_back(rng() % n);
    F2Vector y(qubits.size());
    for (size_t i = 0; i < qubits.size(); i++) y.set(i, rng() & 1);
    double expect = 0;
    for (Eigen::Index x = 0; x < ref.size(); x++) {
      bool match = true;
      for (size_t i = 0; i < qubits.size(); i++) match = match && (((x >> qubits[i]) & 1) != 0) == y.get(i);
      if (match) expect += std::norm(ref[x]);
    }
    worst_prob = std::max(worst_prob, std::abs(sim.probability(qubits, y) - expect));
  }
  std::printf("  200 circuits: worst amplitude error %.2e, worst marginal error %.2e, max %zu output terms\n",
              worst_amp, worst_prob, max_terms);
  c.expect(worst_amp <= 1e-8, "amplitude error");
  c.expect(worst_prob <= 1e-8, "marginal error");
  for (auto [m, expect_terms, expect_exp] : {std::tuple{6, 6, 0.4308}, std::tuple{10, 18, 0.417}}) {
    QuantumCircuit tc;
    tc.n = 2;
    for (int i = 0; i < m; i++) {
      tc.append({GateKind::H, static_cast<size_t>(i % 2)});
      tc.append({GateKind::T, static_cast<size_t>(i % 2)});
    }
    CostReport r = cost_report(tc);
    std::printf("  cost_report m=%zu: %llu terms, exponent %.4f (reference %.4f)\n", r.m,
                static_cast<unsigned long long>(r.terms), r.exponent, expect_exp);
    c.expect(r.terms == static_cast<uint64_t>(expect_terms), fmt("cost_report terms at m=%d", m));
    c.expect(std::abs(r.exponent - expect_exp) <= 5e-4, fmt("cost_report exponent at m=%d", m));
  }
}

void certificates(Check &c) {
  Eigen::VectorXcd cat3 = dense::cat_t<double>(3);
  double xx = pauli_expectation(cat3, PauliOperator::from_string("XXI")).real();
  c.expect(std::abs(xx - 0.5) <= 1e-12, fmt("<XXI> = %.15f", xx));
  std::vector<StabilizerState> states = enumerate_stabilizer_states(3);
  double best = 0;
  for (const StabilizerState &s : states) {
    Eigen::VectorXcd v = s.to_dense();
    best = std::max(best, std::abs(v.dot(cat3)) / v.norm());
  }
  std::printf("  cat3: <XXI> = %.15f, max overlap with %zu stabilizer states = %.6f\n", xx, states.size(), best);
  c.expect(states.size() == 1080, "1080 three-qubit stabilizer states");
  c.expect(best < 1 - 1e-6, "cat3 is not a stabilizer state");
  Cat5Certificate cert = cat5_certificate();
  size_t passed = 0;
  for (const CertificateAssertion &a : cert.assertions) {
    passed += a.pass ? 1 : 0;
    c.expect(a.pass, a.name + ": " + a.details);
  }
  std::printf("  cat5 certificate: %zu/%zu assertions, zero count %zu\n", passed, cert.assertions.size(),
              cert.cat5_zero_count);
  c.expect(cert.cat5_zero_count == 782, "cat5 zero count");
  size_t orth = 0;
  for (const CandidateCount &k : cert.candidates) {
    std::printf("    candidate %-22s zero count %zu%s\n", k.label.c_str(), k.zero_count,
                k.multiset_differs ? ", spectrum differs" : "");
    c.expect(k.multiset_differs, k.label + " spectrum");
    if (k.orthogonal) {
      orth++;
      c.expect(k.zero_count == 710, k.label + " zero count");
    }
  }
  c.expect(orth == 4, "four orthogonal candidates");
  c.expect(cert.rank_at_least_3, "certificate verdict");
}

bool triply_even(const std::vector<F2Vector> &g) {
  for (size_t i = 0; i < g.size(); i++) {
    if (g[i].weight() % 8) return false;
    for (size_t j = i + 1; j < g.size(); j++) {
      F2Vector ij = g[i] & g[j];
      if (ij.weight() % 4) return false;
      for (size_t k = j + 1; k < g.size(); k++) {
        if ((ij & g[k]).weight() % 2) return false;
      }
    }
  }
  return true;
}

void codes(Check &c) {
  std::mt19937 rng(8);
  double worst = 0;
  for (int i = 0; i < 200; i++) {
    size_t m = 1 + rng() % 14;
    size_t k = rng() % (m + 1);
    F2Matrix g(k, m);
    for (size_t r = 0; r < k; r++) {
      for (size_t q = 0; q < m; q++) g.set(r, q, rng() & 1);
    }
    LinearCode code = LinearCode::from_generator(g);
    Eigen::VectorXcd a = code_state_dense(code, CodeStateMethod::MagicBasis);
    Eigen::VectorXcd b = code_state_dense(code, CodeStateMethod::DualPhase);
    worst = std::max(worst, (a - b).norm());
  }
  std::printf("  200 random codes, m <= 14: max |magic-basis - dual-phase| = %.2e\n", worst);
  c.expect(worst <= 1e-10, "code state constructions agree");

  LinearCode rm13 = reed_muller(1, 3);
  CodeDecompositionInfo info;
  Decomposition d = code_state_decomposition(rm13, &info);
  Eigen::VectorXcd v = code_state_dense(rm13);
  double f = fidelity_vs_dense(d, v);
  PrefixContraction p = contract_T_prefix(rm13);
  std::printf("  RM(1,3): %zu terms via %s, fidelity %.15f, stabilizer %s, prefix residual %.2e, |constant| %.6f\n",
              d.size(), info.method.c_str(), f, is_stabilizer_state(v) ? "yes" : "no", p.residual,
              std::abs(p.constant));
  c.expect(d.size() == 2 && std::abs(1 - f) <= 1e-12, "RM(1,3) two-term decomposition");
  c.expect(!is_stabilizer_state(v), "RM(1,3) state is not a stabilizer state");
  c.expect(p.proportional && p.permutation.size() == 8, "contract_T_prefix proportional to |T>^4");

  size_t checked = 0;
  for (size_t b = 1; b <= 5; b++) {
    for (size_t a = 0; a <= b; a++) {
      bool expect = triply_even(dual(reed_muller(a, b)).basis());
      c.expect(rm_stabilizer_condition(a, b) == expect, fmt("RM condition a=%zu b=%zu", a, b));
      checked++;
    }
  }
  double bound = theorem5_bound(LinearCode::repetition(6), 3);
  std::printf("  RM condition checked for %zu (a, b) pairs; bound(rep6, 3) = %.15f\n", checked, bound);
  c.expect(std::abs(bound - std::log2(3.0) / 4) <= 1e-12, "bound for repetition-6");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "canonical decompositions", 1.0, canonical_decompositions},
      {2, "table cells for T^m and cat_m, m = 2..8", 10.0, table_cells},
      {3, "T chain: 3^ell terms, dense checks, exponent at m = 50", 120.0, t_chain},
      {4, "rotation powers, effective bra, chain_R structure", 120.0, rotation_powers},
      {5, "symmetric powers of arbitrary qubit states", 120.0, symmetric_powers},
      {6, "simulator vs dense oracle, cost exponents", 300.0, simulator},
      {7, "cat3 and cat5 certificates", 60.0, certificates},
      {8, "code states, RM condition, bound", 60.0, codes},
  };
  int failures = 0;
  std::vector<std::string> summary;
  for (const Criterion &cr : criteria) {
    std::printf("criterion %d: %s\n", cr.id, cr.title.c_str());
    std::fflush(stdout);
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception &e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs <= cr.time_limit_s, fmt("runtime %.1f s exceeds %.0f s", secs, cr.time_limit_s));
    std::string line = fmt("[%s] criterion %d: %s (%.2f s, limit %.0f s)", check.ok ? "PASS" : "FAIL", cr.id,
                           cr.title.c_str(), secs, cr.time_limit_s);
    if (!check.ok) line += " -- " + check.first_failure;
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    summary.push_back(line);
    failures += check.ok ? 0 : 1;
  }
  std::printf("\nsummary\n");
  for (const std::string &s : summary) std::printf("%s\n", s.c_str());
  return failures == 0 ? 0 : 1;
}
