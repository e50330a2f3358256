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

#include "stabrank/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabrank/parallel.hpp"

namespace stabrank {

Decomposition Decomposition::single(StabilizerState s, Scalar c) {
  Decomposition d(s.num_qubits());
  d.add_term(c, std::move(s));
  return d;
}

void Decomposition::add_term(Scalar c, StabilizerState s) {
  if (s.num_qubits() != n_) {
    throw std::invalid_argument("term has " + std::to_string(s.num_qubits()) + " qubits, decomposition has " +
                                std::to_string(n_));
  }
  if (c.is_zero() || s.is_zero()) {
    return;
  }
  terms_.push_back({c, std::move(s)});
}

void Decomposition::append(const Decomposition &other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("cannot add decompositions with different qubit counts");
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

void Decomposition::scale(const Scalar &c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (Term &t : terms_) {
    t.coeff *= c;
  }
}

void Decomposition::apply(const Gate &g) {
  for (Term &t : terms_) {
    t.state.apply(g);
  }
}

void Decomposition::apply(const std::vector<Gate> &gates) {
  parallel_for(terms_.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; i++) {
      terms_[i].state.apply(gates);
    }
  });
}

void Decomposition::prune(double tol) {
  std::erase_if(terms_, [tol](const Term &t) {
    return t.state.is_zero() || t.coeff.is_zero() || t.coeff.abs2() * t.state.squared_norm() <= tol * tol;
  });
}

Decomposition tensor(const Decomposition &a, const Decomposition &b) {
  Decomposition out(a.num_qubits() + b.num_qubits());
  out.reserve(a.size() * b.size());
  for (const Term &ta : a.terms()) {
    for (const Term &tb : b.terms()) {
      out.add_term(ta.coeff * tb.coeff, tensor(ta.state, tb.state));
    }
  }
  return out;
}

Decomposition operator+(const Decomposition &a, const Decomposition &b) {
  Decomposition out = a;
  out.append(b);
  return out;
}

Decomposition scaled(Decomposition d, const Scalar &c) {
  d.scale(c);
  return d;
}

Decomposition apply_gates(Decomposition d, const std::vector<Gate> &gates) {
  d.apply(gates);
  return d;
}

Decomposition postselect(const Decomposition &d, size_t qubit, bool bit) {
  if (qubit >= d.num_qubits()) {
    throw std::out_of_range("postselected qubit out of range");
  }
  Decomposition out(d.num_qubits() - 1);
  for (const Term &t : d.terms()) {
    out.add_term(t.coeff, postselect(t.state, qubit, bit));
  }
  return out;
}

Decomposition conjugate(const Decomposition &d) {
  Decomposition out(d.num_qubits());
  for (const Term &t : d.terms()) {
    out.add_term(t.coeff.conj(), conjugate(t.state));
  }
  return out;
}

Decomposition permute_qubits(const Decomposition &d, const std::vector<size_t> &perm) {
  Decomposition out(d.num_qubits());
  for (const Term &t : d.terms()) {
    out.add_term(t.coeff, permute_qubits(t.state, perm));
  }
  return out;
}

namespace {

struct PreparedBra {
  Scalar coeff;
  std::vector<Gate> unprepare;
};

std::vector<PreparedBra> prepare_bra(const Decomposition &bra, const std::vector<size_t> &qubits, size_t n) {
  if (qubits.size() != bra.num_qubits()) {
    throw std::invalid_argument("bra acts on " + std::to_string(bra.num_qubits()) + " qubits but " +
                                std::to_string(qubits.size()) + " were listed");
  }
  std::vector<size_t> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("contracted qubits must be distinct");
  }
  if (!sorted.empty() && sorted.back() >= n) {
    throw std::out_of_range("contracted qubit out of range");
  }
  std::vector<PreparedBra> out;
  for (const Term &t : bra.terms()) {
    Scalar lambda;
    std::vector<Gate> u = inverse(t.state.preparation_circuit(&lambda));
    for (Gate &g : u) {
      g.q0 = qubits[g.q0];
      g.q1 = qubits[g.q1];
    }
    out.push_back({t.coeff.conj() * lambda.conj(), std::move(u)});
  }
  return out;
}

void finish_contraction(StabilizerState &s, const std::vector<Gate> &unprepare, const std::vector<size_t> &desc) {
  s.apply(unprepare);
  for (size_t q : desc) {
    s.postselect_in_place(q, false);
  }
}

}  // namespace

Decomposition tensor_contract(const Decomposition &structure, const std::vector<const Decomposition *> &kets,
                              const Decomposition &bra, const std::vector<size_t> &qubits) {
  size_t n = structure.num_qubits();
  size_t combos = 1;
  for (const Decomposition *k : kets) {
    n += k->num_qubits();
    combos *= k->size();
  }
  std::vector<PreparedBra> prepared = prepare_bra(bra, qubits, n);
  std::vector<size_t> desc = qubits;
  std::sort(desc.rbegin(), desc.rend());
  size_t out_n = n - qubits.size();

  Decomposition out(out_n);
  size_t per_bra = structure.size() * combos;
  std::vector<Term> slots(per_bra, Term{Scalar::zero(), StabilizerState::zero_state(out_n)});
  for (const PreparedBra &pb : prepared) {
    parallel_for(structure.size(), [&](size_t b, size_t e) {
      std::vector<size_t> digit(kets.size());
      for (size_t i = b; i < e; i++) {
        const Term &ts = structure[i];
        for (size_t c = 0; c < combos; c++) {
          size_t rest = c;
          for (size_t k = kets.size(); k-- > 0;) {
            digit[k] = rest % kets[k]->size();
            rest /= kets[k]->size();
          }
          Scalar coeff = ts.coeff * pb.coeff;
          StabilizerState s = ts.state;
          for (size_t k = 0; k < kets.size(); k++) {
            const Term &tk = (*kets[k])[digit[k]];
            coeff *= tk.coeff;
            s = tensor(s, tk.state);
          }
          finish_contraction(s, pb.unprepare, desc);
          slots[i * combos + c] = Term{coeff, std::move(s)};
        }
      }
    });
    for (Term &t : slots) {
      out.add_term(t.coeff, std::move(t.state));
      t = Term{Scalar::zero(), StabilizerState::zero_state(out_n)};
    }
  }
  return out;
}

Decomposition contract_bra(const Decomposition &d, const Decomposition &bra, const std::vector<size_t> &qubits) {
  return tensor_contract(d, {}, bra, qubits);
}

Decomposition contract_bra_cat2(const Decomposition &d, size_t qubit_a, size_t qubit_b) {
  StabilizerState cat2(2);
  cat2.apply_h(0);
  cat2.apply_cx(0, 1);
  cat2.apply_s(0);
  return contract_bra(d, Decomposition::single(cat2), {qubit_a, qubit_b});
}

Decomposition apply_local_sum(const Decomposition &d, size_t qubit, const std::vector<LocalTerm> &op) {
  if (qubit >= d.num_qubits()) {
    throw std::out_of_range("operator qubit out of range");
  }
  Decomposition out(d.num_qubits());
  out.reserve(d.size() * op.size());
  for (const LocalTerm &lt : op) {
    for (const Term &t : d.terms()) {
      StabilizerState s = t.state;
      for (GateKind k : lt.gates) {
        s.apply(Gate{k, qubit});
      }
      out.add_term(t.coeff * lt.coeff, std::move(s));
    }
  }
  return out;
}

Decomposition cat_to_T(const Decomposition &d) {
  return apply_local_sum(d, 0, {{Scalar(0, -1), {}}, {Scalar(0, -1), {GateKind::A}}});
}

Eigen::VectorXcd to_dense(const Decomposition &d, size_t cap) {
  if (d.num_qubits() > cap) {
    throw std::length_error("dense export of " + std::to_string(d.num_qubits()) + " qubits exceeds cap " +
                            std::to_string(cap));
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << d.num_qubits());
  for (const Term &t : d.terms()) {
    out += t.coeff.value() * t.state.to_dense(cap);
  }
  return out;
}

cplx amplitude(const Decomposition &d, const F2Vector &x) {
  CompensatedSum acc;
  for (const Term &t : d.terms()) {
    acc.add((t.coeff * t.state.amplitude_exact(x)).value());
  }
  return acc.value();
}

double fidelity_vs_dense(const Decomposition &d, const Eigen::VectorXcd &reference, size_t cap) {
  Eigen::VectorXcd v = to_dense(d, cap);
  if (v.size() != reference.size()) {
    throw std::invalid_argument("reference vector has the wrong dimension");
  }
  double nv = v.norm();
  double nr = reference.norm();
  if (nv == 0.0 || nr == 0.0) {
    throw std::invalid_argument("fidelity of a zero vector");
  }
  return std::abs(reference.dot(v)) / (nv * nr);
}

void CompensatedSum::step(double &sum, double &comp, double v) {
  double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

void CompensatedSum::add(cplx v) {
  step(re_, cre_, v.real());
  step(im_, cim_, v.imag());
}

}  // namespace stabrank
