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

#include "stabrank/chains.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "stabrank/builders.hpp"
#include "stabrank/dense.hpp"

namespace stabrank {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr size_t kMaxLegs = 6;

bool r_is_stabilizer(double theta, int *k) { return is_quarter_turn(theta, k, 1e-12); }

void require_positive(size_t m, const char *what) {
  if (m == 0) {
    throw std::invalid_argument(std::string(what) + " needs m >= 1");
  }
}

std::map<size_t, uint64_t> block_ranks(const MagicSpec &spec) {
  std::map<size_t, uint64_t> out;
  for (size_t k : block_sizes(spec)) {
    out[k] = cat_block(spec, k).size();
  }
  return out;
}

Eigen::Matrix2cd word_matrix(const std::vector<GateKind> &word) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (GateKind g : word) {
    u = dense::gate_matrix<double>(g) * u;
  }
  return u;
}

Eigen::Matrix2cd strip_phase(Eigen::Matrix2cd u) {
  for (Eigen::Index i = 0; i < 4; i++) {
    cplx z = u(i % 2, i / 2);
    if (std::abs(z) > 1e-9) {
      return u * (std::abs(z) / z);
    }
  }
  return u;
}

Decomposition build_leaf(const MagicSpec &spec, const std::string &leaf) {
  if (leaf == "t1") return build_t1();
  if (leaf == "t2") return build_t2();
  if (leaf == "t3") return build_t3();
  if (leaf == "r1") return build_r1(spec.theta);
  if (leaf == "r2") return build_r2(spec.theta);
  if (leaf == "f1") {
    Eigen::VectorXcd f = dense::f_state<double>();
    return qubit_decomposition(f[0], f[1]);
  }
  throw std::invalid_argument("unknown leaf " + leaf);
}

std::string step_text(const CatStep &s) {
  switch (s.kind) {
    case CatStep::Kind::Ket:
      return "ket" + std::to_string(s.block);
    case CatStep::Kind::Bra:
      return "bra" + std::to_string(s.block);
    case CatStep::Kind::LegNew:
      return "+ket" + std::to_string(s.block);
    case CatStep::Kind::LegSelf:
      return "+self";
  }
  return "?";
}

}  // namespace

std::string MagicSpec::name() const {
  switch (family) {
    case MagicFamily::T:
      return "T";
    case MagicFamily::F:
      return "F";
    case MagicFamily::R: {
      std::ostringstream os;
      os.precision(17);
      os << "R(" << theta << ")";
      return os.str();
    }
  }
  return "?";
}

std::vector<size_t> block_sizes(const MagicSpec &spec) {
  switch (spec.family) {
    case MagicFamily::T:
      return {1, 2, 4, 6};
    case MagicFamily::F:
      return {1, 2, 6};
    case MagicFamily::R:
      return {1, 2, 6};
  }
  return {};
}

Decomposition cat_block(const MagicSpec &spec, size_t k) {
  switch (spec.family) {
    case MagicFamily::T:
      if (k == 1) return Decomposition::single(StabilizerState(1));
      if (k == 2) return build_cat2();
      if (k == 4) return build_cat4();
      if (k == 6) return build_cat6();
      break;
    case MagicFamily::F:
      if (k == 1) return build_cat1_f();
      if (k == 2) return build_cat2_f();
      if (k == 6) return build_cat6_f();
      break;
    case MagicFamily::R:
      if (k == 1) return Decomposition::single(StabilizerState(1));
      if (k == 2) return build_cat2_r(spec.theta);
      if (k == 6) return build_cat6_r(spec.theta);
      break;
  }
  throw std::invalid_argument("no cat" + std::to_string(k) + " block for " + spec.name());
}

std::vector<std::vector<GateKind>> single_qubit_cliffords() {
  std::vector<std::vector<GateKind>> words{{}};
  std::vector<Eigen::Matrix2cd> seen{Eigen::Matrix2cd::Identity()};
  for (size_t i = 0; i < words.size(); i++) {
    for (GateKind g : {GateKind::H, GateKind::S}) {
      std::vector<GateKind> w = words[i];
      w.push_back(g);
      Eigen::Matrix2cd u = strip_phase(word_matrix(w));
      bool known = false;
      for (const Eigen::Matrix2cd &v : seen) {
        if ((u - v).norm() < 1e-9) {
          known = true;
          break;
        }
      }
      if (!known) {
        seen.push_back(u);
        words.push_back(std::move(w));
      }
    }
  }
  return words;
}

std::vector<LocalTerm> clifford_scan_projector(cplx a, cplx b) {
  Eigen::Vector2cd psi(a, b);
  psi.normalize();
  Eigen::Matrix2cd p = psi * psi.adjoint();
  Eigen::Vector4cd target = Eigen::Map<Eigen::Vector4cd>(p.data());
  std::vector<std::vector<GateKind>> words = single_qubit_cliffords();
  std::vector<Eigen::Vector4cd> mats;
  for (const auto &w : words) {
    Eigen::Matrix2cd u = word_matrix(w);
    mats.push_back(Eigen::Map<Eigen::Vector4cd>(u.data()));
  }
  auto attempt = [&](const std::vector<size_t> &idx) -> std::vector<LocalTerm> {
    Eigen::MatrixXcd sys(4, idx.size());
    for (size_t c = 0; c < idx.size(); c++) {
      sys.col(c) = mats[idx[c]];
    }
    Eigen::VectorXcd coeff = sys.colPivHouseholderQr().solve(target);
    if ((sys * coeff - target).norm() > 1e-10) {
      return {};
    }
    std::vector<LocalTerm> out;
    for (size_t c = 0; c < idx.size(); c++) {
      out.push_back({Scalar::from_complex(coeff[c]), words[idx[c]]});
    }
    return out;
  };
  size_t n = words.size();
  for (size_t i = 0; i < n; i++) {
    for (size_t j = i + 1; j < n; j++) {
      auto r = attempt({i, j});
      if (!r.empty()) return r;
    }
  }
  for (size_t i = 0; i < n; i++) {
    for (size_t j = i + 1; j < n; j++) {
      for (size_t k = j + 1; k < n; k++) {
        auto r = attempt({i, j, k});
        if (!r.empty()) return r;
      }
    }
  }
  return {};
}

std::vector<LocalTerm> magic_projector(const MagicSpec &spec) {
  switch (spec.family) {
    case MagicFamily::T:
      return {{Scalar(0, -2), {}}, {Scalar(0, -2), {GateKind::A}}};
    case MagicFamily::F: {
      static const std::vector<LocalTerm> cached = [] {
        Eigen::VectorXcd f = dense::f_state<double>();
        return clifford_scan_projector(f[0], f[1]);
      }();
      if (cached.empty()) {
        throw std::logic_error("no Clifford expansion found for the F projector");
      }
      return cached;
    }
    case MagicFamily::R: {
      std::vector<LocalTerm> out{{Scalar(0, -2), {}}};
      double c = std::cos(spec.theta);
      double s = std::sin(spec.theta);
      if (std::abs(c) > 1e-15) out.push_back({Scalar(0, -2, c), {GateKind::X}});
      if (std::abs(s) > 1e-15) out.push_back({Scalar(0, -2, s), {GateKind::Y}});
      return out;
    }
  }
  return {};
}

std::string CatPlan::describe() const {
  std::ostringstream os;
  os << "cat" << m << "(" << spec.name() << "):";
  for (const CatStep &s : steps) {
    os << " " << step_text(s);
  }
  os << " -> " << predicted_terms << " terms";
  return os.str();
}

CatPlan plan_cat(const MagicSpec &spec, size_t m) {
  require_positive(m, "cat plan");
  std::map<size_t, uint64_t> ranks = block_ranks(spec);
  const size_t qmax = m + 6;
  const size_t nodes = (qmax + 1) * kMaxLegs;
  using Key = std::tuple<uint64_t, size_t, size_t>;  // terms, contracted qubits, steps
  const Key inf{UINT64_MAX, SIZE_MAX, SIZE_MAX};
  std::vector<Key> best(nodes, inf);
  std::vector<std::pair<size_t, CatStep>> pred(nodes, {SIZE_MAX, CatStep{CatStep::Kind::Ket, 0}});
  std::vector<bool> done(nodes, false);
  auto id = [](size_t q, size_t r) { return q * kMaxLegs + r; };
  using Item = std::pair<Key, size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;

  auto relax = [&](size_t from, size_t q, size_t r, uint64_t mult, size_t contracted, CatStep step) {
    if (q > qmax || r >= kMaxLegs || (q == 0 && r == 0)) return;
    Key base = from == SIZE_MAX ? Key{1, 0, 0} : best[from];
    uint64_t terms = std::get<0>(base);
    if (mult != 0 && terms > UINT64_MAX / mult) return;
    Key k{terms * mult, std::get<1>(base) + contracted, std::get<2>(base) + 1};
    size_t to = id(q, r);
    if (k < best[to]) {
      best[to] = k;
      pred[to] = {from, step};
      pq.push({k, to});
    }
  };

  for (auto [a, rank] : ranks) {
    relax(SIZE_MAX, a, 0, rank, 0, {CatStep::Kind::Ket, a});
  }
  while (!pq.empty()) {
    auto [key, node] = pq.top();
    pq.pop();
    if (done[node] || key != best[node]) continue;
    done[node] = true;
    size_t q = node / kMaxLegs;
    size_t r = node % kMaxLegs;
    if (r == 0) {
      if (q == 0) continue;
      for (auto [k, rank] : ranks) {
        if (k - 1 < kMaxLegs) relax(node, q - 1, k - 1, rank, k, {CatStep::Kind::Bra, k});
      }
    } else {
      for (auto [a, rank] : ranks) {
        relax(node, q + a - 1, r - 1, rank, 0, {CatStep::Kind::LegNew, a});
      }
      if (q >= 1) relax(node, q - 1, r - 1, 1, 0, {CatStep::Kind::LegSelf, 0});
    }
  }
  size_t goal = id(m, 0);
  if (best[goal] == inf) {
    throw std::runtime_error("no cat plan for m = " + std::to_string(m));
  }
  CatPlan plan;
  plan.spec = spec;
  plan.m = m;
  plan.predicted_terms = std::get<0>(best[goal]);
  plan.contracted_qubits = std::get<1>(best[goal]);
  for (size_t at = goal; at != SIZE_MAX; at = pred[at].first) {
    plan.steps.push_back(pred[at].second);
  }
  std::reverse(plan.steps.begin(), plan.steps.end());
  return plan;
}

Decomposition execute_cat_plan(const CatPlan &plan) {
  if (plan.steps.empty() || plan.steps.front().kind != CatStep::Kind::Ket) {
    throw std::invalid_argument("cat plan must start with a ket");
  }
  std::map<size_t, Decomposition> blocks;
  auto block = [&](size_t k) -> const Decomposition & {
    auto it = blocks.find(k);
    if (it == blocks.end()) it = blocks.emplace(k, cat_block(plan.spec, k)).first;
    return it->second;
  };

  Decomposition d = block(plan.steps.front().block);
  size_t bra_size = 0;
  std::vector<size_t> targets;
  std::vector<const Decomposition *> kets;
  size_t self_used = 0;
  size_t ket_qubits = 0;

  auto flush = [&]() {
    Decomposition next = tensor_contract(d, kets, block(bra_size), targets);
    next.scale(Scalar::sqrt2_pow(static_cast<int>(1 + kets.size())));
    d = std::move(next);
    bra_size = 0;
    targets.clear();
    kets.clear();
    self_used = 0;
    ket_qubits = 0;
  };

  for (size_t i = 1; i < plan.steps.size(); i++) {
    const CatStep &s = plan.steps[i];
    switch (s.kind) {
      case CatStep::Kind::Ket:
        throw std::invalid_argument("a ket may only start a cat plan");
      case CatStep::Kind::Bra:
        if (bra_size != 0) throw std::invalid_argument("bra opened before the previous one closed");
        if (d.num_qubits() == 0) throw std::invalid_argument("bra on an empty structure");
        bra_size = s.block;
        targets.push_back(d.num_qubits() - 1);
        self_used = 1;
        break;
      case CatStep::Kind::LegNew: {
        if (bra_size == 0) throw std::invalid_argument("leg without an open bra");
        const Decomposition &k = block(s.block);
        targets.push_back(d.num_qubits() + ket_qubits);
        ket_qubits += k.num_qubits();
        kets.push_back(&k);
        break;
      }
      case CatStep::Kind::LegSelf:
        if (bra_size == 0) throw std::invalid_argument("leg without an open bra");
        if (self_used >= d.num_qubits()) throw std::invalid_argument("structure has no free qubit left");
        targets.push_back(d.num_qubits() - 1 - self_used);
        self_used++;
        break;
    }
    if (bra_size != 0 && targets.size() == bra_size) flush();
  }
  if (bra_size != 0) {
    throw std::invalid_argument("cat plan ends with an open bra");
  }
  if (d.num_qubits() != plan.m) {
    throw std::logic_error("cat plan produced " + std::to_string(d.num_qubits()) + " qubits, expected " +
                           std::to_string(plan.m));
  }
  return d;
}

Decomposition build_cat(const MagicSpec &spec, size_t m) { return execute_cat_plan(plan_cat(spec, m)); }

CatPlan chain_T_plan(size_t ell) {
  require_positive(ell, "T chain");
  CatPlan plan;
  plan.spec = MagicSpec::t();
  plan.m = 4 * ell + 2;
  plan.steps.push_back({CatStep::Kind::Ket, 6});
  plan.predicted_terms = 3;
  for (size_t i = 1; i < ell; i++) {
    plan.steps.push_back({CatStep::Kind::Bra, 2});
    plan.steps.push_back({CatStep::Kind::LegNew, 6});
    plan.predicted_terms *= 3;
    plan.contracted_qubits += 2;
  }
  return plan;
}

CatPlan chain_R_plan(double theta, size_t t) {
  MagicSpec spec = MagicSpec::r(theta);
  uint64_t rank = cat_block(spec, 6).size();
  CatPlan plan;
  plan.spec = spec;
  plan.m = 24 * t + 6;
  plan.steps.push_back({CatStep::Kind::Ket, 6});
  plan.predicted_terms = rank;
  for (size_t i = 0; i < t; i++) {
    plan.steps.push_back({CatStep::Kind::Bra, 6});
    plan.predicted_terms *= rank;
    for (size_t j = 0; j < 5; j++) {
      plan.steps.push_back({CatStep::Kind::LegNew, 6});
      plan.predicted_terms *= rank;
    }
    plan.contracted_qubits += 6;
  }
  return plan;
}

Decomposition chain_T(size_t ell) { return execute_cat_plan(chain_T_plan(ell)); }

Decomposition chain_R(double theta, size_t t) { return execute_cat_plan(chain_R_plan(theta, t)); }

std::string PowerPlan::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Leaf:
      os << leaf << " -> " << predicted_terms << " terms";
      break;
    case Kind::StabilizerProduct:
      os << "product" << m;
      break;
    case Kind::Projected:
      os << "P[" << predicted_terms / cat.predicted_terms << "]*" << cat.describe();
      break;
    case Kind::Product:
      os << "(" << parts[0].describe() << ") x (" << parts[1].describe() << ")";
      break;
  }
  if (kind != Kind::Leaf) os << " => " << predicted_terms << " terms";
  return os.str();
}

PowerPlan plan_power(const MagicSpec &spec, size_t m) {
  require_positive(m, "power plan");
  if (spec.family == MagicFamily::R && r_is_stabilizer(spec.theta, nullptr)) {
    PowerPlan p;
    p.kind = PowerPlan::Kind::StabilizerProduct;
    p.spec = spec;
    p.m = m;
    p.predicted_terms = 1;
    return p;
  }
  std::map<size_t, std::string> leaves;
  switch (spec.family) {
    case MagicFamily::T:
      leaves = {{1, "t1"}, {2, "t2"}, {3, "t3"}};
      break;
    case MagicFamily::F:
      leaves = {{1, "f1"}};
      break;
    case MagicFamily::R:
      leaves = {{1, "r1"}, {2, "r2"}};
      break;
  }
  const uint64_t proj_terms = magic_projector(spec).size();
  std::vector<PowerPlan> best(m + 1);
  for (size_t k = 1; k <= m; k++) {
    PowerPlan &b = best[k];
    b.spec = spec;
    b.m = k;
    b.predicted_terms = UINT64_MAX;
    if (auto it = leaves.find(k); it != leaves.end()) {
      b.kind = PowerPlan::Kind::Leaf;
      b.leaf = it->second;
      b.predicted_terms = build_leaf(spec, it->second).size();
    }
    CatPlan cat = plan_cat(spec, k);
    if (cat.predicted_terms <= UINT64_MAX / proj_terms && cat.predicted_terms * proj_terms < b.predicted_terms) {
      b.kind = PowerPlan::Kind::Projected;
      b.predicted_terms = cat.predicted_terms * proj_terms;
      b.cat = std::move(cat);
      b.leaf.clear();
    }
    for (size_t a = 1; a <= k / 2; a++) {
      uint64_t x = best[a].predicted_terms;
      uint64_t y = best[k - a].predicted_terms;
      if (x > UINT64_MAX / y) continue;
      if (x * y < b.predicted_terms) {
        PowerPlan prod;
        prod.kind = PowerPlan::Kind::Product;
        prod.spec = spec;
        prod.m = k;
        prod.predicted_terms = x * y;
        prod.parts = {best[a], best[k - a]};
        b = std::move(prod);
      }
    }
  }
  return best[m];
}

Decomposition execute_power_plan(const PowerPlan &plan) {
  switch (plan.kind) {
    case PowerPlan::Kind::StabilizerProduct: {
      int k = 0;
      r_is_stabilizer(plan.spec.theta, &k);
      StabilizerState s(plan.m);
      for (size_t q = 0; q < plan.m; q++) {
        s.apply_h(q);
        for (int j = 0; j < k; j++) s.apply_s(q);
      }
      return Decomposition::single(std::move(s));
    }
    case PowerPlan::Kind::Leaf:
      return build_leaf(plan.spec, plan.leaf);
    case PowerPlan::Kind::Projected: {
      Decomposition d = apply_local_sum(execute_cat_plan(plan.cat), 0, magic_projector(plan.spec));
      d.scale(Scalar::sqrt2_pow(1));
      return d;
    }
    case PowerPlan::Kind::Product:
      return tensor(execute_power_plan(plan.parts[0]), execute_power_plan(plan.parts[1]));
  }
  throw std::logic_error("bad power plan");
}

Decomposition magic_power(const MagicSpec &spec, size_t m) { return execute_power_plan(plan_power(spec, m)); }

Decomposition t_power(size_t m) { return magic_power(MagicSpec::t(), m); }

Decomposition f_power(size_t m) { return magic_power(MagicSpec::f(), m); }

Decomposition r_power(double theta, size_t m) { return magic_power(MagicSpec::r(theta), m); }

Decomposition symmetric_power(cplx a, cplx b, size_t m, SymmetricPowerReport *report) {
  require_positive(m, "symmetric power");
  double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (norm == 0.0) {
    throw std::invalid_argument("symmetric power of the zero vector");
  }
  const size_t n = m + 1;
  Eigen::MatrixXcd v(n, n);
  Eigen::VectorXcd rhs(n);
  std::vector<double> thetas(n);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(m));
  for (size_t i = 0; i < n; i++) {
    thetas[i] = 2 * kPi * static_cast<double>(i + 1) / static_cast<double>(n);
  }
  for (size_t k = 0; k < n; k++) {
    for (size_t i = 0; i < n; i++) {
      v(k, i) = amp * std::polar(1.0, thetas[i] * static_cast<double>(k));
    }
    cplx term = 1.0;
    for (size_t j = 0; j < m; j++) term *= j < m - k ? a : b;
    rhs[k] = term;
  }
  Eigen::VectorXcd c = v.partialPivLu().solve(rhs);
  double residual = (v * c - rhs).norm();
  if (residual > 1e-9 * std::max(1.0, rhs.norm())) {
    throw std::runtime_error("symmetric power system is ill-conditioned (residual " + std::to_string(residual) + ")");
  }
  if (report) {
    report->thetas = thetas;
    report->coefficients.assign(c.data(), c.data() + n);
    report->residual = residual;
  }
  Decomposition out(m);
  for (size_t i = 0; i < n; i++) {
    if (std::abs(c[i]) == 0.0) continue;
    Decomposition part = r_power(thetas[i], m);
    part.scale(Scalar::from_complex(c[i]));
    out.append(part);
  }
  return out;
}

}  // namespace stabrank
