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

#include "stabrank/f2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace stabrank {

namespace {

size_t words_for(size_t n) { return (n + 63) / 64; }

// Removes bit `i` from a packed word array of `nwords` words, shifting the tail down.
void erase_bit(uint64_t *w, size_t nwords, size_t i) {
  size_t k = i >> 6;
  size_t b = i & 63;
  uint64_t low_mask = b == 0 ? 0 : (~uint64_t{0} >> (64 - b));
  uint64_t low = w[k] & low_mask;
  uint64_t high = b == 63 ? 0 : (w[k] >> (b + 1)) << b;
  w[k] = low | high;
  for (size_t j = k + 1; j < nwords; j++) {
    w[j - 1] |= (w[j] & 1) << 63;
    w[j] >>= 1;
  }
}

}  // namespace

F2Vector::F2Vector(size_t n) : n_(n), words_(words_for(n), 0) {}

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(bits));
    }
  }
  return v;
}

F2Vector F2Vector::from_word(uint64_t word, size_t n) {
  F2Vector v(n);
  if (n > 0) {
    v.words_[0] = n >= 64 ? word : (word & ((uint64_t{1} << n) - 1));
  }
  return v;
}

F2Vector F2Vector::ones(size_t n) {
  F2Vector v(n);
  for (size_t i = 0; i < n; i++) {
    v.set(i, true);
  }
  return v;
}

F2Vector F2Vector::unit(size_t n, size_t i) {
  F2Vector v(n);
  v.set(i, true);
  return v;
}

F2Vector &F2Vector::operator^=(const F2Vector &other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("F2Vector length mismatch");
  }
  for (size_t k = 0; k < words_.size(); k++) {
    words_[k] ^= other.words_[k];
  }
  return *this;
}

F2Vector &F2Vector::operator&=(const F2Vector &other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("F2Vector length mismatch");
  }
  for (size_t k = 0; k < words_.size(); k++) {
    words_[k] &= other.words_[k];
  }
  return *this;
}

bool F2Vector::operator<(const F2Vector &other) const {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  return words_ < other.words_;
}

size_t F2Vector::weight() const {
  size_t w = 0;
  for (uint64_t x : words_) {
    w += std::popcount(x);
  }
  return w;
}

bool F2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](uint64_t x) { return x == 0; });
}

size_t F2Vector::first_one() const {
  for (size_t k = 0; k < words_.size(); k++) {
    if (words_[k]) {
      return k * 64 + std::countr_zero(words_[k]);
    }
  }
  return n_;
}

std::string F2Vector::to_string() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; i++) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

void F2Vector::erase(size_t i) {
  erase_bit(words_.data(), words_.size(), i);
  n_--;
  words_.resize(words_for(n_));
}

void F2Vector::push_back(bool v) {
  n_++;
  words_.resize(words_for(n_), 0);
  set(n_ - 1, v);
}

F2Vector F2Vector::concat(const F2Vector &tail) const {
  F2Vector r(n_ + tail.n_);
  r.words_.assign(words_.begin(), words_.end());
  r.words_.resize(words_for(r.n_), 0);
  for (size_t i = 0; i < tail.n_; i++) {
    if (tail.get(i)) {
      r.set(n_ + i, true);
    }
  }
  return r;
}

F2Vector operator^(F2Vector a, const F2Vector &b) { return a ^= b; }
F2Vector operator&(F2Vector a, const F2Vector &b) { return a &= b; }

bool dot(const F2Vector &a, const F2Vector &b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("F2Vector length mismatch in dot");
  }
  uint64_t acc = 0;
  for (size_t k = 0; k < a.words().size(); k++) {
    acc ^= a.words()[k] & b.words()[k];
  }
  return std::popcount(acc) & 1;
}

F2Matrix::F2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * words_for(cols), 0) {}

F2Matrix F2Matrix::identity(size_t n) {
  F2Matrix m(n, n);
  for (size_t i = 0; i < n; i++) {
    m.set(i, i, true);
  }
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector> &rows, size_t cols) {
  F2Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); r++) {
    m.set_row(r, rows[r]);
  }
  return m;
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string> &rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  F2Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); r++) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("generator rows have unequal lengths");
    }
    m.set_row(r, F2Vector::from_string(rows[r]));
  }
  return m;
}

F2Vector F2Matrix::row(size_t r) const {
  F2Vector v(cols_);
  std::copy(row_ptr(r), row_ptr(r) + words_for(cols_), v.words().begin());
  return v;
}

void F2Matrix::set_row(size_t r, const F2Vector &v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("row length mismatch");
  }
  std::copy(v.words().begin(), v.words().end(), row_ptr(r));
}

F2Vector F2Matrix::col(size_t c) const {
  F2Vector v(rows_);
  for (size_t r = 0; r < rows_; r++) {
    if (get(r, c)) {
      v.set(r, true);
    }
  }
  return v;
}

void F2Matrix::set_col(size_t c, const F2Vector &v) {
  for (size_t r = 0; r < rows_; r++) {
    set(r, c, v.get(r));
  }
}

void F2Matrix::xor_row(size_t dst, size_t src) {
  uint64_t *d = row_ptr(dst);
  const uint64_t *s = row_ptr(src);
  for (size_t k = 0; k < wpr_; k++) {
    d[k] ^= s[k];
  }
}

void F2Matrix::xor_col(size_t dst, size_t src) {
  size_t ws = src >> 6, bs = src & 63, wd = dst >> 6, bd = dst & 63;
  for (size_t r = 0; r < rows_; r++) {
    uint64_t *p = row_ptr(r);
    p[wd] ^= ((p[ws] >> bs) & 1) << bd;
  }
}

void F2Matrix::swap_rows(size_t a, size_t b) {
  if (a != b) {
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
  }
}

void F2Matrix::swap_cols(size_t a, size_t b) {
  if (a == b) {
    return;
  }
  for (size_t r = 0; r < rows_; r++) {
    bool x = get(r, a);
    bool y = get(r, b);
    if (x != y) {
      flip(r, a);
      flip(r, b);
    }
  }
}

bool F2Matrix::row_is_zero(size_t r) const {
  const uint64_t *p = row_ptr(r);
  return std::all_of(p, p + wpr_, [](uint64_t x) { return x == 0; });
}

size_t F2Matrix::row_first_one(size_t r, size_t from) const {
  if (from >= cols_) {
    return cols_;
  }
  const uint64_t *p = row_ptr(r);
  size_t k = from >> 6;
  uint64_t w = p[k] & (~uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      return std::min(cols_, k * 64 + std::countr_zero(w));
    }
    if (++k >= wpr_) {
      return cols_;
    }
    w = p[k];
  }
}

bool F2Matrix::row_dot(size_t r, const F2Vector &v) const {
  const uint64_t *p = row_ptr(r);
  uint64_t acc = 0;
  for (size_t k = 0; k < v.words().size(); k++) {
    acc ^= p[k] & v.words()[k];
  }
  return std::popcount(acc) & 1;
}

void F2Matrix::append_row(const F2Vector &v) {
  data_.resize(data_.size() + wpr_, 0);
  rows_++;
  set_row(rows_ - 1, v);
}

void F2Matrix::repack(size_t new_cols) {
  size_t nw = words_for(new_cols);
  if (nw == wpr_) {
    cols_ = new_cols;
    return;
  }
  std::vector<uint64_t> fresh(rows_ * nw, 0);
  size_t keep = std::min(nw, wpr_);
  for (size_t r = 0; r < rows_; r++) {
    std::copy(row_ptr(r), row_ptr(r) + keep, fresh.data() + r * nw);
  }
  data_ = std::move(fresh);
  wpr_ = nw;
  cols_ = new_cols;
}

void F2Matrix::append_zero_col() { repack(cols_ + 1); }

void F2Matrix::erase_row(size_t r) {
  data_.erase(data_.begin() + r * wpr_, data_.begin() + (r + 1) * wpr_);
  rows_--;
}

void F2Matrix::erase_col(size_t c) {
  for (size_t r = 0; r < rows_; r++) {
    erase_bit(row_ptr(r), wpr_, c);
  }
  repack(cols_ - 1);
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; r++) {
    for (size_t c = row_first_one(r); c < cols_; c = row_first_one(r, c + 1)) {
      t.set(c, r, true);
    }
  }
  return t;
}

F2Vector F2Matrix::multiply(const F2Vector &v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix-vector size mismatch");
  }
  F2Vector out(rows_);
  for (size_t r = 0; r < rows_; r++) {
    if (row_dot(r, v)) {
      out.set(r, true);
    }
  }
  return out;
}

bool F2Matrix::operator==(const F2Matrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    return false;
  }
  for (size_t r = 0; r < rows_; r++) {
    if (row(r) != other.row(r)) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> F2Matrix::to_strings() const {
  std::vector<std::string> out;
  for (size_t r = 0; r < rows_; r++) {
    out.push_back(row(r).to_string());
  }
  return out;
}

RrefResult rref(const F2Matrix &m) {
  RrefResult res{m, {}, 0};
  F2Matrix &a = res.matrix;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
    size_t p = r;
    while (p < a.rows() && !a.get(p, c)) {
      p++;
    }
    if (p == a.rows()) {
      continue;
    }
    a.swap_rows(r, p);
    for (size_t i = 0; i < a.rows(); i++) {
      if (i != r && a.get(i, c)) {
        a.xor_row(i, r);
      }
    }
    res.pivots.push_back(c);
    r++;
  }
  res.rank = r;
  return res;
}

size_t rank(const F2Matrix &m) { return rref(m).rank; }

std::vector<F2Vector> kernel_basis(const F2Matrix &m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : red.pivots) {
    is_pivot[p] = true;
  }
  std::vector<F2Vector> basis;
  for (size_t f = 0; f < m.cols(); f++) {
    if (is_pivot[f]) {
      continue;
    }
    F2Vector v(m.cols());
    v.set(f, true);
    for (size_t i = 0; i < red.rank; i++) {
      if (red.matrix.get(i, f)) {
        v.set(red.pivots[i], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<F2Vector> solve(const F2Matrix &m, const F2Vector &b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("right-hand side length mismatch");
  }
  F2Matrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); r++) {
    for (size_t c = 0; c < m.cols(); c++) {
      aug.set(r, c, m.get(r, c));
    }
    aug.set(r, m.cols(), b.get(r));
  }
  RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) {
    return std::nullopt;
  }
  F2Vector y(m.cols());
  for (size_t i = 0; i < red.rank; i++) {
    y.set(red.pivots[i], red.matrix.get(i, m.cols()));
  }
  return y;
}

bool is_independent(const std::vector<F2Vector> &vectors, size_t n) {
  return rank(F2Matrix::from_rows(vectors, n)) == vectors.size();
}

AffineSpaceMembers::iterator::iterator(const AffineSpaceMembers *owner, uint64_t index)
    : owner_(owner), index_(index), current_(owner->offset_) {}

AffineSpaceMembers::iterator &AffineSpaceMembers::iterator::operator++() {
  index_++;
  if (index_ < owner_->count_) {
    current_ ^= owner_->basis_[std::countr_zero(index_)];
  }
  return *this;
}

AffineSpaceMembers::AffineSpaceMembers(std::vector<F2Vector> basis, F2Vector offset)
    : basis_(std::move(basis)), offset_(std::move(offset)) {
  for (const F2Vector &b : basis_) {
    if (b.size() != offset_.size()) {
      throw std::invalid_argument("basis vector length differs from offset length");
    }
  }
  if (basis_.size() >= 64) {
    throw std::invalid_argument("affine space too large to enumerate");
  }
  if (!is_independent(basis_, offset_.size())) {
    throw std::invalid_argument("affine space basis is linearly dependent");
  }
  count_ = uint64_t{1} << basis_.size();
}

AffineSpaceMembers affine_space_members(std::vector<F2Vector> basis, F2Vector offset) {
  return AffineSpaceMembers(std::move(basis), std::move(offset));
}

F2Matrix parse_generator_matrix(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    std::string row;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        row.push_back(ch);
      } else if (ch != ' ' && ch != '\t' && ch != '\r') {
        throw std::invalid_argument("generator matrix line " + std::to_string(lineno) +
                                    ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
    if (row.empty()) {
      continue;
    }
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw std::invalid_argument("generator matrix line " + std::to_string(lineno) +
                                  ": row length differs from first row");
    }
    rows.push_back(row);
  }
  return F2Matrix::from_strings(rows);
}

std::string format_generator_matrix(const F2Matrix &m) {
  std::string out;
  for (const std::string &r : m.to_strings()) {
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace stabrank
