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

#ifndef STABRANK_F2_HPP
#define STABRANK_F2_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabrank {

/// Bit vector over GF(2), packed into 64-bit words. Bit i lives in word i / 64.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(size_t n);

  /// Parses a string of '0'/'1' characters; position i of the string is bit i.
  static F2Vector from_string(std::string_view bits);
  static F2Vector from_word(uint64_t word, size_t n);
  static F2Vector ones(size_t n);
  static F2Vector unit(size_t n, size_t i);

  size_t size() const { return n_; }
  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool operator[](size_t i) const { return get(i); }
  void set(size_t i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  F2Vector &operator^=(const F2Vector &other);
  F2Vector &operator&=(const F2Vector &other);
  bool operator==(const F2Vector &other) const { return n_ == other.n_ && words_ == other.words_; }
  bool operator!=(const F2Vector &other) const { return !(*this == other); }
  bool operator<(const F2Vector &other) const;

  size_t weight() const;
  bool is_zero() const;
  /// Index of the lowest set bit, or size() when zero.
  size_t first_one() const;
  /// Lowest 64 bits as an integer (bit i of the result is entry i).
  uint64_t to_word() const { return words_.empty() ? 0 : words_[0]; }
  std::string to_string() const;

  /// Removes entry i, shifting later entries down by one.
  void erase(size_t i);
  void push_back(bool v);
  F2Vector concat(const F2Vector &tail) const;

  const std::vector<uint64_t> &words() const { return words_; }
  std::vector<uint64_t> &words() { return words_; }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

F2Vector operator^(F2Vector a, const F2Vector &b);
F2Vector operator&(F2Vector a, const F2Vector &b);
/// Inner product over GF(2).
bool dot(const F2Vector &a, const F2Vector &b);

/// Dense bit matrix with bit-packed rows. Every row spans words_per_row() words.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(size_t rows, size_t cols);
  static F2Matrix identity(size_t n);
  static F2Matrix from_rows(const std::vector<F2Vector> &rows, size_t cols);
  static F2Matrix from_strings(const std::vector<std::string> &rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t words_per_row() const { return wpr_; }

  bool get(size_t r, size_t c) const { return (row_ptr(r)[c >> 6] >> (c & 63)) & 1; }
  void set(size_t r, size_t c, bool v) {
    uint64_t m = uint64_t{1} << (c & 63);
    if (v) {
      row_ptr(r)[c >> 6] |= m;
    } else {
      row_ptr(r)[c >> 6] &= ~m;
    }
  }
  void flip(size_t r, size_t c) { row_ptr(r)[c >> 6] ^= uint64_t{1} << (c & 63); }

  uint64_t *row_ptr(size_t r) { return data_.data() + r * wpr_; }
  const uint64_t *row_ptr(size_t r) const { return data_.data() + r * wpr_; }

  F2Vector row(size_t r) const;
  void set_row(size_t r, const F2Vector &v);
  F2Vector col(size_t c) const;
  void set_col(size_t c, const F2Vector &v);

  /// row[dst] ^= row[src]
  void xor_row(size_t dst, size_t src);
  /// col[dst] ^= col[src]
  void xor_col(size_t dst, size_t src);
  void swap_rows(size_t a, size_t b);
  void swap_cols(size_t a, size_t b);
  bool row_is_zero(size_t r) const;
  /// Lowest set column in row r at or after `from`, or cols() when none.
  size_t row_first_one(size_t r, size_t from = 0) const;
  /// Parity of row r AND v.
  bool row_dot(size_t r, const F2Vector &v) const;

  void append_row(const F2Vector &v);
  void append_zero_col();
  void erase_row(size_t r);
  void erase_col(size_t c);

  F2Matrix transpose() const;
  F2Vector multiply(const F2Vector &v) const;
  bool operator==(const F2Matrix &other) const;
  bool operator!=(const F2Matrix &other) const { return !(*this == other); }
  std::vector<std::string> to_strings() const;

 private:
  void repack(size_t new_cols);

  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t wpr_ = 0;
  std::vector<uint64_t> data_;
};

struct RrefResult {
  F2Matrix matrix;
  std::vector<size_t> pivots;
  size_t rank = 0;
};

/// Reduced row echelon form. Zero rows are kept at the bottom.
RrefResult rref(const F2Matrix &m);
size_t rank(const F2Matrix &m);
/// Basis of {v : m v = 0}, one vector per non-pivot column.
std::vector<F2Vector> kernel_basis(const F2Matrix &m);
/// Some y with m y = b, if any.
std::optional<F2Vector> solve(const F2Matrix &m, const F2Vector &b);
bool is_independent(const std::vector<F2Vector> &vectors, size_t n);

/// Range over offset + span(basis), visited in Gray-code order.
class AffineSpaceMembers {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = F2Vector;
    using difference_type = std::ptrdiff_t;
    using pointer = const F2Vector *;
    using reference = const F2Vector &;

    iterator(const AffineSpaceMembers *owner, uint64_t index);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator &operator++();
    bool operator==(const iterator &other) const { return index_ == other.index_; }
    bool operator!=(const iterator &other) const { return index_ != other.index_; }

   private:
    const AffineSpaceMembers *owner_;
    uint64_t index_;
    F2Vector current_;
  };

  /// Throws std::invalid_argument on a dependent basis or mismatched lengths.
  AffineSpaceMembers(std::vector<F2Vector> basis, F2Vector offset);
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }
  uint64_t count() const { return count_; }

 private:
  std::vector<F2Vector> basis_;
  F2Vector offset_;
  uint64_t count_;
};

AffineSpaceMembers affine_space_members(std::vector<F2Vector> basis, F2Vector offset);

/// Generator-matrix text: one row per line of '0'/'1', blank lines and '#' comments skipped.
F2Matrix parse_generator_matrix(std::string_view text);
std::string format_generator_matrix(const F2Matrix &m);

}  // namespace stabrank

#endif
