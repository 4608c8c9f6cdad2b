// Copyright 2026 The xrank Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace xrank {

/// Prime field GF(p). Elements are residues in [0, p) stored as uint32_t.
class FieldSpec {
 public:
  using value_type = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime below 2^32.
  explicit FieldSpec(std::uint64_t p = 2);

  std::uint32_t modulus() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  /// Throws std::domain_error on zero.
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p) noexcept;

/// A field element bound to its field. Mixing fields throws std::invalid_argument.
class Scalar {
 public:
  Scalar(FieldSpec field, std::int64_t value)
      : field_(field), value_(field.from_int(value)) {}

  std::uint32_t value() const noexcept { return value_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Scalar inv() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  FieldSpec field_;
  std::uint32_t value_;
};

template <class F>
concept Field = std::copy_constructible<F> && requires(const F f, typename F::value_type a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
};

/// Dense row-major matrix over a field. Indices are 0-based.
template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const F& field() const noexcept { return field_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [&](const value_type& v) { return field_.is_zero(v); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

using MatF = Matrix<FieldSpec>;

template <Field F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <Field F>
std::vector<typename F::value_type> multiply(const Matrix<F>& a,
                                             std::span<const typename F::value_type> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  const F& f = a.field();
  std::vector<typename F::value_type> y(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
  return y;
}

template <Field F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  const F& f = a.field();
  Matrix<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (f.is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = f.add(c(i, j), f.mul(a(i, l), b(l, j)));
    }
  return c;
}

namespace detail {

/// Reduces m to row echelon form in place; returns the pivot column of each pivot row.
template <Field F>
std::vector<std::size_t> row_echelon(Matrix<F>& m) {
  const F f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const auto scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank_by_elimination(Matrix<F> m) {
  return row_echelon(m).size();
}

/// GF(2) rank with rows packed into 64-bit words.
std::size_t rank_gf2_packed(const MatF& m);

}  // namespace detail

/// Exact rank by Gaussian elimination. GF(2) inputs take the bit-packed path.
template <Field F>
std::size_t rank(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, FieldSpec>) {
    if (m.field().modulus() == 2) return detail::rank_gf2_packed(m);
  }
  return detail::rank_by_elimination(m);
}

/// Solves a * x = b. Free variables are set to zero; returns nullopt when inconsistent.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve(
    const Matrix<F>& a, std::span<const typename F::value_type> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const F& f = a.field();
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = detail::row_echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

  std::vector<typename F::value_type> x(a.cols(), f.zero());
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    auto v = aug(r, a.cols());
    for (std::size_t j = c + 1; j < a.cols(); ++j)
      if (!f.is_zero(aug(r, j))) v = f.sub(v, f.mul(aug(r, j), x[j]));
    x[c] = v;  // pivot entries are normalized to one
  }
  return x;
}

}  // namespace xrank
