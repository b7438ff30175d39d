// Copyright 2026 The whfactor Authors
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


#ifndef WHFACTOR_RING_MATRIX_HPP_
#define WHFACTOR_RING_MATRIX_HPP_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/ap_poly.hpp"
#include "whfactor/mixed_symbol.hpp"
#include "whfactor/rational_function.hpp"

namespace whfactor {

/// What the matrix code needs from a commutative ring. Rings with
/// kExactDivision = true are integral domains whose divide_exact(a, b)
/// returns a/b whenever b divides a; those use fraction-free elimination.
template <class R>
struct ring_traits {
  static R zero() { return R(0); }
  static R one() { return R(1); }
  static bool is_zero(const R& a) { return a == zero(); }
  static constexpr bool kExactDivision = false;
  static constexpr bool kField = false;
  static R divide_exact(const R&, const R&) { fail(ErrorCode::kHypothesisViolation, "ring has no exact division"); }
};

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static constexpr bool kExactDivision = true;
  static constexpr bool kField = true;
  static Rational divide_exact(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct ring_traits<GaussianRational> {
  static GaussianRational zero() { return GaussianRational(0); }
  static GaussianRational one() { return GaussianRational(1); }
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
  static constexpr bool kExactDivision = true;
  static constexpr bool kField = true;
  static GaussianRational divide_exact(const GaussianRational& a, const GaussianRational& b) { return a / b; }
};

template <class F>
struct ring_traits<Polynomial<F>> {
  static Polynomial<F> zero() { return Polynomial<F>(); }
  static Polynomial<F> one() { return Polynomial<F>(F(1)); }
  static bool is_zero(const Polynomial<F>& a) { return a.is_zero(); }
  static constexpr bool kExactDivision = true;
  static constexpr bool kField = false;
  static Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b) { return exact_quotient(a, b); }
};

template <>
struct ring_traits<RationalFunction> {
  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(1); }
  static bool is_zero(const RationalFunction& a) { return a.is_zero(); }
  static constexpr bool kExactDivision = true;
  static constexpr bool kField = true;
  static RationalFunction divide_exact(const RationalFunction& a, const RationalFunction& b) { return a / b; }
};

template <>
struct ring_traits<APPoly> {
  static APPoly zero() { return APPoly(); }
  static APPoly one() { return APPoly(1); }
  static bool is_zero(const APPoly& a) { return a.is_zero(); }
  static constexpr bool kExactDivision = false;
  static constexpr bool kField = false;
  static APPoly divide_exact(const APPoly&, const APPoly&) {
    fail(ErrorCode::kHypothesisViolation, "almost periodic polynomials have no exact division here");
  }
};

template <>
struct ring_traits<MixedSymbol> {
  static MixedSymbol zero() { return MixedSymbol(); }
  static MixedSymbol one() { return MixedSymbol(1); }
  static bool is_zero(const MixedSymbol& a) { return a.is_zero(); }
  static constexpr bool kExactDivision = false;
  static constexpr bool kField = false;
  static MixedSymbol divide_exact(const MixedSymbol&, const MixedSymbol&) {
    fail(ErrorCode::kHypothesisViolation, "mixed symbols have no exact division here");
  }
};

/// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
 public:
  using Ring = R;
  using Traits = ring_traits<R>;

  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Traits::zero()) {}
  Matrix(size_t rows, size_t cols, std::vector<R> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) fail(ErrorCode::kShapeMismatch, "entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
      if (row.size() != cols_) fail(ErrorCode::kShapeMismatch, "ragged matrix literal");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
    return m;
  }
  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<R>& entries() const { return a_; }

  R& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const {
    Matrix m(row_idx.size(), col_idx.size());
    for (size_t i = 0; i < row_idx.size(); ++i)
      for (size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
    return m;
  }
  Matrix row(size_t i) const { return submatrix({i}, range(cols_)); }
  Matrix col(size_t j) const { return submatrix(range(rows_), {j}); }
  Matrix without_row(size_t i) const { return submatrix(range_without(rows_, i), range(cols_)); }
  Matrix without_col(size_t j) const { return submatrix(range(rows_), range_without(cols_, j)); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class Fn>
  auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(a_.size());
    for (const auto& v : a_) out.push_back(fn(v));
    return Matrix<S>(rows_, cols_, std::move(out));
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!Traits::is_zero(v)) return false;
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same_shape(x, y);
    Matrix m = x;
    for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + y.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same_shape(x, y);
    Matrix m = x;
    for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - y.a_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorCode::kShapeMismatch, "matrix product shapes do not match");
    Matrix m(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const R& a = x(i, k);
        if (Traits::is_zero(a)) continue;
        for (size_t j = 0; j < y.cols_; ++j) m(i, j) = m(i, j) + a * y(k, j);
      }
    return m;
  }
  friend Matrix operator*(const R& s, const Matrix& x) {
    Matrix m = x;
    for (auto& v : m.a_) v = s * v;
    return m;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += entry_string((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

  static std::vector<size_t> range(size_t n) {
    std::vector<size_t> v(n);
    for (size_t k = 0; k < n; ++k) v[k] = k;
    return v;
  }
  static std::vector<size_t> range_without(size_t n, size_t skip) {
    std::vector<size_t> v;
    for (size_t k = 0; k < n; ++k)
      if (k != skip) v.push_back(k);
    return v;
  }

 private:
  static void check_same_shape(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) fail(ErrorCode::kShapeMismatch, "matrix shapes differ");
  }
  static std::string entry_string(const R& v) {
    if constexpr (requires { v.to_string(); }) {
      return v.to_string();
    } else {
      return "?";
    }
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<R> a_;
};

/// Determinant by Laplace expansion memoized over column subsets. Uses only
/// ring addition and multiplication, so it works over any commutative ring.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  using T = ring_traits<R>;
  if (!m.is_square()) fail(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return T::one();
  if (n > 24) fail(ErrorCode::kShapeMismatch, "matrix too large for cofactor expansion");
  // level[mask] = det of rows 0..k-1 restricted to the columns in mask (|mask| = k).
  std::vector<R> level(size_t{1} << n, T::zero());
  level[0] = T::one();
  std::vector<uint32_t> current{0};
  for (size_t k = 0; k < n; ++k) {
    std::vector<uint32_t> next;
    std::vector<bool> queued(size_t{1} << n, false);
    for (uint32_t mask : current) {
      for (size_t j = 0; j < n; ++j) {
        if (mask & (1u << j)) continue;
        uint32_t bigger = mask | (1u << j);
        if (!queued[bigger]) {
          queued[bigger] = true;
          next.push_back(bigger);
        }
      }
    }
    for (uint32_t mask : next) {
      // Expand along row k: columns of mask in increasing order, position t.
      R acc = T::zero();
      int t = 0;
      for (size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        uint32_t smaller = mask & ~(1u << j);
        const R& a = m(k, j);
        if (!T::is_zero(a) && !T::is_zero(level[smaller])) {
          R term = a * level[smaller];
          if (((k + t) & 1) == 0) {
            acc = acc + term;
          } else {
            acc = acc - term;
          }
        }
        ++t;
      }
      level[mask] = acc;
    }
    current = std::move(next);
  }
  return level[(size_t{1} << n) - 1];
}

/// Fraction-free (Bareiss) elimination for integral domains with exact division.
template <class R>
R det_bareiss(Matrix<R> a) {
  using T = ring_traits<R>;
  static_assert(T::kExactDivision, "Bareiss elimination needs exact division");
  if (!a.is_square()) fail(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return T::one();
  R prev = T::one();
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(a(k, k))) {
      size_t p = k + 1;
      while (p < n && T::is_zero(a(p, k))) ++p;
      if (p == n) return T::zero();
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) a(i, j) = T::divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = T::zero();
    }
    prev = a(k, k);
  }
  R d = a(n - 1, n - 1);
  return negate ? -d : d;
}

template <class R>
R determinant(const Matrix<R>& m) {
  if constexpr (ring_traits<R>::kExactDivision) {
    return det_bareiss(m);
  } else {
    return det_cofactor(m);
  }
}

/// Classical adjugate: adj(M) M = M adj(M) = det(M) I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  if (!m.is_square()) fail(ErrorCode::kShapeMismatch, "adjugate of a non-square matrix");
  const size_t n = m.rows();
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj(0, 0) = ring_traits<R>::one();
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      R minor = determinant(m.without_row(j).without_col(i));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  return adj;
}

/// Exact inverse over a field via the adjugate.
template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
  static_assert(ring_traits<R>::kField, "inverse needs a field");
  R d = determinant(m);
  if (ring_traits<R>::is_zero(d)) fail(ErrorCode::kHypothesisViolation, "matrix is singular");
  return (ring_traits<R>::one() / d) * adjugate(m);
}

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<GaussianRational>;
using PolyMatrix = Matrix<GPoly>;
using RFMatrix = Matrix<RationalFunction>;
using APMatrix = Matrix<APPoly>;
using MixedMatrix = Matrix<MixedSymbol>;

}  // namespace whfactor

#endif  // WHFACTOR_RING_MATRIX_HPP_
