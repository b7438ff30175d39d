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


// Random instance generators shared by the test binaries. Every generator is
// driven by an explicit std::mt19937 so failures reproduce from the seed.

#ifndef WHFACTOR_TESTS_SUPPORT_HPP_
#define WHFACTOR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <vector>

#include "whfactor/whfactor.hpp"

namespace whfactor::testing {

inline int uniform_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(std::mt19937& rng, int span = 5, int max_den = 3) {
  return Rational(uniform_int(rng, -span, span), uniform_int(rng, 1, max_den));
}

inline GaussianRational small_gaussian(std::mt19937& rng, int span = 5, int max_den = 3) {
  return {small_rational(rng, span, max_den), small_rational(rng, span, max_den)};
}

inline GaussianRational nonzero_gaussian(std::mt19937& rng) {
  GaussianRational z;
  while (z.is_zero()) z = small_gaussian(rng);
  return z;
}

inline GPoly small_poly(std::mt19937& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(small_gaussian(rng, 3, 2));
  return GPoly(std::move(c));
}

/// Point strictly inside the requested half plane, small integer parts.
inline GaussianRational point_in(std::mt19937& rng, HalfPlane side) {
  int im = uniform_int(rng, 1, 4);
  if (side == HalfPlane::kLower) im = -im;
  if (side == HalfPlane::kReal) im = 0;
  return {Rational(uniform_int(rng, -4, 4), uniform_int(rng, 1, 2)), Rational(im)};
}

inline RationalFunction from_roots(const GaussianRational& lead, const std::vector<GaussianRational>& zeros,
                                   const std::vector<GaussianRational>& poles) {
  GPoly num(lead), den(1);
  for (const auto& z : zeros) num = num * GPoly::linear(z);
  for (const auto& p : poles) den = den * GPoly::linear(p);
  return RationalFunction(num, den);
}

/// Random element of H+ (poles in C-, bounded at infinity).
inline RationalFunction random_h(std::mt19937& rng, bool plus, int max_degree = 2) {
  int d = uniform_int(rng, 0, max_degree);
  std::vector<GaussianRational> poles;
  for (int k = 0; k < d; ++k) poles.push_back(point_in(rng, plus ? HalfPlane::kLower : HalfPlane::kUpper));
  GPoly num = small_poly(rng, d);
  if (num.is_zero()) num = GPoly(1);
  return from_roots(1, {}, poles) * RationalFunction(num);
}

template <class R>
struct UnimodularPair {
  Matrix<R> m;
  Matrix<R> inv;
};

/// Like random_unimodular, with the inverse from (I + N)^-1 = sum (-N)^k on
/// each nilpotent-shifted triangular factor; no division needed.
template <class R, class Gen>
UnimodularPair<R> random_unimodular_pair(std::mt19937& rng, size_t n, Gen&& entry) {
  Matrix<R> l = Matrix<R>::identity(n), u = Matrix<R>::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i > j) l(i, j) = entry(rng);
      if (i < j) u(i, j) = entry(rng);
    }
  auto tri_inverse = [n](const Matrix<R>& t) {
    Matrix<R> minus_n = Matrix<R>::identity(n) - t;
    Matrix<R> inv = Matrix<R>::identity(n), power = Matrix<R>::identity(n);
    for (size_t k = 1; k < n; ++k) {
      power = power * minus_n;
      inv = inv + power;
    }
    return inv;
  };
  return {l * u, tri_inverse(u) * tri_inverse(l)};
}

/// Degree-balanced symbol with roots off the line.
inline FactoredRational random_symbol(std::mt19937& rng) {
  FactoredRational f(nonzero_gaussian(rng));
  int total = 0;
  int count = uniform_int(rng, 1, 4);
  for (int j = 0; j < count; ++j) {
    int m = uniform_int(rng, -2, 2);
    if (m == 0) m = 1;
    f.multiply_root(point_in(rng, uniform_int(rng, 0, 1) ? HalfPlane::kUpper : HalfPlane::kLower), m);
    total += m;
  }
  if (total != 0) f.multiply_root(point_in(rng, uniform_int(rng, 0, 1) ? HalfPlane::kUpper : HalfPlane::kLower), -total);
  return f;
}

/// Same, rescaled by a power of r so that its index is k.
inline FactoredRational random_symbol_with_index(std::mt19937& rng, int k) {
  FactoredRational f = random_symbol(rng);
  int d = k - winding_exact(f);
  f.multiply_root(GaussianRational::i(), d);
  f.multiply_root(-GaussianRational::i(), -d);
  return f;
}

/// Unimodular matrix L*U over R with unit diagonal; entries drawn by `entry`.
template <class R, class Gen>
Matrix<R> random_unimodular(std::mt19937& rng, size_t n, Gen&& entry) {
  Matrix<R> l = Matrix<R>::identity(n), u = Matrix<R>::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i > j) l(i, j) = entry(rng);
      if (i < j) u(i, j) = entry(rng);
    }
  return l * u;
}

inline APPoly random_ap(std::mt19937& rng, int terms, int freq_span = 4, int freq_den = 2) {
  APPoly p;
  for (int k = 0; k < terms; ++k)
    p.add_term(Rational(uniform_int(rng, -freq_span * freq_den, freq_span * freq_den), freq_den),
               small_gaussian(rng, 3, 2));
  return p;
}

// Integer polynomials in six commuting symbols, enough for symbolic 3x2 checks.
class Sym {
 public:
  using Mono = std::array<int, 6>;
  Sym() = default;
  Sym(int c) {  // NOLINT
    if (c != 0) t_[Mono{}] = c;
  }
  static Sym var(int k) {
    Sym s;
    Mono m{};
    m[k] = 1;
    s.t_[m] = 1;
    return s;
  }
  Sym operator-() const {
    Sym s = *this;
    for (auto& [m, c] : s.t_) c = -c;
    return s;
  }
  friend Sym operator+(Sym a, const Sym& b) {
    for (const auto& [m, c] : b.t_) a.add(m, c);
    return a;
  }
  friend Sym operator-(const Sym& a, const Sym& b) { return a + (-b); }
  friend Sym operator*(const Sym& a, const Sym& b) {
    Sym s;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m;
        for (int k = 0; k < 6; ++k) m[k] = ma[k] + mb[k];
        s.add(m, ca * cb);
      }
    return s;
  }
  friend bool operator==(const Sym& a, const Sym& b) { return a.t_ == b.t_; }

 private:
  void add(const Mono& m, long c) {
    long& v = t_[m];
    v += c;
    if (v == 0) t_.erase(m);
  }
  std::map<Mono, long> t_;
};

/// Leibniz formula, used as an independent determinant oracle.
template <class R>
R leibniz_det(const Matrix<R>& m) {
  const size_t n = m.rows();
  std::vector<size_t> perm(n);
  for (size_t k = 0; k < n; ++k) perm[k] = k;
  R total = ring_traits<R>::zero();
  do {
    int inversions = 0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    R term = ring_traits<R>::one();
    for (size_t k = 0; k < n; ++k) term = term * m(k, perm[k]);
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace whfactor::testing

#endif  // WHFACTOR_TESTS_SUPPORT_HPP_
