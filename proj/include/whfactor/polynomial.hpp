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

#ifndef WHFACTOR_POLYNOMIAL_HPP_
#define WHFACTOR_POLYNOMIAL_HPP_

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/gaussian_rational.hpp"

namespace whfactor {

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline std::complex<long double> to_complex(const Rational& r) { return {r.to_long_double(), 0.0L}; }
inline std::complex<long double> to_complex(const GaussianRational& z) { return z.to_complex(); }
inline Rational conj(const Rational& r) { return r; }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const GaussianRational& z) { return z.to_string(); }

/// Dense univariate polynomial over an exact field F, ascending coefficients.
/// The zero polynomial has no coefficients and degree -1.
template <class F>
class Polynomial {
 public:
  using Field = F;

  Polynomial() = default;
  Polynomial(F constant) {  // NOLINT(google-explicit-constructor)
    if (!whfactor::is_zero(constant)) c_.push_back(std::move(constant));
  }
  Polynomial(int constant) : Polynomial(F(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Polynomial x() { return Polynomial(std::vector<F>{F(0), F(1)}); }
  static Polynomial monomial(F coeff, int degree) {
    std::vector<F> c(static_cast<size_t>(degree) + 1, F(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }
  /// (x - root)
  static Polynomial linear(const F& root) { return Polynomial(std::vector<F>{-root, F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : F(0); }
  F lead() const { return c_.empty() ? F(0) : c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lead();
    return *this * inv;
  }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::complex<long double> eval(std::complex<long double> x) const {
    std::complex<long double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_complex(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<F> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  /// Coefficient-wise conjugate: for real x, p.conj_coeffs()(x) = conj(p(x)).
  Polynomial conj_coeffs() const {
    std::vector<F> d;
    d.reserve(c_.size());
    for (const auto& a : c_) d.push_back(whfactor::conj(a));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const F& s) {
    if (whfactor::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
  friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (whfactor::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const F& a = c_[k];
      if (whfactor::is_zero(a)) continue;
      std::string coeff = whfactor::to_string(a);
      if (!out.empty()) {
        if (coeff[0] == '-') {
          out += " - ";
          coeff.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (k == 0) {
        out += coeff;
      } else if (coeff == "-1") {
        out += "-";
      } else if (coeff != "1") {
        out += coeff + "*";
      }
      if (k != 0) {
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && whfactor::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
Polynomial<F> pow(const Polynomial<F>& base, int exponent) {
  Polynomial<F> result(F(1));
  Polynomial<F> b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    b = b * b;
    exponent >>= 1;
  }
  return result;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) fail(ErrorCode::kZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<F>(), a};
  std::vector<F> rem = a.coeffs();
  std::vector<F> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
  const F inv_lead = F(1) / b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(rem[k])) continue;
    F factor = rem[k] * inv_lead;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
    quot[k - db] = std::move(factor);
  }
  rem.resize(static_cast<size_t>(db));
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

template <class F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
  return divmod(a, b).second;
}

/// Division that must be exact; a nonzero remainder is a logic error upstream.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::kHypothesisViolation, "polynomial division is not exact");
  return q;
}

template <class F>
bool divides(const Polynomial<F>& d, const Polynomial<F>& a) {
  return divmod(a, d).second.is_zero();
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    Polynomial<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

template <class F>
struct XgcdResult {
  Polynomial<F> g;  // monic gcd (or zero)
  Polynomial<F> s;  // s*a + t*b = g
  Polynomial<F> t;
};

/// Extended Euclid; the cofactors are the minimal-degree ones
/// (deg s < deg b - deg g, deg t < deg a - deg g).
template <class F>
XgcdResult<F> xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial<F> s2 = s0 - q * s1;
    Polynomial<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, Polynomial<F>(), Polynomial<F>()};
  F inv = F(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Yun's square-free decomposition: p = lead * prod f_k^k with f_k monic,
/// square-free and pairwise coprime. Entries with constant f_k are omitted.
template <class F>
std::vector<std::pair<Polynomial<F>, int>> squarefree_decomposition(const Polynomial<F>& p) {
  std::vector<std::pair<Polynomial<F>, int>> out;
  if (p.degree() <= 0) return out;
  Polynomial<F> f = p.monic();
  Polynomial<F> d = f.derivative();
  Polynomial<F> a = gcd(f, d);
  Polynomial<F> b = exact_quotient(f, a);
  Polynomial<F> c = exact_quotient(d, a);
  Polynomial<F> db = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    Polynomial<F> g = gcd(b, db);
    if (g.degree() > 0) out.emplace_back(g, k);
    Polynomial<F> b_next = exact_quotient(b, g);
    Polynomial<F> c_next = exact_quotient(db, g);
    db = c_next - b_next.derivative();
    b = std::move(b_next);
    ++k;
  }
  return out;
}

using GPoly = Polynomial<GaussianRational>;
using QPoly = Polynomial<Rational>;

inline QPoly real_part(const GPoly& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) c.push_back(a.re());
  return QPoly(std::move(c));
}

inline QPoly imag_part(const GPoly& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) c.push_back(a.im());
  return QPoly(std::move(c));
}

inline GPoly to_gpoly(const QPoly& p) {
  std::vector<GaussianRational> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return GPoly(std::move(c));
}

}  // namespace whfactor

#endif  // WHFACTOR_POLYNOMIAL_HPP_
