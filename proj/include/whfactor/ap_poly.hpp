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


#ifndef WHFACTOR_AP_POLY_HPP_
#define WHFACTOR_AP_POLY_HPP_

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/gaussian_rational.hpp"

namespace whfactor {

/// Almost periodic polynomial sum_k c_k e_{lambda_k}, e_lambda(xi) = exp(i lambda xi),
/// with exact rational frequencies. Zero coefficients are never stored.
class APPoly {
 public:
  using Terms = std::map<Rational, GaussianRational>;

  APPoly() = default;
  APPoly(GaussianRational c) { add_term(Rational(0), std::move(c)); }  // NOLINT
  APPoly(int c) : APPoly(GaussianRational(c)) {}  // NOLINT
  explicit APPoly(Terms terms) {
    for (auto& [lambda, c] : terms) add_term(lambda, c);
  }

  static APPoly e(const Rational& lambda, GaussianRational c = GaussianRational(1)) {
    APPoly p;
    p.add_term(lambda, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }
  bool is_monomial() const { return terms_.size() == 1; }
  GaussianRational coeff(const Rational& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }
  const Rational& min_freq() const { return terms_.begin()->first; }
  const Rational& max_freq() const { return terms_.rbegin()->first; }
  std::vector<Rational> support() const {
    std::vector<Rational> out;
    for (const auto& [lambda, c] : terms_) out.push_back(lambda);
    return out;
  }

  /// All frequencies >= 0 (plus) or <= 0 (minus).
  bool in_half(bool plus) const {
    if (terms_.empty()) return true;
    return plus ? min_freq().sign() >= 0 : max_freq().sign() <= 0;
  }

  void add_term(const Rational& lambda, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Multiplication by e_mu.
  APPoly shifted(const Rational& mu) const {
    APPoly out;
    for (const auto& [lambda, c] : terms_) out.terms_.emplace(lambda + mu, c);
    return out;
  }

  /// Pointwise conjugate on the real line: conj(c) e_{-lambda}.
  APPoly conj_on_line() const {
    APPoly out;
    for (const auto& [lambda, c] : terms_) out.terms_.emplace(-lambda, c.conj());
    return out;
  }

  std::complex<long double> eval(long double xi) const {
    std::complex<long double> v = 0;
    for (const auto& [lambda, c] : terms_) v += c.to_complex() * std::polar(1.0L, lambda.to_long_double() * xi);
    return v;
  }

  APPoly operator-() const {
    APPoly out = *this;
    for (auto& [lambda, c] : out.terms_) c = -c;
    return out;
  }
  APPoly& operator+=(const APPoly& o) {
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
  }
  APPoly& operator-=(const APPoly& o) {
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
    return *this;
  }
  friend APPoly operator+(APPoly a, const APPoly& b) { return a += b; }
  friend APPoly operator-(APPoly a, const APPoly& b) { return a -= b; }
  friend APPoly operator*(const APPoly& a, const APPoly& b) {
    APPoly out;
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_) out.add_term(la + lb, ca * cb);
    return out;
  }
  APPoly& operator*=(const APPoly& o) { return *this = *this * o; }
  friend bool operator==(const APPoly& a, const APPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lambda, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (!lambda.is_zero()) s += "*e[" + lambda.to_string() + "]";
    }
    return s;
  }

 private:
  Terms terms_;
};

inline APPoly pow(const APPoly& base, long exponent) {
  APPoly result(1);
  for (long k = 0; k < exponent; ++k) result *= base;
  return result;
}

/// Upper bound on |c| for a Gaussian rational, exact rational.
inline Rational modulus_upper(const GaussianRational& c, unsigned bits = 64) {
  return sqrt_bounds(c.norm(), bits).second;
}
inline Rational modulus_lower(const GaussianRational& c, unsigned bits = 64) {
  return sqrt_bounds(c.norm(), bits).first;
}

/// Rational upper bound on the Wiener norm sum |c_lambda|.
inline Rational wiener_norm_upper(const APPoly& p) {
  Rational total(0);
  for (const auto& [lambda, c] : p.terms()) total += modulus_upper(c);
  return total;
}

}  // namespace whfactor

#endif  // WHFACTOR_AP_POLY_HPP_
