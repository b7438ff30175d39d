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

#ifndef WHFACTOR_RATIONAL_HPP_
#define WHFACTOR_RATIONAL_HPP_

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

#include "whfactor/error.hpp"

namespace whfactor {

// Exact rational number. Thin value wrapper over mpq_class so that
// arithmetic never leaks GMP expression templates into generic code.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::kZeroDenominator, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) fail(ErrorCode::kParse, "bad rational literal '" + text + "'");
    if (q.get_den() == 0) fail(ErrorCode::kZeroDenominator, "rational literal '" + text + "'");
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& value() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  double to_double() const { return q_.get_d(); }
  long double to_long_double() const {
    // mpq -> double loses range only for astronomically large values.
    mpf_class f(q_, 128);
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
  }

  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::kZeroDenominator, "division by zero rational");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const { return Rational(1) / *this; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_.get_str(); }

 private:
  mpq_class q_;
};

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

/// Rational bounds lo <= sqrt(q) <= hi with hi - lo <= 2^-bits (q >= 0).
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& q, unsigned bits = 64) {
  if (q.sign() < 0) fail(ErrorCode::kParse, "sqrt of negative rational");
  if (q.is_zero()) return {Rational(0), Rational(0)};
  // sqrt(a/b) = sqrt(a*b)/b; integer square root of a scaled radicand.
  mpz_class a = q.num() * q.den();
  mpz_class scale = mpz_class(1) << bits;
  mpz_class radicand = a * scale * scale;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  mpz_class denom = q.den() * scale;
  Rational lo(root, denom);
  Rational hi = (root * root == radicand) ? lo : Rational(mpz_class(root + 1), denom);
  return {lo, hi};
}

/// Best rational approximation of x with denominator <= max_den
/// (continued-fraction convergents / semiconvergents).
inline Rational best_rational_approximation(long double x, long max_den) {
  if (!std::isfinite(x)) fail(ErrorCode::kParse, "non-finite value cannot be rationalized");
  bool negative = x < 0;
  if (negative) x = -x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_ld = std::floor(frac);
    if (a_ld > 1e18L) break;
    mpz_class a(std::to_string(static_cast<long long>(a_ld)));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Semiconvergent with the largest admissible partial quotient.
      mpz_class k = (mpz_class(max_den) - q0) / q1;
      mpz_class ps = k * p1 + p0, qs = k * q1 + q0;
      long double cand_s = mpq_class(ps, qs).get_d();
      long double cand_c = mpq_class(p1, q1).get_d();
      if (qs > 0 && std::fabs(cand_s - x) < std::fabs(cand_c - x)) {
        p1 = ps;
        q1 = qs;
      }
      break;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double rem = frac - a_ld;
    if (rem < 1e-30L) break;
    frac = 1.0L / rem;
  }
  Rational r(p1, q1);
  return negative ? -r : r;
}

}  // namespace whfactor

template <>
struct std::hash<whfactor::Rational> {
  size_t operator()(const whfactor::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

#endif  // WHFACTOR_RATIONAL_HPP_
