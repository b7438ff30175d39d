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

#ifndef WHFACTOR_RATIONAL_FUNCTION_HPP_
#define WHFACTOR_RATIONAL_FUNCTION_HPP_

#include <complex>
#include <string>
#include <utility>

#include "whfactor/root_location.hpp"

namespace whfactor {

/// Rational function num/den of the real variable xi over Q(i), kept in
/// canonical form: den monic, gcd(num, den) = 1, zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(GaussianRational(1)) {}
  RationalFunction(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(GaussianRational(c)) {}  // NOLINT
  RationalFunction(GPoly p) : num_(std::move(p)), den_(GaussianRational(1)) {}  // NOLINT
  RationalFunction(GPoly num, GPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize_in_place(); }

  static RationalFunction xi() { return RationalFunction(GPoly::x()); }
  /// r(xi) = (xi - i)/(xi + i).
  static RationalFunction r() {
    return {GPoly::linear(GaussianRational::i()), GPoly::linear(-GaussianRational::i())};
  }

  const GPoly& num() const { return num_; }
  const GPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  GaussianRational constant_value() const { return num_.coeff(0); }

  /// deg num - deg den (the order of the pole at infinity); zero -> -inf as INT_MIN/2.
  int degree() const { return num_.is_zero() ? -(1 << 29) : num_.degree() - den_.degree(); }

  bool bounded_at_infinity() const { return degree() <= 0; }
  /// Value at infinity when bounded.
  GaussianRational value_at_infinity() const {
    if (degree() < 0) return GaussianRational(0);
    if (degree() > 0) fail(ErrorCode::kRealPole, "rational function unbounded at infinity");
    return num_.lead() / den_.lead();
  }

  bool has_real_pole() const { return count_root_locations(den_).real > 0; }
  /// Bounded on the one-point compactified real line (element of L_inf).
  bool bounded_on_line() const { return bounded_at_infinity() && !has_real_pole(); }
  /// Rational element of H_inf^+: bounded at infinity, poles only in open C-.
  bool in_h_plus() const { return bounded_at_infinity() && all_roots_in(den_, HalfPlane::kLower); }
  /// Rational element of H_inf^-: bounded at infinity, poles only in open C+.
  bool in_h_minus() const { return bounded_at_infinity() && all_roots_in(den_, HalfPlane::kUpper); }
  bool in_h(bool plus) const { return plus ? in_h_plus() : in_h_minus(); }
  /// Invertible in L_inf: bounded, no zeros on R, nonzero at infinity.
  bool invertible_on_line() const {
    return !is_zero() && degree() == 0 && !has_real_pole() && count_root_locations(num_).real == 0;
  }

  GaussianRational eval(const GaussianRational& x) const {
    GaussianRational d = den_.eval(x);
    if (d.is_zero()) fail(ErrorCode::kRealPole, "evaluation at a pole");
    return num_.eval(x) / d;
  }
  std::complex<long double> eval(std::complex<long double> x) const { return num_.eval(x) / den_.eval(x); }

  /// f*(xi) := conj(f(xi)) for real xi, realized exactly by conjugating coefficients.
  RationalFunction conj_on_line() const { return {num_.conj_coeffs(), den_.conj_coeffs()}; }

  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorCode::kZeroDenominator, "inverse of the zero rational function");
    return {den_, num_};
  }

  RationalFunction operator-() const {
    RationalFunction f = *this;
    f.num_ = -f.num_;
    return f;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    // Cross-cancel before multiplying to keep degrees small.
    GPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    GPoly n = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
    GPoly d = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
    return {std::move(n), std::move(d)};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "xi") const {
    if (den_.degree() == 0) return "(" + num_.to_string(var) + ")";
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  RationalFunction scaled(const GaussianRational& c) const {
    RationalFunction f = *this;
    f.num_ *= c;
    return f;
  }

  void normalize_in_place() {
    if (den_.is_zero()) fail(ErrorCode::kZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = GPoly(GaussianRational(1));
      return;
    }
    if (den_.degree() > 0) {
      GPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    GaussianRational inv = GaussianRational(1) / den_.lead();
    if (!(inv == GaussianRational(1))) {
      num_ *= inv;
      den_ *= inv;
    }
  }

  GPoly num_;
  GPoly den_;
};

/// Canonical reduction of num/den (monic denominator, coprime parts).
inline RationalFunction normalize(const GPoly& num, const GPoly& den) { return {num, den}; }

inline RationalFunction pow(const RationalFunction& f, long exponent) {
  if (exponent < 0) return pow(f.inverse(), -exponent);
  RationalFunction result(1);
  RationalFunction b = f;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace whfactor

#endif  // WHFACTOR_RATIONAL_FUNCTION_HPP_
