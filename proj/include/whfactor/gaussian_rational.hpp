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

#ifndef WHFACTOR_GAUSSIAN_RATIONAL_HPP_
#define WHFACTOR_GAUSSIAN_RATIONAL_HPP_

#include <complex>
#include <ostream>
#include <string>

#include "whfactor/rational.hpp"

namespace whfactor {

/// Element re + i*im of Q(i). Both parts are canonical rationals, so
/// structural equality is mathematical equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    Rational n = norm();
    if (n.is_zero()) fail(ErrorCode::kZeroDenominator, "inverse of zero in Q(i)");
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<long double> to_complex() const { return {re_.to_long_double(), im_.to_long_double()}; }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    if (re_.is_zero()) return imag_string(im_);
    std::string im = imag_string(im_);
    return "(" + re_.to_string() + (im[0] == '-' ? "" : "+") + im + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  static std::string imag_string(const Rational& im) {
    if (im == Rational(1)) return "i";
    if (im == Rational(-1)) return "-i";
    if (im.is_integer()) return im.to_string() + "i";
    if (im.sign() < 0) return "-(" + (-im).to_string() + ")i";
    return "(" + im.to_string() + ")i";
  }

  Rational re_;
  Rational im_;
};

inline GaussianRational pow(const GaussianRational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

/// Half-plane of a point of C: upper (Im > 0), real line, lower (Im < 0).
enum class HalfPlane { kUpper, kReal, kLower };

inline const char* half_plane_name(HalfPlane h) {
  switch (h) {
    case HalfPlane::kUpper: return "C+";
    case HalfPlane::kReal: return "R";
    case HalfPlane::kLower: return "C-";
  }
  return "?";
}

inline HalfPlane classify_point(const GaussianRational& z) {
  int s = z.im().sign();
  return s > 0 ? HalfPlane::kUpper : (s < 0 ? HalfPlane::kLower : HalfPlane::kReal);
}

}  // namespace whfactor

#endif  // WHFACTOR_GAUSSIAN_RATIONAL_HPP_
