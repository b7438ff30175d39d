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


#ifndef WHFACTOR_MIXED_SYMBOL_HPP_
#define WHFACTOR_MIXED_SYMBOL_HPP_

#include <map>
#include <string>
#include <utility>

#include "whfactor/ap_poly.hpp"
#include "whfactor/rational_function.hpp"

namespace whfactor {

/// Finite sum sum_k r_k(xi) e_{lambda_k} with rational-function coefficients.
/// Supports ring arithmetic only.
class MixedSymbol {
 public:
  using Terms = std::map<Rational, RationalFunction>;

  MixedSymbol() = default;
  MixedSymbol(RationalFunction f) { add_term(Rational(0), std::move(f)); }  // NOLINT
  MixedSymbol(int c) : MixedSymbol(RationalFunction(c)) {}  // NOLINT
  MixedSymbol(const APPoly& p) {  // NOLINT
    for (const auto& [lambda, c] : p.terms()) add_term(lambda, RationalFunction(c));
  }

  static MixedSymbol term(const Rational& lambda, RationalFunction f) {
    MixedSymbol s;
    s.add_term(lambda, std::move(f));
    return s;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only the zero frequency occurs.
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }
  /// Every coefficient is a constant.
  bool is_pure_ap() const {
    for (const auto& [lambda, f] : terms_)
      if (!f.is_constant()) return false;
    return true;
  }
  RationalFunction to_rational() const {
    if (!is_rational()) fail(ErrorCode::kShapeViolation, "mixed symbol has nonzero frequencies");
    return terms_.empty() ? RationalFunction() : terms_.begin()->second;
  }
  APPoly to_ap() const {
    if (!is_pure_ap()) fail(ErrorCode::kShapeViolation, "mixed symbol has non-constant coefficients");
    APPoly p;
    for (const auto& [lambda, f] : terms_) p.add_term(lambda, f.constant_value());
    return p;
  }

  void add_term(const Rational& lambda, const RationalFunction& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::complex<long double> eval(long double xi) const {
    std::complex<long double> v = 0;
    for (const auto& [lambda, f] : terms_)
      v += f.eval(std::complex<long double>(xi, 0)) * std::polar(1.0L, lambda.to_long_double() * xi);
    return v;
  }

  MixedSymbol operator-() const {
    MixedSymbol out = *this;
    for (auto& [lambda, f] : out.terms_) f = -f;
    return out;
  }
  MixedSymbol& operator+=(const MixedSymbol& o) {
    for (const auto& [lambda, f] : o.terms_) add_term(lambda, f);
    return *this;
  }
  MixedSymbol& operator-=(const MixedSymbol& o) {
    for (const auto& [lambda, f] : o.terms_) add_term(lambda, -f);
    return *this;
  }
  friend MixedSymbol operator+(MixedSymbol a, const MixedSymbol& b) { return a += b; }
  friend MixedSymbol operator-(MixedSymbol a, const MixedSymbol& b) { return a -= b; }
  friend MixedSymbol operator*(const MixedSymbol& a, const MixedSymbol& b) {
    MixedSymbol out;
    for (const auto& [la, fa] : a.terms_)
      for (const auto& [lb, fb] : b.terms_) out.add_term(la + lb, fa * fb);
    return out;
  }
  MixedSymbol& operator*=(const MixedSymbol& o) { return *this = *this * o; }
  friend bool operator==(const MixedSymbol& a, const MixedSymbol& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lambda, f] : terms_) {
      if (!s.empty()) s += " + ";
      s += f.to_string();
      if (!lambda.is_zero()) s += "*e[" + lambda.to_string() + "]";
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace whfactor

#endif  // WHFACTOR_MIXED_SYMBOL_HPP_
