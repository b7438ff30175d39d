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


#ifndef WHFACTOR_SCALAR_WH_HPP_
#define WHFACTOR_SCALAR_WH_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "whfactor/factored_rational.hpp"

namespace whfactor {

/// f = gamma_minus * r^k * gamma_plus. gamma_plus is 1 at infinity.
struct ScalarWH {
  FactoredRational gamma_minus;
  int k = 0;
  FactoredRational gamma_plus;

  RationalFunction gamma_minus_rf() const { return expand(gamma_minus); }
  RationalFunction gamma_plus_rf() const { return expand(gamma_plus); }
};

inline void require_invertible_on_line(const FactoredRational& f) {
  for (const auto& r : f.factors())
    if (r.side == HalfPlane::kReal)
      fail(ErrorCode::kSymbolSingularOnLine,
           "symbol has a zero or pole on the real line at " +
               (r.exact ? r.exact->to_string() : std::to_string(static_cast<double>(r.approx.real()))));
  if (!f.degree_balanced()) fail(ErrorCode::kSymbolSingularOnLine, "symbol has a zero or pole at infinity");
}

/// Zeros minus poles in C+, with multiplicity.
inline int winding_exact(const FactoredRational& f) {
  require_invertible_on_line(f);
  int k = 0;
  for (const auto& r : f.factors())
    if (r.side == HalfPlane::kUpper) k += r.mult;
  return k;
}

inline ScalarWH wh_factor_scalar(const FactoredRational& f) {
  ScalarWH out;
  out.k = winding_exact(f);
  out.gamma_minus = f.restricted_to(HalfPlane::kUpper);
  out.gamma_minus.set_lead(f.lead());
  out.gamma_minus.multiply_root(GaussianRational::i(), -out.k);
  out.gamma_plus = f.restricted_to(HalfPlane::kLower);
  out.gamma_plus.multiply_root(-GaussianRational::i(), out.k);
  return out;
}

inline ScalarWH wh_factor_scalar(const RationalFunction& f, long double tol = 1e-9L) {
  return wh_factor_scalar(factor_numeric(f, tol));
}

/// Exact index of a rational symbol without factoring: zeros minus poles in C+.
inline int winding_exact(const RationalFunction& f) {
  if (!f.invertible_on_line()) fail(ErrorCode::kSymbolSingularOnLine, "symbol is not invertible on the line");
  return count_root_locations(f.num()).upper - count_root_locations(f.den()).upper;
}

struct ProjectionResult {
  RationalFunction plus_part;   // poles in C-
  RationalFunction minus_part;  // poles in C+
};

namespace detail {

// psi = num/den strictly proper with den split into C+ and C- parts.
inline ProjectionResult split_strictly_proper(const GPoly& num, const GPoly& den) {
  HalfPlaneSplit split = half_plane_split(den);
  GaussianRational scale = den.lead();
  GPoly n = num * scale.inverse();
  XgcdResult<GaussianRational> x = xgcd(split.upper, split.lower);
  // 1 = s*upper + t*lower  =>  n/(upper*lower) = n*t/upper + n*s/lower.
  GPoly a = (n * x.t) % split.upper;
  GPoly b = (n * x.s) % split.lower;
  return {RationalFunction(b, split.lower), RationalFunction(a, split.upper)};
}

}  // namespace detail

/// Weighted splitting phi = P~+ phi + P~- phi: partial fractions of
/// phi/(xi+i), each part multiplied back by (xi+i).
inline ProjectionResult riesz_project(const RationalFunction& phi) {
  if (!phi.bounded_on_line()) fail(ErrorCode::kRealPole, "symbol is not bounded on the real line");
  if (phi.is_zero()) return {RationalFunction(), RationalFunction()};
  GPoly weight = GPoly::linear(-GaussianRational::i());
  ProjectionResult parts = detail::split_strictly_proper(phi.num(), phi.den() * weight);
  RationalFunction w(weight);
  return {parts.plus_part * w, parts.minus_part * w};
}

/// Unweighted splitting of a strictly proper rational function without real
/// poles: plus part keeps the C- poles, minus part the C+ poles.
inline ProjectionResult plain_project(const RationalFunction& phi) {
  if (phi.is_zero()) return {RationalFunction(), RationalFunction()};
  if (phi.degree() >= 0) fail(ErrorCode::kHypothesisViolation, "plain projection needs a strictly proper function");
  if (phi.has_real_pole()) fail(ErrorCode::kRealPole, "function has a real pole");
  return detail::split_strictly_proper(phi.num(), phi.den());
}

/// Winding number of xi -> f(xi) along the real line closed at infinity,
/// xi = tan(theta/2). Steps are refined until each argument increment is
/// below pi/2.
inline int winding_numeric(const std::function<std::complex<long double>(long double)>& f,
                           std::complex<long double> at_infinity, int grid = 256, long double tol = 1e-9L) {
  using C = std::complex<long double>;
  const long double pi = std::numbers::pi_v<long double>;
  auto value = [&](long double theta) -> C {
    if (std::abs(std::abs(theta) - pi) < 1e-15L) return at_infinity;
    C v = f(std::tan(theta / 2));
    if (std::abs(v) < tol) fail(ErrorCode::kNearZeroOnContour, "symbol nearly vanishes on the contour");
    return v;
  };
  if (std::abs(at_infinity) < tol) fail(ErrorCode::kNearZeroOnContour, "symbol nearly vanishes at infinity");
  long double total = 0;
  std::function<void(long double, C, long double, C, int)> walk = [&](long double t0, C v0, long double t1, C v1,
                                                                    int depth) {
    long double step = std::arg(v1 / v0);
    if (std::abs(step) < pi / 2 || depth > 40) {
      total += step;
      return;
    }
    long double tm = (t0 + t1) / 2;
    C vm = value(tm);
    walk(t0, v0, tm, vm, depth + 1);
    walk(tm, vm, t1, v1, depth + 1);
  };
  long double t_prev = -pi;
  C v_prev = at_infinity;
  for (int k = 1; k <= grid; ++k) {
    long double t = -pi + 2 * pi * k / grid;
    C v = k == grid ? at_infinity : value(t);
    walk(t_prev, v_prev, t, v, 0);
    t_prev = t;
    v_prev = v;
  }
  return static_cast<int>(std::lround(total / (2 * pi)));
}

inline int winding_numeric(const RationalFunction& f, int grid = 256, long double tol = 1e-9L) {
  if (!f.bounded_at_infinity() || f.value_at_infinity().is_zero())
    fail(ErrorCode::kNearZeroOnContour, "symbol vanishes or blows up at infinity");
  return winding_numeric([&](long double xi) { return f.eval(std::complex<long double>(xi, 0)); },
                         f.value_at_infinity().to_complex(), grid, tol);
}

inline int winding_numeric(const FactoredRational& f, int grid = 256, long double tol = 1e-9L) {
  if (!f.degree_balanced()) fail(ErrorCode::kNearZeroOnContour, "symbol vanishes or blows up at infinity");
  return winding_numeric([&](long double xi) { return f.eval(std::complex<long double>(xi, 0)); },
                         f.lead().to_complex(), grid, tol);
}

}  // namespace whfactor

#endif  // WHFACTOR_SCALAR_WH_HPP_
