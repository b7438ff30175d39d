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

#ifndef WHFACTOR_ROOT_LOCATION_HPP_
#define WHFACTOR_ROOT_LOCATION_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "whfactor/polynomial.hpp"

namespace whfactor {

// ---------------------------------------------------------------------------
// Exact root location.
//
// Real-root and half-plane counts are decided with Sturm sequences over Q,
// never numerically. For p = A + iB on the real line (A, B real), common
// factors of A and B carry the real roots and conjugate pairs; what remains
// has no real roots and its upper/lower split follows from the Cauchy index
// of B/A after normalizing p to be monic.
// ---------------------------------------------------------------------------

namespace detail {

inline int sign_at_infinity(const QPoly& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = p.lead().sign();
  if (!plus && (p.degree() % 2 == 1)) s = -s;
  return s;
}

inline std::vector<QPoly> signed_remainder_sequence(const QPoly& a, const QPoly& b) {
  std::vector<QPoly> seq{a, b};
  while (!seq.back().is_zero()) {
    const QPoly& p0 = seq[seq.size() - 2];
    const QPoly& p1 = seq.back();
    QPoly r = -(divmod(p0, p1).second);
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return seq;
}

inline int sign_variations(const std::vector<QPoly>& seq, bool plus) {
  int variations = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at_infinity(p, plus);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace detail

/// Cauchy index of num/den over the whole real line.
inline int cauchy_index(const QPoly& num, const QPoly& den) {
  if (num.is_zero() || den.is_zero()) return 0;
  auto seq = detail::signed_remainder_sequence(den, num);
  return detail::sign_variations(seq, false) - detail::sign_variations(seq, true);
}

/// Number of distinct real roots of a real polynomial.
inline int count_distinct_real_roots(const QPoly& p) {
  if (p.degree() <= 0) return 0;
  return cauchy_index(p.derivative(), p);
}

/// Real roots counted with multiplicity.
inline int count_real_roots(const QPoly& p) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) total += mult * count_distinct_real_roots(factor);
  return total;
}

struct RootCounts {
  int upper = 0;  // Im > 0
  int real = 0;
  int lower = 0;  // Im < 0
  friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

/// Roots of p in C+, on R and in C-, with multiplicity. Exact.
inline RootCounts count_root_locations(const GPoly& p) {
  RootCounts counts;
  if (p.degree() <= 0) return counts;
  QPoly a = real_part(p), b = imag_part(p);
  QPoly common = b.is_zero() ? a.monic() : (a.is_zero() ? b.monic() : gcd(a, b));
  if (common.degree() > 0) {
    counts.real = count_real_roots(common);
    int pairs = (common.degree() - counts.real) / 2;
    counts.upper += pairs;
    counts.lower += pairs;
  }
  GPoly rest = exact_quotient(p, to_gpoly(common.is_zero() ? QPoly(Rational(1)) : common)).monic();
  if (rest.degree() > 0) {
    int n = rest.degree();
    // Z+ - Z- = -Ind(B/A) for monic p without real roots.
    int diff = -cauchy_index(imag_part(rest), real_part(rest));
    counts.upper += (n + diff) / 2;
    counts.lower += (n - diff) / 2;
  }
  return counts;
}

inline bool all_roots_in(const GPoly& p, HalfPlane where) {
  RootCounts c = count_root_locations(p);
  switch (where) {
    case HalfPlane::kUpper: return c.real == 0 && c.lower == 0;
    case HalfPlane::kLower: return c.real == 0 && c.upper == 0;
    case HalfPlane::kReal: return c.upper == 0 && c.lower == 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Numeric roots (Aberth-Ehrlich on square-free parts, Newton polish).
// ---------------------------------------------------------------------------

using ComplexLD = std::complex<long double>;

struct NumericRoot {
  ComplexLD value;
  int multiplicity = 1;
};

namespace detail {

inline std::vector<ComplexLD> aberth(const GPoly& p) {
  const int n = p.degree();
  std::vector<ComplexLD> roots;
  if (n <= 0) return roots;
  std::vector<ComplexLD> c;
  for (const auto& a : p.coeffs()) c.push_back(a.to_complex());
  if (n == 1) return {-c[0] / c[1]};
  GPoly dp = p.derivative();
  // Cauchy bound for the initial circle.
  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k] / c[n]));
  long double radius = std::min<long double>(1.0L + bound, 1e6L);
  for (int k = 0; k < n; ++k) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    roots.push_back(std::polar(radius * 0.5L + 0.1L, angle));
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0;
    for (int k = 0; k < n; ++k) {
      ComplexLD z = roots[k];
      ComplexLD pz = p.eval(z), dpz = dp.eval(z);
      if (std::abs(pz) == 0) continue;
      ComplexLD ratio = pz / dpz;
      ComplexLD sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z - roots[j]);
      ComplexLD step = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      roots[k] = z - step;
      max_step = std::max(max_step, std::abs(step) / std::max<long double>(1, std::abs(roots[k])));
    }
    if (max_step < 1e-17L) break;
  }
  for (auto& z : roots) {
    for (int iter = 0; iter < 5; ++iter) {
      ComplexLD d = dp.eval(z);
      if (std::abs(d) == 0) break;
      ComplexLD step = p.eval(z) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
    }
  }
  return roots;
}

}  // namespace detail

inline std::vector<NumericRoot> numeric_roots(const GPoly& p) {
  std::vector<NumericRoot> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    for (const auto& z : detail::aberth(factor)) out.push_back({z, mult});
  return out;
}

/// Snap an approximate root to a Gaussian rational with denominators at most
/// max_den, accepted only if it is an exact root of p.
inline std::optional<GaussianRational> snap_root(const GPoly& p, ComplexLD z, long max_den = 10000) {
  Rational re = best_rational_approximation(z.real(), max_den);
  Rational im = best_rational_approximation(z.imag(), max_den);
  GaussianRational cand(re, im);
  if (p.eval(cand).is_zero()) return cand;
  // Near-integers sometimes land on a neighbouring convergent; try rounding.
  GaussianRational rounded(best_rational_approximation(std::round(z.real() * 1e6L) / 1e6L, max_den),
                           best_rational_approximation(std::round(z.imag() * 1e6L) / 1e6L, max_den));
  if (p.eval(rounded).is_zero()) return rounded;
  return std::nullopt;
}

}  // namespace whfactor

#endif  // WHFACTOR_ROOT_LOCATION_HPP_
