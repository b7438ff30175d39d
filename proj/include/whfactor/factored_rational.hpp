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

#ifndef WHFACTOR_FACTORED_RATIONAL_HPP_
#define WHFACTOR_FACTORED_RATIONAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/rational_function.hpp"

namespace whfactor {

/// One linear factor (xi - root)^mult. Roots that could not be snapped to a
/// Gaussian rational keep only their approximate value.
struct FactoredRoot {
  std::optional<GaussianRational> exact;
  ComplexLD approx;
  int mult = 0;
  HalfPlane side = HalfPlane::kReal;

  static FactoredRoot from_exact(const GaussianRational& z, int mult) {
    return {z, z.to_complex(), mult, classify_point(z)};
  }
  bool is_exact() const { return exact.has_value(); }
};

class FactoredRational {
 public:
  FactoredRational() : lead_(1) {}
  explicit FactoredRational(GaussianRational lead) : lead_(std::move(lead)) {
    if (lead_.is_zero()) fail(ErrorCode::kZeroInput, "factored rational with zero leading constant");
  }

  /// Builds from exact (root, multiplicity) pairs; equal roots are merged and
  /// zero multiplicities dropped.
  static FactoredRational exact(GaussianRational lead, const std::vector<std::pair<GaussianRational, int>>& factors) {
    FactoredRational f(std::move(lead));
    for (const auto& [z, m] : factors) f.multiply_root(z, m);
    return f;
  }

  const GaussianRational& lead() const { return lead_; }
  const std::vector<FactoredRoot>& factors() const { return factors_; }
  std::vector<FactoredRoot>& mutable_factors() { return factors_; }
  void set_lead(GaussianRational lead) { lead_ = std::move(lead); }

  bool all_exact() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const FactoredRoot& r) { return r.is_exact(); });
  }
  bool degree_balanced() const {
    int total = 0;
    for (const auto& r : factors_) total += r.mult;
    return total == 0;
  }
  bool has_real_root() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const FactoredRoot& r) { return r.side == HalfPlane::kReal; });
  }

  void multiply_root(const GaussianRational& z, int mult) {
    if (mult == 0) return;
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      if (it->exact && *it->exact == z) {
        it->mult += mult;
        if (it->mult == 0) factors_.erase(it);
        return;
      }
    }
    factors_.push_back(FactoredRoot::from_exact(z, mult));
  }

  void append(const FactoredRoot& root) {
    if (root.exact) {
      multiply_root(*root.exact, root.mult);
    } else if (root.mult != 0) {
      factors_.push_back(root);
    }
  }

  friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational out(a.lead_ * b.lead_);
    out.factors_ = a.factors_;
    for (const auto& r : b.factors_) out.append(r);
    return out;
  }

  FactoredRational inverse() const {
    FactoredRational out(lead_.inverse());
    out.factors_ = factors_;
    for (auto& r : out.factors_) r.mult = -r.mult;
    return out;
  }

  /// Factors whose roots lie in the given half plane, with lead 1.
  FactoredRational restricted_to(HalfPlane side) const {
    FactoredRational out;
    for (const auto& r : factors_)
      if (r.side == side) out.factors_.push_back(r);
    return out;
  }

  std::complex<long double> eval(ComplexLD x) const {
    ComplexLD v = lead_.to_complex();
    for (const auto& r : factors_) v *= std::pow(x - r.approx, static_cast<long double>(r.mult));
    return v;
  }

  std::string to_string(const std::string& var = "xi") const {
    std::string s = lead_ == GaussianRational(1) && !factors_.empty() ? "" : lead_.to_string();
    for (const auto& r : factors_) {
      std::string lin = r.exact ? GPoly::linear(*r.exact).to_string(var) : var + " - (" + approx_string(r.approx) + ")";
      s += (s.empty() ? "(" : "*(") + lin + ")";
      if (r.mult != 1) s += "^" + std::to_string(r.mult);
    }
    return s;
  }

 private:
  static std::string approx_string(ComplexLD z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "~%.17Lg%+.17Lgi", z.real(), z.imag());
    return buf;
  }

  GaussianRational lead_;
  std::vector<FactoredRoot> factors_;
};

/// Multiplies out the linear factors; negative multiplicities go to the
/// denominator. Requires every root to be exact.
inline RationalFunction expand(const FactoredRational& f) {
  GPoly num(f.lead()), den(GaussianRational(1));
  for (const auto& r : f.factors()) {
    if (!r.exact) fail(ErrorCode::kInexactRoots, "cannot expand a factor with an approximate root");
    GPoly lin = GPoly::linear(*r.exact);
    if (r.mult > 0) {
      num *= pow(lin, r.mult);
    } else {
      den *= pow(lin, -r.mult);
    }
  }
  return {num, den};
}

namespace detail {

// Roots of a square-free polynomial with multiplicity mult, classified
// against the exact half-plane counts of s.
inline void factor_squarefree(const GPoly& s, int mult, long double tol, std::vector<FactoredRoot>& out) {
  GPoly rest = s;
  for (const auto& z : aberth(s)) {
    if (auto exact = snap_root(rest, z)) {
      rest = exact_quotient(rest, GPoly::linear(*exact));
      out.push_back(FactoredRoot::from_exact(*exact, mult));
    }
  }
  if (rest.degree() <= 0) return;
  RootCounts counts = count_root_locations(rest);
  std::vector<ComplexLD> approx = aberth(rest);
  RootCounts seen;
  std::vector<FactoredRoot> pending;
  for (const auto& z : approx) {
    FactoredRoot r{std::nullopt, z, mult, HalfPlane::kReal};
    if (std::abs(z.imag()) < tol) {
      ++seen.real;
    } else if (z.imag() > 0) {
      r.side = HalfPlane::kUpper;
      ++seen.upper;
    } else {
      r.side = HalfPlane::kLower;
      ++seen.lower;
    }
    pending.push_back(r);
  }
  if (!(seen == counts))
    fail(ErrorCode::kRootClassificationAmbiguous,
         "a root lies within tolerance of the real line but is not exactly real");
  out.insert(out.end(), pending.begin(), pending.end());
}

}  // namespace detail

/// Locates zeros and poles numerically, snapping to Gaussian rationals when an
/// exact root is found nearby. Half-plane tags are checked against exact
/// root counts.
inline FactoredRational factor_numeric(const RationalFunction& f, long double tol = 1e-9L) {
  if (f.is_zero()) fail(ErrorCode::kZeroInput, "cannot factor the zero function");
  FactoredRational out(f.num().lead());
  std::vector<FactoredRoot> roots;
  for (const auto& [s, m] : squarefree_decomposition(f.num().monic())) detail::factor_squarefree(s, m, tol, roots);
  for (const auto& [s, m] : squarefree_decomposition(f.den())) detail::factor_squarefree(s, -m, tol, roots);
  for (const auto& r : roots) out.append(r);
  return out;
}

/// Splits p = c * upper * lower with upper, lower monic, all roots of upper in
/// open C+ and of lower in open C-. Roots are found numerically; the factors
/// are snapped to Gaussian-rational coefficients and accepted only if they
/// divide p exactly. Real roots raise RealPole.
struct HalfPlaneSplit {
  GPoly upper;
  GPoly lower;
};

inline std::optional<GPoly> snap_polynomial(const std::vector<ComplexLD>& roots, long max_den = 1000000) {
  std::vector<ComplexLD> c{1.0L};
  for (const auto& z : roots) {
    std::vector<ComplexLD> next(c.size() + 1, 0.0L);
    for (size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= z * c[k];
    }
    c = std::move(next);
  }
  std::vector<GaussianRational> coeffs;
  for (const auto& v : c)
    coeffs.emplace_back(best_rational_approximation(v.real(), max_den), best_rational_approximation(v.imag(), max_den));
  GPoly out(coeffs);
  if (out.degree() != static_cast<int>(roots.size())) return std::nullopt;
  return out;
}

inline HalfPlaneSplit half_plane_split(const GPoly& p) {
  HalfPlaneSplit out{GPoly(1), GPoly(1)};
  if (p.degree() <= 0) return out;
  RootCounts counts = count_root_locations(p);
  if (counts.real > 0) fail(ErrorCode::kRealPole, "polynomial has a real root");
  if (counts.upper == 0) {
    out.lower = p.monic();
    return out;
  }
  if (counts.lower == 0) {
    out.upper = p.monic();
    return out;
  }
  // Work square-free factor by square-free factor; exact roots are peeled off first.
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    GPoly rest = s, up(1), down(1);
    for (const auto& z : detail::aberth(s)) {
      if (auto exact = snap_root(rest, z)) {
        rest = exact_quotient(rest, GPoly::linear(*exact));
        (exact->im().sign() > 0 ? up : down) *= GPoly::linear(*exact);
      }
    }
    if (rest.degree() > 0) {
      RootCounts rc = count_root_locations(rest);
      if (rc.upper == 0) {
        down *= rest.monic();
      } else if (rc.lower == 0) {
        up *= rest.monic();
      } else {
        std::vector<ComplexLD> upper_roots;
        for (const auto& z : detail::aberth(rest))
          if (z.imag() > 0) upper_roots.push_back(z);
        std::optional<GPoly> cand;
        if (static_cast<int>(upper_roots.size()) == rc.upper) cand = snap_polynomial(upper_roots);
        if (!cand || !divides(*cand, rest) || !all_roots_in(*cand, HalfPlane::kUpper))
          fail(ErrorCode::kInexactRoots, "cannot split the polynomial over Q(i) by half plane");
        up *= *cand;
        down *= exact_quotient(rest, *cand).monic();
      }
    }
    out.upper *= pow(up, mult);
    out.lower *= pow(down, mult);
  }
  return out;
}

}  // namespace whfactor

#endif  // WHFACTOR_FACTORED_RATIONAL_HPP_
