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


#ifndef WHFACTOR_CORONA_HPP_
#define WHFACTOR_CORONA_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/ap_poly.hpp"
#include "whfactor/exact_linalg.hpp"
#include "whfactor/mobius.hpp"
#include "whfactor/scalar_wh.hpp"

namespace whfactor {

enum class Algebra { kHPlus, kHMinus, kMPlus, kMMinus, kAPPlus, kAPMinus };

inline const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::kHPlus: return "H+";
    case Algebra::kHMinus: return "H-";
    case Algebra::kMPlus: return "M+";
    case Algebra::kMMinus: return "M-";
    case Algebra::kAPPlus: return "AP+";
    case Algebra::kAPMinus: return "AP-";
  }
  return "?";
}

enum class CoronaVerdict { kCertificate, kFailure, kUnresolved };

inline const char* corona_verdict_name(CoronaVerdict v) {
  switch (v) {
    case CoronaVerdict::kCertificate: return "certificate";
    case CoronaVerdict::kFailure: return "failure";
    case CoronaVerdict::kUnresolved: return "unresolved";
  }
  return "?";
}

/// Where the tuple fails to be bounded away from zero.
struct CoronaWitness {
  enum class Kind { kNone, kPoint, kInfinity, kCommonFactor, kEmpty };
  Kind kind = Kind::kNone;
  std::optional<GaussianRational> point;  // exact common zero, when known
  ComplexLD approx{};                     // approximate common zero
  GPoly common_factor;                    // gcd of the numerators, rational case
  std::optional<Rational> ap_shift;       // common e_mu factor, AP case
  std::string description;
};

/// Canonical form s = s_minus * r^power * s_plus of an extracted invertible factor.
struct CanonicalFactor {
  RationalFunction minus_part;
  int power = 0;
  RationalFunction plus_part;
};

/// h = r * g with r invertible in L_inf and [g] a corona tuple of the H algebra.
struct MDecomposition {
  RationalFunction r;
  std::vector<RationalFunction> g;
  std::optional<CanonicalFactor> canonical;
};

template <class R>
struct CoronaResult {
  CoronaVerdict verdict = CoronaVerdict::kUnresolved;
  Algebra algebra = Algebra::kHPlus;
  std::vector<R> solution;  // sum solution[j] * h[j] = 1
  CoronaWitness witness;
  std::optional<MDecomposition> decomposition;
  // AP truncated-series certificates: sum g h = 1 + residual, ||residual||_W <= residual_bound.
  bool approximate = false;
  std::optional<R> residual;
  std::optional<Rational> residual_bound;
  int series_terms = 0;
  std::string note;
};

using RationalCorona = CoronaResult<RationalFunction>;
using APCorona = CoronaResult<APPoly>;

namespace detail {

// Iterated extended gcd: returns (g, a) with sum a_j p_j = g = gcd(p).
inline std::pair<GPoly, std::vector<GPoly>> multi_xgcd(const std::vector<GPoly>& p) {
  std::vector<GPoly> a(p.size(), GPoly());
  size_t first = 0;
  while (first < p.size() && p[first].is_zero()) ++first;
  if (first == p.size()) return {GPoly(), a};
  GaussianRational inv = p[first].lead().inverse();
  GPoly g = p[first] * inv;
  a[first] = GPoly(inv);
  for (size_t j = first + 1; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    if (g.degree() == 0) break;
    XgcdResult<GaussianRational> x = xgcd(g, p[j]);
    for (size_t k = 0; k < j; ++k) a[k] = a[k] * x.s;
    a[j] = x.t;
    g = x.g;
  }
  return {g, a};
}

// Common zero of the numerators in the closed half plane (with infinity).
inline CoronaWitness closed_half_plane_witness(const std::vector<RationalFunction>& h, bool plus, bool line_only) {
  CoronaWitness w;
  GPoly common;
  bool all_vanish_at_infinity = true;
  for (const auto& f : h) {
    common = gcd(common, f.num());
    if (f.degree() == 0) all_vanish_at_infinity = false;
  }
  w.common_factor = common;
  if (common.degree() > 0) {
    RootCounts counts = count_root_locations(common);
    int bad = counts.real + (line_only ? 0 : (plus ? counts.upper : counts.lower));
    if (bad > 0) {
      w.kind = CoronaWitness::Kind::kPoint;
      for (const auto& z : detail::aberth(common.monic())) {
        bool on_line = std::abs(z.imag()) < 1e-9L;
        bool in_half = plus ? z.imag() > 0 : z.imag() < 0;
        if (!(on_line || (!line_only && in_half))) continue;
        w.approx = z;
        if (auto exact = snap_root(common, z)) {
          HalfPlane side = classify_point(*exact);
          if (side == HalfPlane::kReal || (!line_only && side == (plus ? HalfPlane::kUpper : HalfPlane::kLower))) {
            w.point = exact;
            break;
          }
        }
      }
      w.description = w.point ? "all entries vanish at xi = " + w.point->to_string()
                              : "all entries share the factor " + common.to_string("xi");
      return w;
    }
  }
  if (all_vanish_at_infinity) {
    w.kind = CoronaWitness::Kind::kInfinity;
    w.description = "all entries vanish at infinity";
  }
  return w;
}

}  // namespace detail

/// Bezout solution in the rational part of H_inf^+ (plus) or H_inf^- (minus).
inline RationalCorona corona_solve_hplus(const std::vector<RationalFunction>& h, bool plus = true) {
  RationalCorona out;
  out.algebra = plus ? Algebra::kHPlus : Algebra::kHMinus;
  for (size_t j = 0; j < h.size(); ++j)
    if (!h[j].in_h(plus))
      fail(ErrorCode::kMembershipViolation,
           "entry " + std::to_string(j) + " is not in " + algebra_name(out.algebra));
  if (h.empty()) {
    out.verdict = CoronaVerdict::kFailure;
    out.witness.kind = CoronaWitness::Kind::kEmpty;
    out.witness.description = "empty tuple";
    return out;
  }
  CoronaWitness w = detail::closed_half_plane_witness(h, plus, false);
  if (w.kind != CoronaWitness::Kind::kNone) {
    out.verdict = CoronaVerdict::kFailure;
    out.witness = w;
    return out;
  }
  // Disk side: h_j = N_j / D_j in w, D_j without roots in the closed disk.
  std::vector<GPoly> nums, dens;
  for (const auto& f : h) {
    RationalFunction d = mobius_to_disk(f, plus);
    nums.push_back(d.num());
    dens.push_back(d.den());
  }
  auto [g, a] = detail::multi_xgcd(nums);
  // g has no roots in the closed disk, so 1/g is bounded there.
  for (size_t j = 0; j < h.size(); ++j) {
    RationalFunction coeff(a[j] * dens[j], g);
    out.solution.push_back(mobius_from_disk(coeff, plus));
  }
  RationalFunction total;
  for (size_t j = 0; j < h.size(); ++j) total += out.solution[j] * h[j];
  if (!(total == RationalFunction(1))) fail(ErrorCode::kCertificateInvalid, "Bezout identity failed on recheck");
  for (const auto& s : out.solution)
    if (!s.in_h(plus)) fail(ErrorCode::kCertificateInvalid, "solution left the algebra");
  out.verdict = CoronaVerdict::kCertificate;
  return out;
}

/// Bezout solution in the rational part of M_inf^+ / M_inf^-: bounded on the
/// line, extracted as h = r g with r invertible and g a corona tuple.
inline RationalCorona corona_solve_mplus(const std::vector<RationalFunction>& h, bool plus = true,
                                         bool canonicalize = true) {
  RationalCorona out;
  out.algebra = plus ? Algebra::kMPlus : Algebra::kMMinus;
  for (size_t j = 0; j < h.size(); ++j)
    if (!h[j].bounded_on_line())
      fail(ErrorCode::kMembershipViolation, "entry " + std::to_string(j) + " is not bounded on the line");
  if (h.empty()) {
    out.verdict = CoronaVerdict::kFailure;
    out.witness.kind = CoronaWitness::Kind::kEmpty;
    out.witness.description = "empty tuple";
    return out;
  }
  CoronaWitness w = detail::closed_half_plane_witness(h, plus, true);
  if (w.kind != CoronaWitness::Kind::kNone) {
    out.verdict = CoronaVerdict::kFailure;
    out.witness = w;
    return out;
  }
  std::vector<GPoly> nums, dens;
  for (const auto& f : h) {
    RationalFunction d = mobius_to_disk(f, plus);
    nums.push_back(d.num());
    dens.push_back(d.den());
  }
  GPoly d;
  GPoly q(1);
  for (size_t j = 0; j < h.size(); ++j) {
    d = gcd(d, nums[j]);
    q = exact_quotient(q * dens[j], gcd(q, dens[j])).monic();
  }
  MDecomposition dec;
  RationalFunction r_disk(d, q);
  dec.r = mobius_from_disk(r_disk, plus);
  std::vector<GPoly> g_poly;
  for (size_t j = 0; j < h.size(); ++j) {
    g_poly.push_back(exact_quotient(nums[j], d) * exact_quotient(q, dens[j]));
    dec.g.push_back(mobius_from_disk(RationalFunction(g_poly.back()), plus));
  }
  auto [gg, a] = detail::multi_xgcd(g_poly);
  if (gg.degree() != 0) fail(ErrorCode::kCertificateInvalid, "extracted tuple still has a common factor");
  for (size_t j = 0; j < h.size(); ++j) {
    RationalFunction coeff(a[j] * q, d);
    out.solution.push_back(mobius_from_disk(coeff, plus));
  }
  RationalFunction total;
  for (size_t j = 0; j < h.size(); ++j) {
    if (!(dec.r * dec.g[j] == h[j])) fail(ErrorCode::kCertificateInvalid, "h = r g fails on recheck");
    if (!dec.g[j].in_h(plus)) fail(ErrorCode::kCertificateInvalid, "extracted tuple left the algebra");
    total += out.solution[j] * h[j];
  }
  if (!(total == RationalFunction(1))) fail(ErrorCode::kCertificateInvalid, "Bezout identity failed on recheck");
  if (canonicalize) {
    try {
      ScalarWH s = wh_factor_scalar(dec.r);
      dec.canonical = CanonicalFactor{s.gamma_minus_rf(), s.k, s.gamma_plus_rf()};
    } catch (const Error&) {
      // Irrational zeros or poles: the canonical split is not available over Q(i).
    }
  }
  out.decomposition = std::move(dec);
  out.verdict = CoronaVerdict::kCertificate;
  return out;
}

/// Scalar Bezout solver for exact-linalg over rational functions.
inline BezoutSolver<RationalFunction> corona_bezout_solver(Algebra algebra) {
  return [algebra](const std::vector<RationalFunction>& h) {
    BezoutOutcome<RationalFunction> out;
    bool plus = algebra == Algebra::kHPlus || algebra == Algebra::kMPlus;
    bool h_level = algebra == Algebra::kHPlus || algebra == Algebra::kHMinus;
    RationalCorona c = h_level ? corona_solve_hplus(h, plus) : corona_solve_mplus(h, plus, false);
    if (c.verdict == CoronaVerdict::kCertificate) {
      out.status = BezoutStatus::kSolved;
      out.coefficients = c.solution;
    } else {
      out.status = c.verdict == CoronaVerdict::kFailure ? BezoutStatus::kNoSolution : BezoutStatus::kUnresolved;
      out.witness = c.witness.description;
    }
    return out;
  };
}

/// Bezout solver over Q(i)[x]: the minors must be coprime.
inline BezoutOutcome<GPoly> polynomial_bezout(const std::vector<GPoly>& h) {
  BezoutOutcome<GPoly> out;
  auto [g, a] = detail::multi_xgcd(h);
  if (g.degree() == 0) {
    out.status = BezoutStatus::kSolved;
    out.coefficients = a;
  } else {
    out.status = BezoutStatus::kNoSolution;
    out.witness = g.is_zero() ? "all entries vanish" : "common factor " + g.to_string();
  }
  return out;
}

/// |c_0| > sum of the other |c_lambda|, decided exactly with widening bounds.
inline bool strictly_dominant(const APPoly& p, const Rational& at) {
  GaussianRational c0 = p.coeff(at);
  if (c0.is_zero()) return false;
  for (unsigned bits : {64u, 256u, 1024u}) {
    Rational rest(0);
    for (const auto& [lambda, c] : p.terms())
      if (!(lambda == at)) rest += modulus_upper(c, bits);
    Rational lo = modulus_lower(c0, bits);
    if (lo > rest) return true;
    Rational rest_lo(0);
    for (const auto& [lambda, c] : p.terms())
      if (!(lambda == at)) rest_lo += modulus_lower(c, bits);
    if (modulus_upper(c0, bits) <= rest_lo) return false;
  }
  return false;
}

/// Bezout in AP+/AP- polynomials, dominant-coefficient fragment.
inline APCorona corona_solve_ap(const std::vector<APPoly>& h, bool plus = true, int series_terms = 16) {
  APCorona out;
  out.algebra = plus ? Algebra::kAPPlus : Algebra::kAPMinus;
  for (size_t j = 0; j < h.size(); ++j)
    if (!h[j].in_half(plus))
      fail(ErrorCode::kMembershipViolation, "entry " + std::to_string(j) + " has frequencies of the wrong sign");
  std::optional<Rational> shift;
  for (const auto& f : h) {
    if (f.is_zero()) continue;
    const Rational& edge = plus ? f.min_freq() : f.max_freq();
    if (!shift || (plus ? edge < *shift : edge > *shift)) shift = edge;
  }
  if (!shift) {
    out.verdict = CoronaVerdict::kFailure;
    out.witness.kind = CoronaWitness::Kind::kEmpty;
    out.witness.description = "all entries are zero";
    return out;
  }
  if (!shift->is_zero()) {
    out.verdict = CoronaVerdict::kFailure;
    out.witness.kind = CoronaWitness::Kind::kCommonFactor;
    out.witness.ap_shift = *shift;
    out.witness.description = "all entries share the non-invertible factor e_" + shift->to_string();
    return out;
  }
  // Exact inverse of a constant entry.
  for (size_t j = 0; j < h.size(); ++j) {
    if (!h[j].is_zero() && h[j].is_constant()) {
      out.solution.assign(h.size(), APPoly());
      out.solution[j] = APPoly(h[j].coeff(Rational(0)).inverse());
      out.verdict = CoronaVerdict::kCertificate;
      return out;
    }
  }
  // Dominant constant term: pick the entry with the smallest ratio bound.
  std::optional<size_t> best;
  Rational best_rho;
  for (size_t j = 0; j < h.size(); ++j) {
    if (!strictly_dominant(h[j], Rational(0))) continue;
    GaussianRational c0 = h[j].coeff(Rational(0));
    APPoly u = h[j] * APPoly(c0.inverse()) - APPoly(1);
    Rational rho = wiener_norm_upper(u);
    if (rho >= Rational(1)) continue;
    if (!best || rho < best_rho) {
      best = j;
      best_rho = rho;
    }
  }
  if (!best) {
    out.verdict = CoronaVerdict::kUnresolved;
    out.note = "no entry has a strictly dominant constant term; the dominant-coefficient fragment does not decide this tuple";
    return out;
  }
  const size_t j = *best;
  GaussianRational c0_inv = h[j].coeff(Rational(0)).inverse();
  APPoly u = h[j] * APPoly(c0_inv) - APPoly(1);
  APPoly minus_u = -u;
  APPoly sum(0), power(1);
  for (int k = 0; k < series_terms; ++k) {
    sum += power;
    power *= minus_u;
  }
  out.solution.assign(h.size(), APPoly());
  out.solution[j] = sum * APPoly(c0_inv);
  // g h = (1 - (-u)^K) exactly.
  APPoly total;
  for (size_t k = 0; k < h.size(); ++k) total += out.solution[k] * h[k];
  out.residual = total - APPoly(1);
  if (!(*out.residual == -power)) fail(ErrorCode::kCertificateInvalid, "series residual mismatch");
  out.residual_bound = pow(best_rho, series_terms);
  out.approximate = true;
  out.series_terms = series_terms;
  out.verdict = CoronaVerdict::kCertificate;
  out.note = "inverse is an infinite series; truncated with an exact residual";
  return out;
}

}  // namespace whfactor

#endif  // WHFACTOR_CORONA_HPP_
