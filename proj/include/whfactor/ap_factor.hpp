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


#ifndef WHFACTOR_AP_FACTOR_HPP_
#define WHFACTOR_AP_FACTOR_HPP_

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/corona.hpp"
#include "whfactor/exact_linalg.hpp"
#include "whfactor/fredholm_report.hpp"
#include "whfactor/matrix_wh.hpp"

namespace whfactor {

/// Keeps frequencies >= 0 (plus) or < 0 (minus).
inline APPoly ap_project(const APPoly& p, bool plus) {
  APPoly out;
  for (const auto& [lambda, c] : p.terms())
    if ((lambda.sign() >= 0) == plus) out.add_term(lambda, c);
  return out;
}

enum class MeanMotionMethod { kMonomial, kDominantCoefficient, kNumericEstimate, kUnresolved };

inline const char* mean_motion_method_name(MeanMotionMethod m) {
  switch (m) {
    case MeanMotionMethod::kMonomial: return "monomial";
    case MeanMotionMethod::kDominantCoefficient: return "dominant-coefficient";
    case MeanMotionMethod::kNumericEstimate: return "numeric-estimate";
    case MeanMotionMethod::kUnresolved: return "unresolved";
  }
  return "?";
}

struct MeanMotionResult {
  std::optional<Rational> kappa;
  MeanMotionMethod method = MeanMotionMethod::kUnresolved;
  std::string warning;
};

namespace detail {

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}
inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Average argument growth of p over [-t, t] and the smallest sampled modulus.
inline std::pair<long double, long double> argument_rate(const APPoly& p, long double t) {
  long double max_freq = 0;
  for (const auto& [lambda, c] : p.terms()) max_freq = std::max(max_freq, std::abs(lambda.to_long_double()));
  long double h = 0.05L / std::max<long double>(max_freq, 1e-3L);
  long steps = static_cast<long>(std::ceil(2 * t / h));
  h = 2 * t / steps;
  std::complex<long double> prev = p.eval(-t);
  long double smallest = std::abs(prev);
  long double total = 0;
  for (long k = 1; k <= steps; ++k) {
    std::complex<long double> v = p.eval(-t + k * h);
    smallest = std::min(smallest, std::abs(v));
    if (smallest == 0) break;
    total += std::arg(v / prev);
    prev = v;
  }
  return {total / (2 * t), smallest};
}

}  // namespace detail

/// kappa such that e_{-kappa} p has a continuous logarithm.
inline MeanMotionResult mean_motion(const APPoly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroInput, "mean motion of the zero function");
  MeanMotionResult out;
  if (p.is_monomial()) {
    out.kappa = p.min_freq();
    out.method = MeanMotionMethod::kMonomial;
    return out;
  }
  for (const auto& [lambda, c] : p.terms()) {
    if (strictly_dominant(p, lambda)) {
      out.kappa = lambda;
      out.method = MeanMotionMethod::kDominantCoefficient;
      return out;
    }
  }
  // The mean motion lies in min_freq + step * Z, step generating the differences.
  mpz_class den(1), num(0);
  for (const auto& [lambda, c] : p.terms()) den = detail::lcm_z(den, lambda.den());
  const Rational base = p.min_freq();
  for (const auto& [lambda, c] : p.terms()) num = detail::gcd_z(num, ((lambda - base) * Rational(den)).num());
  Rational step(num, den);
  long double norm = wiener_norm_upper(p).to_long_double();
  auto [r1, min1] = detail::argument_rate(p, 500.0L);
  auto [r2, min2] = detail::argument_rate(p, 2000.0L);
  if (std::min(min1, min2) < 1e-2L * norm) {
    out.warning = "function nearly vanishes on the real line and may not be invertible";
    return out;
  }
  auto snap = [&](long double r) {
    long double k = std::round((r - base.to_long_double()) / step.to_long_double());
    return base + step * Rational(static_cast<long>(k));
  };
  Rational k1 = snap(r1), k2 = snap(r2);
  long double err = std::abs(r2 - k2.to_long_double());
  if (k1 == k2 && err < 0.05L * step.to_long_double() && k2 >= p.min_freq() && k2 <= p.max_freq()) {
    out.kappa = k2;
    out.method = MeanMotionMethod::kNumericEstimate;
  } else {
    out.warning = "numeric estimate of the mean motion is not stable";
  }
  return out;
}

/// det G = gamma_minus * e_kappa * gamma_plus with constant gammas.
struct APScalarFactorization {
  GaussianRational gamma_minus{1};
  Rational kappa{0};
  GaussianRational gamma_plus{1};
};

/// G = g_minus * diag(e_mu_j) * g_plus.
struct APFactorization {
  APMatrix g_minus;
  std::vector<Rational> partial_ap_indices;
  APMatrix g_plus;
};

/// Result of an AP construction: either a factorization or the frequencies
/// that block the triangular split.
struct APFactorOutcome {
  std::optional<APFactorization> factorization;
  std::vector<Rational> offending;
  std::vector<APPoly> split_minus;  // x_- (row) or alpha_- (rh)
  std::vector<APPoly> split_plus;   // x_+ (row) or alpha_+ (rh)
  std::string route;
  bool split_available() const { return factorization.has_value(); }
};

inline bool all_in_half(const APMatrix& m, bool plus) {
  for (const auto& v : m.entries())
    if (!v.in_half(plus)) return false;
  return true;
}

inline APMatrix ap_d_matrix(const std::vector<Rational>& mu) {
  std::vector<APPoly> d;
  for (const auto& m : mu) d.push_back(APPoly::e(m));
  return APMatrix::diagonal(d);
}

namespace detail {

inline APScalarFactorization scalar_for(const APPoly& det, const std::optional<APScalarFactorization>& given) {
  if (given) {
    if (!(APPoly(given->gamma_minus) * APPoly::e(given->kappa) * APPoly(given->gamma_plus) == det))
      fail(ErrorCode::kHypothesisViolation, "supplied factorization does not reproduce det G");
    return *given;
  }
  if (!det.is_monomial())
    fail(ErrorCode::kHypothesisViolation, "det G is not a monomial c e_kappa; supply its factorization");
  return {det.terms().begin()->second, det.terms().begin()->first, GaussianRational(1)};
}

inline void check_factorization(const APMatrix& g, const APFactorization& f) {
  if (!(f.g_minus * ap_d_matrix(f.partial_ap_indices) * f.g_plus == g))
    fail(ErrorCode::kCertificateInvalid, "AP factorization does not reproduce G");
  if (!all_in_half(f.g_plus, true) || !all_in_half(f.g_minus, false))
    fail(ErrorCode::kCertificateInvalid, "AP factor has frequencies of the wrong sign");
  APPoly dp = det_cofactor(f.g_plus), dm = det_cofactor(f.g_minus);
  if (dp.is_zero() || !dp.is_constant() || dm.is_zero() || !dm.is_constant())
    fail(ErrorCode::kCertificateInvalid, "AP factor determinant is not a nonzero constant");
}

inline std::vector<Rational> last_ap_indices(size_t n, const Rational& kappa) {
  std::vector<Rational> v(n, Rational(0));
  v[n - 1] = kappa;
  return v;
}

inline APMatrix permutation_ap(size_t n, size_t moved) {
  APMatrix p(n, n);
  size_t out = 0;
  for (size_t i = 0; i < n; ++i)
    if (i != moved) p(out++, i) = APPoly(1);
  p(n - 1, moved) = APPoly(1);
  return p;
}

}  // namespace detail

/// Row route over almost periodic polynomials: x = q / gamma_minus is split
/// as x_- + e_kappa x_+, which needs no frequencies strictly between 0 and kappa.
inline APFactorOutcome ap_factor_via_row(const APMatrix& g, size_t omitted_row, const APMatrix& phi_plus,
                                         const std::optional<APScalarFactorization>& det_factorization = {}) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  if (omitted_row >= n) fail(ErrorCode::kShapeMismatch, "omitted row out of range");
  APMatrix perm = detail::permutation_ap(n, omitted_row);
  APMatrix gp = perm * g;
  APMatrix psi = gp.without_row(n - 1);
  if (phi_plus.rows() != n || phi_plus.cols() != n - 1)
    fail(ErrorCode::kShapeMismatch, "right inverse must be n x (n-1)");
  if (!all_in_half(psi, true) || !all_in_half(phi_plus, true))
    fail(ErrorCode::kHypothesisViolation, "retained rows or their right inverse are not in AP+");
  if (!(psi * phi_plus).is_identity())
    fail(ErrorCode::kHypothesisViolation, "supplied matrix is not a right inverse of the retained rows");
  APPoly det = det_cofactor(g);
  APScalarFactorization s = detail::scalar_for(det, det_factorization);
  if ((n - 1 - omitted_row) % 2 == 1) s.gamma_minus = -s.gamma_minus;
  Completion<APPoly> c = complete(phi_plus, psi);
  APMatrix q = gp.row(n - 1) * phi_plus;
  APPoly gm_inv(s.gamma_minus.inverse());
  APFactorOutcome out;
  out.route = "row";
  for (size_t j = 0; j + 1 < n; ++j) {
    APPoly x = q(0, j) * gm_inv;
    APPoly lo, hi;
    for (const auto& [lambda, coef] : x.terms()) {
      if (lambda.sign() <= 0) {
        lo.add_term(lambda, coef);
      } else if (lambda >= s.kappa) {
        hi.add_term(lambda - s.kappa, coef);
      } else {
        out.offending.push_back(lambda);
      }
    }
    out.split_minus.push_back(lo);
    out.split_plus.push_back(hi);
  }
  if (!out.offending.empty()) return out;
  APFactorization f;
  f.g_minus = APMatrix::identity(n);
  APMatrix upper = APMatrix::identity(n);
  f.g_minus(n - 1, n - 1) = APPoly(s.gamma_minus);
  GaussianRational sign = (n - 1) % 2 == 0 ? GaussianRational(1) : GaussianRational(-1);
  upper(n - 1, n - 1) = APPoly(sign * s.gamma_plus);
  for (size_t j = 0; j + 1 < n; ++j) {
    f.g_minus(n - 1, j) = APPoly(s.gamma_minus) * out.split_minus[j];
    upper(n - 1, j) = out.split_plus[j];
  }
  f.g_minus = perm.transpose() * f.g_minus;
  f.g_plus = upper * c.psi_e;
  f.partial_ap_indices = detail::last_ap_indices(n, s.kappa);
  detail::check_factorization(g, f);
  out.factorization = std::move(f);
  return out;
}

/// Solution-pair route: Q / gamma_plus = alpha_+ + e_kappa alpha_-. For
/// kappa >= 0 the split always exists; for kappa < 0 frequencies strictly
/// between kappa and 0 block it.
inline APFactorOutcome ap_factor_via_rh(const APMatrix& g, const APMatrix& phi_plus, const APMatrix& phi_minus,
                                        const APMatrix& psi_plus, const APMatrix& psi_minus,
                                        const std::optional<APScalarFactorization>& det_factorization = {}) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  for (const APMatrix* m : {&phi_plus, &phi_minus})
    if (m->rows() != n || m->cols() != n - 1) fail(ErrorCode::kShapeMismatch, "solutions must be n x (n-1)");
  for (const APMatrix* m : {&psi_plus, &psi_minus})
    if (m->rows() != n - 1 || m->cols() != n) fail(ErrorCode::kShapeMismatch, "left inverses must be (n-1) x n");
  if (!(g * phi_plus == phi_minus)) fail(ErrorCode::kRhResidual, "G * phi_plus differs from phi_minus");
  if (!all_in_half(phi_plus, true) || !all_in_half(psi_plus, true))
    fail(ErrorCode::kHypothesisViolation, "plus-side data is not in AP+");
  if (!all_in_half(phi_minus, false) || !all_in_half(psi_minus, false))
    fail(ErrorCode::kHypothesisViolation, "minus-side data is not in AP-");
  if (!(psi_plus * phi_plus).is_identity() || !(psi_minus * phi_minus).is_identity())
    fail(ErrorCode::kHypothesisViolation, "supplied left inverses do not invert the solutions");
  APPoly det = det_cofactor(g);
  APScalarFactorization s = detail::scalar_for(det, det_factorization);
  Completion<APPoly> cp = complete(phi_plus, psi_plus);
  Completion<APPoly> cm = complete(phi_minus, psi_minus);
  APMatrix big_q = psi_minus * g * cp.phi_e.col(n - 1);
  APPoly gp_inv(s.gamma_plus.inverse());
  APFactorOutcome out;
  out.route = "rh";
  for (size_t j = 0; j + 1 < n; ++j) {
    APPoly x = big_q(j, 0) * gp_inv;
    APPoly plus, minus;
    for (const auto& [lambda, coef] : x.terms()) {
      if (lambda.sign() >= 0) {
        plus.add_term(lambda, coef);
      } else if (lambda <= s.kappa) {
        minus.add_term(lambda - s.kappa, coef);
      } else {
        out.offending.push_back(lambda);
      }
    }
    out.split_minus.push_back(minus);
    out.split_plus.push_back(plus);
  }
  if (!out.offending.empty()) return out;
  APMatrix left = APMatrix::identity(n), right = APMatrix::identity(n);
  left(n - 1, n - 1) = APPoly(s.gamma_minus);
  std::vector<APPoly> gamma_diag(n, APPoly(1));
  gamma_diag[n - 1] = APPoly(s.gamma_plus);
  for (size_t j = 0; j + 1 < n; ++j) {
    left(j, n - 1) = out.split_minus[j];
    right(j, n - 1) = out.split_plus[j];
  }
  APFactorization f;
  f.g_minus = cm.phi_e * left;
  f.g_plus = right * APMatrix::diagonal(gamma_diag) * cp.psi_e;
  f.partial_ap_indices = detail::last_ap_indices(n, s.kappa);
  detail::check_factorization(g, f);
  out.factorization = std::move(f);
  return out;
}

/// Non-throwing counterpart of the checks made on every constructed factorization.
inline VerificationReport verify_ap_factorization(const APMatrix& g, const APFactorization& f) {
  VerificationReport rep;
  const size_t n = g.rows();
  bool shapes = g.is_square() && f.g_minus.rows() == n && f.g_minus.cols() == n && f.g_plus.rows() == n &&
                f.g_plus.cols() == n && f.partial_ap_indices.size() == n;
  rep.checks.push_back({"shapes", shapes, shapes ? "" : "factor shapes do not match the symbol"});
  if (!shapes) return rep;
  bool product = f.g_minus * ap_d_matrix(f.partial_ap_indices) * f.g_plus == g;
  rep.checks.push_back({"product", product, product ? "exact-zero residual" : "G- D G+ differs from G"});
  bool plus = all_in_half(f.g_plus, true), minus = all_in_half(f.g_minus, false);
  rep.checks.push_back({"g_plus_frequencies", plus, plus ? "" : "negative frequency in G+"});
  rep.checks.push_back({"g_minus_frequencies", minus, minus ? "" : "positive frequency in G-"});
  APPoly dp = det_cofactor(f.g_plus), dm = det_cofactor(f.g_minus);
  bool dp_ok = !dp.is_zero() && dp.is_constant(), dm_ok = !dm.is_zero() && dm.is_constant();
  rep.checks.push_back({"g_plus_det_constant", dp_ok, dp_ok ? "" : "det G+ is not a nonzero constant"});
  rep.checks.push_back({"g_minus_det_constant", dm_ok, dm_ok ? "" : "det G- is not a nonzero constant"});
  return rep;
}

inline APMatrix conj_transpose(const APMatrix& m) {
  return m.transpose().map([](const APPoly& p) { return p.conj_on_line(); });
}

enum class SpecialMode { kUnitary, kOrthogonal };

/// Invertibility of T_G for unitary or orthogonal G with constant determinant,
/// through the corona check on the last row.
inline FredholmReport ap_special(const APMatrix& g, SpecialMode mode) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 1) fail(ErrorCode::kShapeMismatch, "symbol must be square");
  bool unitary = mode == SpecialMode::kUnitary;
  APMatrix other = unitary ? conj_transpose(g) : g.transpose();
  if (!(g * other).is_identity())
    fail(unitary ? ErrorCode::kNotUnitary : ErrorCode::kNotOrthogonal,
         unitary ? "G G* is not the identity" : "G G^T is not the identity");
  APPoly det = det_cofactor(g);
  if (!det.is_constant() || det.is_zero()) fail(ErrorCode::kHypothesisViolation, "det G is not constant");
  FredholmReport rep;
  rep.basis = unitary ? "unitary with constant determinant, last-row corona check"
                      : "orthogonal with constant determinant, last-row corona check";
  rep.det_symbol = det.to_string();
  APMatrix psi = g.without_row(n - 1);
  bool psi_plus = all_in_half(psi, true);
  rep.hypotheses.push_back({"retained_rows_in_ap_plus", psi_plus, ""});
  if (!psi_plus) fail(ErrorCode::kHypothesisViolation, "retained rows are not in AP+");
  std::vector<APPoly> last;
  for (size_t j = 0; j < n; ++j) last.push_back(g(n - 1, j));
  bool plus = !unitary;
  for (const auto& v : last)
    if (!v.in_half(plus)) fail(ErrorCode::kHypothesisViolation, "last row has frequencies of the wrong sign");
  APCorona c = corona_solve_ap(last, plus);
  rep.hypotheses.push_back({"last_row_corona", c.verdict == CoronaVerdict::kCertificate,
                            std::string(corona_verdict_name(c.verdict)) +
                                (c.note.empty() ? "" : ": " + c.note) + c.witness.description});
  if (c.verdict == CoronaVerdict::kCertificate) {
    rep.fredholm = Tristate::kYes;
    rep.invertible = Tristate::kYes;
    rep.dim_ker = 0;
    rep.dim_coker = 0;
    rep.index = 0;
    rep.coburn = Coburn::kBoth;
    if (c.approximate) rep.note = "corona certificate uses a truncated series with an exact residual bound";
  } else {
    rep.note = c.verdict == CoronaVerdict::kUnresolved
                   ? "last-row corona check unresolved by the dominant-coefficient fragment; no claim made"
                   : "last row is not a corona tuple; no claim made";
    rep.witness = c.witness.description;
  }
  return rep;
}

}  // namespace whfactor

#endif  // WHFACTOR_AP_FACTOR_HPP_
