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


#ifndef WHFACTOR_MATRIX_WH_HPP_
#define WHFACTOR_MATRIX_WH_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/exact_linalg.hpp"
#include "whfactor/scalar_wh.hpp"

namespace whfactor {

struct TraceEntry {
  std::string key;
  std::string value;
};

struct ConstructionTrace {
  std::string route;
  std::vector<TraceEntry> entries;
  std::vector<std::string> corrections;

  void add(std::string key, std::string value) { entries.push_back({std::move(key), std::move(value)}); }
};

/// G = g_minus * diag(r^k_j) * g_plus.
struct WHFactorization {
  RFMatrix g_minus;
  std::vector<int> partial_indices;
  RFMatrix g_plus;
  bool bounded = true;
  ConstructionTrace trace;
};

inline RFMatrix d_matrix(const std::vector<int>& indices) {
  std::vector<RationalFunction> d;
  for (int k : indices) d.push_back(pow(RationalFunction::r(), k));
  return RFMatrix::diagonal(d);
}

inline bool all_in_h(const RFMatrix& m, bool plus) {
  for (const auto& v : m.entries())
    if (!v.in_h(plus)) return false;
  return true;
}

/// Permutation matrix P with (P G) having row `moved` last, the other rows in order.
inline RFMatrix move_to_last_permutation(size_t n, size_t moved) {
  RFMatrix p(n, n);
  size_t out = 0;
  for (size_t i = 0; i < n; ++i)
    if (i != moved) p(out++, i) = RationalFunction(1);
  p(n - 1, moved) = RationalFunction(1);
  return p;
}

inline int move_to_last_sign(size_t n, size_t moved) { return (n - 1 - moved) % 2 == 0 ? 1 : -1; }

namespace detail {

inline void check_scalar(const ScalarWH& s, const RationalFunction& det) {
  if (!(s.gamma_minus_rf() * pow(RationalFunction::r(), s.k) * s.gamma_plus_rf() == det))
    fail(ErrorCode::kHypothesisViolation, "scalar factorization does not reproduce det G");
}

inline ScalarWH scaled(ScalarWH s, int sign) {
  if (sign < 0) s.gamma_minus.set_lead(-s.gamma_minus.lead());
  return s;
}

inline std::vector<int> last_index_list(size_t n, int k) {
  std::vector<int> v(n, 0);
  v[n - 1] = k;
  return v;
}

// Row route for the last row.
inline WHFactorization factor_last_row(const RFMatrix& g, const RFMatrix& phi_plus, const ScalarWH& scalar) {
  const size_t n = g.rows();
  RFMatrix psi = g.without_row(n - 1);
  if (phi_plus.rows() != n || phi_plus.cols() != n - 1)
    fail(ErrorCode::kShapeMismatch, "right inverse must be n x (n-1)");
  if (!all_in_h(psi, true)) fail(ErrorCode::kHypothesisViolation, "the retained rows are not in H+");
  if (!all_in_h(phi_plus, true)) fail(ErrorCode::kHypothesisViolation, "the right inverse is not in H+");
  if (!(psi * phi_plus).is_identity())
    fail(ErrorCode::kHypothesisViolation, "supplied matrix is not a right inverse of the retained rows");
  if (scalar.k > 0) fail(ErrorCode::kHypothesisViolation, "row route needs a nonpositive index of det G");
  RationalFunction det = determinant(g);
  check_scalar(scalar, det);
  Completion<RationalFunction> c = complete(phi_plus, psi);
  RFMatrix q = g.row(n - 1) * phi_plus;
  RationalFunction gm = scalar.gamma_minus_rf(), gp = scalar.gamma_plus_rf();
  RationalFunction sign = (n - 1) % 2 == 0 ? RationalFunction(1) : RationalFunction(-1);
  RationalFunction r_minus_k = pow(RationalFunction::r(), -scalar.k);
  WHFactorization f;
  f.g_minus = RFMatrix::identity(n);
  RFMatrix upper = RFMatrix::identity(n);
  f.g_minus(n - 1, n - 1) = gm;
  upper(n - 1, n - 1) = sign * gp;
  for (size_t j = 0; j + 1 < n; ++j) {
    ProjectionResult p = riesz_project(q(0, j) / gm);
    f.g_minus(n - 1, j) = gm * p.minus_part;
    upper(n - 1, j) = p.plus_part * r_minus_k;
  }
  f.g_plus = upper * c.psi_e;
  f.partial_indices = last_index_list(n, scalar.k);
  f.trace.route = "row";
  f.trace.add("psi_e", c.psi_e.to_string());
  f.trace.add("phi_e", c.phi_e.to_string());
  f.trace.add("q", q.to_string());
  return f;
}

// Column route for the last column.
inline WHFactorization factor_last_col(const RFMatrix& g, const RFMatrix& psi_minus, const ScalarWH& scalar) {
  const size_t n = g.rows();
  RFMatrix phi = g.without_col(n - 1);
  if (psi_minus.rows() != n - 1 || psi_minus.cols() != n)
    fail(ErrorCode::kShapeMismatch, "left inverse must be (n-1) x n");
  if (!all_in_h(phi, false)) fail(ErrorCode::kHypothesisViolation, "the retained columns are not in H-");
  if (!all_in_h(psi_minus, false)) fail(ErrorCode::kHypothesisViolation, "the left inverse is not in H-");
  if (!(psi_minus * phi).is_identity())
    fail(ErrorCode::kHypothesisViolation, "supplied matrix is not a left inverse of the retained columns");
  if (scalar.k < 0) fail(ErrorCode::kHypothesisViolation, "column route needs a nonnegative index of det G");
  RationalFunction det = determinant(g);
  check_scalar(scalar, det);
  Completion<RationalFunction> c = complete(phi, psi_minus);
  RFMatrix v = psi_minus * g.col(n - 1);
  RationalFunction gm = scalar.gamma_minus_rf(), gp = scalar.gamma_plus_rf();
  RationalFunction sign = (n - 1) % 2 == 0 ? RationalFunction(1) : RationalFunction(-1);
  RationalFunction r_minus_k = pow(RationalFunction::r(), -scalar.k);
  RFMatrix lower = RFMatrix::identity(n);
  WHFactorization f;
  f.g_plus = RFMatrix::identity(n);
  lower(n - 1, n - 1) = sign * gm;
  f.g_plus(n - 1, n - 1) = gp;
  for (size_t j = 0; j + 1 < n; ++j) {
    ProjectionResult p = riesz_project(v(j, 0) / gp);
    lower(j, n - 1) = r_minus_k * p.minus_part;
    f.g_plus(j, n - 1) = gp * p.plus_part;
  }
  f.g_minus = c.phi_e * lower;
  f.partial_indices = last_index_list(n, scalar.k);
  f.trace.route = "column";
  f.trace.add("psi_e", c.psi_e.to_string());
  f.trace.add("phi_e", c.phi_e.to_string());
  f.trace.add("v", v.to_string());
  return f;
}

}  // namespace detail

/// Factorization from a row-submatrix right-invertible over H+ (index of det G <= 0).
inline WHFactorization factor_via_row(const RFMatrix& g, size_t omitted_row, const RFMatrix& phi_plus,
                                      const ScalarWH& scalar) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  if (omitted_row >= n) fail(ErrorCode::kShapeMismatch, "omitted row out of range");
  RFMatrix p = move_to_last_permutation(n, omitted_row);
  int sign = move_to_last_sign(n, omitted_row);
  WHFactorization f = detail::factor_last_row(p * g, phi_plus, detail::scaled(scalar, sign));
  f.g_minus = p.transpose() * f.g_minus;
  f.trace.add("omitted_row", std::to_string(omitted_row));
  if (omitted_row != n - 1) f.trace.add("permutation_sign", std::to_string(sign));
  return f;
}

inline WHFactorization factor_via_row(const RFMatrix& g, size_t omitted_row, const RFMatrix& phi_plus) {
  return factor_via_row(g, omitted_row, phi_plus, wh_factor_scalar(determinant(g)));
}

/// Factorization from a column-submatrix left-invertible over H- (index of det G >= 0).
inline WHFactorization factor_via_column(const RFMatrix& g, size_t omitted_col, const RFMatrix& psi_minus,
                                         const ScalarWH& scalar) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  if (omitted_col >= n) fail(ErrorCode::kShapeMismatch, "omitted column out of range");
  RFMatrix p = move_to_last_permutation(n, omitted_col).transpose();
  int sign = move_to_last_sign(n, omitted_col);
  WHFactorization f = detail::factor_last_col(g * p, psi_minus, detail::scaled(scalar, sign));
  f.g_plus = f.g_plus * p.transpose();
  f.trace.add("omitted_col", std::to_string(omitted_col));
  if (omitted_col != n - 1) f.trace.add("permutation_sign", std::to_string(sign));
  return f;
}

inline WHFactorization factor_via_column(const RFMatrix& g, size_t omitted_col, const RFMatrix& psi_minus) {
  return factor_via_column(g, omitted_col, psi_minus, wh_factor_scalar(determinant(g)));
}

/// Factorization from a solution pair G phi_plus = phi_minus with left
/// inverses psi_plus, psi_minus (index of det G >= 0).
inline WHFactorization factor_via_rh(const RFMatrix& g, const RFMatrix& phi_plus, const RFMatrix& phi_minus,
                                     const RFMatrix& psi_plus, const RFMatrix& psi_minus, const ScalarWH& scalar) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  for (const RFMatrix* m : {&phi_plus, &phi_minus})
    if (m->rows() != n || m->cols() != n - 1) fail(ErrorCode::kShapeMismatch, "solutions must be n x (n-1)");
  for (const RFMatrix* m : {&psi_plus, &psi_minus})
    if (m->rows() != n - 1 || m->cols() != n) fail(ErrorCode::kShapeMismatch, "left inverses must be (n-1) x n");
  if (!(g * phi_plus == phi_minus)) fail(ErrorCode::kRhResidual, "G * phi_plus differs from phi_minus");
  if (!all_in_h(phi_plus, true) || !all_in_h(psi_plus, true))
    fail(ErrorCode::kHypothesisViolation, "plus-side data is not in H+");
  if (!all_in_h(phi_minus, false) || !all_in_h(psi_minus, false))
    fail(ErrorCode::kHypothesisViolation, "minus-side data is not in H-");
  if (!(psi_plus * phi_plus).is_identity() || !(psi_minus * phi_minus).is_identity())
    fail(ErrorCode::kHypothesisViolation, "supplied left inverses do not invert the solutions");
  if (scalar.k < 0) fail(ErrorCode::kHypothesisViolation, "this route needs a nonnegative index of det G");
  RationalFunction det = determinant(g);
  detail::check_scalar(scalar, det);
  Completion<RationalFunction> cp = complete(phi_plus, psi_plus);
  Completion<RationalFunction> cm = complete(phi_minus, psi_minus);
  RFMatrix g0 = cm.psi_e * g * cp.phi_e;
  RFMatrix big_q = psi_minus * g * cp.phi_e.col(n - 1);
  RationalFunction gm = scalar.gamma_minus_rf(), gp = scalar.gamma_plus_rf();
  RationalFunction r_minus_k = pow(RationalFunction::r(), -scalar.k);
  RFMatrix left = RFMatrix::identity(n), right = RFMatrix::identity(n);
  left(n - 1, n - 1) = gm;
  std::vector<RationalFunction> gamma_diag(n, RationalFunction(1));
  gamma_diag[n - 1] = gp;
  for (size_t j = 0; j + 1 < n; ++j) {
    // Projecting Q / gamma_plus (not Q) keeps the product exact when gamma_plus != 1.
    ProjectionResult p = riesz_project(big_q(j, 0) / gp);
    left(j, n - 1) = r_minus_k * p.minus_part;
    right(j, n - 1) = p.plus_part;
  }
  WHFactorization f;
  f.g_minus = cm.phi_e * left;
  f.g_plus = right * RFMatrix::diagonal(gamma_diag) * cp.psi_e;
  f.partial_indices = detail::last_index_list(n, scalar.k);
  f.trace.route = "rh";
  f.trace.add("g0", g0.to_string());
  f.trace.add("q", big_q.to_string());
  f.trace.add("det_g0_equals_det_g", determinant(g0) == det ? "true" : "false");
  bool triangular = true;
  for (size_t j = 0; j + 1 < n; ++j)
    if (!g0(n - 1, j).is_zero()) triangular = false;
  f.trace.add("g0_block_triangular", triangular ? "true" : "false");
  if (!(gp == RationalFunction(1)))
    f.trace.corrections.push_back("off-diagonal blocks built from projections of Q * gamma_plus^-1 instead of Q");
  return f;
}

inline WHFactorization factor_via_rh(const RFMatrix& g, const RFMatrix& phi_plus, const RFMatrix& phi_minus,
                                     const RFMatrix& psi_plus, const RFMatrix& psi_minus) {
  return factor_via_rh(g, phi_plus, phi_minus, psi_plus, psi_minus, wh_factor_scalar(determinant(g)));
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

namespace detail {

inline std::optional<RFMatrix> try_inverse(const RFMatrix& m) {
  RationalFunction d = determinant(m);
  if (d.is_zero()) return std::nullopt;
  return inverse(m);
}

}  // namespace detail

inline VerificationReport verify_factorization(const RFMatrix& g, const WHFactorization& f) {
  VerificationReport rep;
  const size_t n = g.rows();
  bool shapes = g.is_square() && f.g_minus.rows() == n && f.g_minus.cols() == n && f.g_plus.rows() == n &&
                f.g_plus.cols() == n && f.partial_indices.size() == n;
  rep.checks.push_back({"shapes", shapes, shapes ? "" : "factor shapes do not match the symbol"});
  if (!shapes) return rep;
  bool product = f.g_minus * d_matrix(f.partial_indices) * f.g_plus == g;
  rep.checks.push_back({"product", product, product ? "exact-zero residual" : "G- D G+ differs from G"});
  rep.checks.push_back({"diagonal_form", true, "D = diag(r^k_j)"});
  auto check_side = [&](const RFMatrix& m, bool plus, const std::string& name) {
    bool ok = all_in_h(m, plus);
    rep.checks.push_back({name, ok, ok ? "" : std::string("an entry has a pole outside ") + (plus ? "C-" : "C+") +
                                                  " or is unbounded at infinity"});
    std::optional<RFMatrix> inv = detail::try_inverse(m);
    bool inv_ok = inv && all_in_h(*inv, plus);
    rep.checks.push_back({name + "_inverse", inv_ok, inv ? (inv_ok ? "" : "inverse leaves the algebra") : "singular"});
    RationalFunction d = determinant(m);
    bool det_ok = !d.is_zero() && d.in_h(plus) && d.inverse().in_h(plus);
    rep.checks.push_back({name + "_det_invertible", det_ok, det_ok ? "" : "determinant is not invertible"});
  };
  check_side(f.g_plus, true, "g_plus_analytic");
  check_side(f.g_minus, false, "g_minus_analytic");
  return rep;
}

/// Checks gamma_minus r^k gamma_plus = f and the half-plane location of the factors.
inline VerificationReport verify_scalar_factorization(const RationalFunction& f, const ScalarWH& s) {
  VerificationReport rep;
  bool exact = s.gamma_minus.all_exact() && s.gamma_plus.all_exact();
  rep.checks.push_back({"exact_roots", exact, exact ? "" : "a factor has an approximate root"});
  if (!exact) return rep;
  RationalFunction gm = s.gamma_minus_rf(), gp = s.gamma_plus_rf();
  bool product = gm * pow(RationalFunction::r(), s.k) * gp == f;
  rep.checks.push_back({"product", product, product ? "exact-zero residual" : "gamma_- r^k gamma_+ differs from f"});
  bool minus = !gm.is_zero() && gm.in_h(false) && gm.inverse().in_h(false);
  rep.checks.push_back({"gamma_minus_analytic", minus, minus ? "" : "gamma_- or its inverse leaves H-"});
  bool plus = !gp.is_zero() && gp.in_h(true) && gp.inverse().in_h(true);
  rep.checks.push_back({"gamma_plus_analytic", plus, plus ? "" : "gamma_+ or its inverse leaves H+"});
  return rep;
}

// ---------------------------------------------------------------------------
// Inverse of the Toeplitz operator in the canonical case.
// ---------------------------------------------------------------------------

inline std::vector<RationalFunction> multiply(const RFMatrix& m, const std::vector<RationalFunction>& v) {
  if (m.cols() != v.size()) fail(ErrorCode::kShapeMismatch, "matrix-vector shapes differ");
  std::vector<RationalFunction> out(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline void require_hardy_plus(const RationalFunction& f) {
  if (f.is_zero()) return;
  if (f.degree() >= 0 || !all_roots_in(f.den(), HalfPlane::kLower))
    fail(ErrorCode::kRealPole, "vector entry is not a strictly proper function with poles in C-");
}

/// T_G phi = P+(G phi).
inline std::vector<RationalFunction> apply_toeplitz(const RFMatrix& g, const std::vector<RationalFunction>& phi) {
  std::vector<RationalFunction> out;
  for (const auto& v : multiply(g, phi)) out.push_back(plain_project(v).plus_part);
  return out;
}

/// G+^-1 P+ (G-^-1 phi) for a canonical factorization.
inline std::vector<RationalFunction> apply_inverse(const WHFactorization& f, const std::vector<RationalFunction>& phi) {
  for (int k : f.partial_indices)
    if (k != 0) fail(ErrorCode::kIndexNonzero, "apply_inverse needs all partial indices zero");
  for (const auto& v : phi) require_hardy_plus(v);
  std::vector<RationalFunction> y = multiply(inverse(f.g_minus), phi);
  for (auto& v : y) v = plain_project(v).plus_part;
  std::vector<RationalFunction> out = multiply(inverse(f.g_plus), y);
  for (const auto& v : out) require_hardy_plus(v);
  return out;
}

}  // namespace whfactor

#endif  // WHFACTOR_MATRIX_WH_HPP_
