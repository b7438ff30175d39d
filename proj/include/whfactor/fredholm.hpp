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


#ifndef WHFACTOR_FREDHOLM_HPP_
#define WHFACTOR_FREDHOLM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whfactor/ap_factor.hpp"
#include "whfactor/corona.hpp"
#include "whfactor/fredholm_report.hpp"
#include "whfactor/matrix_wh.hpp"

namespace whfactor {

enum class StructureKind { kRowSubmatrix, kColumnSubmatrix, kSolutionPair };
enum class CertificateLevel { kH, kM };

inline const char* structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::kRowSubmatrix: return "row";
    case StructureKind::kColumnSubmatrix: return "column";
    case StructureKind::kSolutionPair: return "rh";
  }
  return "?";
}

/// Structural facts supplied by the caller and rechecked by classify.
///  row:    `inverse` is a right inverse (n x (n-1)) of G without row `omitted`
///  column: `inverse` is a left inverse ((n-1) x n) of G without column `omitted`
///  rh:     G phi_plus = phi_minus with left inverses psi_plus, psi_minus
struct StructureCertificate {
  StructureKind kind = StructureKind::kRowSubmatrix;
  CertificateLevel level = CertificateLevel::kH;
  size_t omitted = 0;
  RFMatrix inverse;
  RFMatrix phi_plus, phi_minus, psi_plus, psi_minus;
};

namespace detail {

inline bool all_bounded_on_line(const RFMatrix& m) {
  for (const auto& v : m.entries())
    if (!v.bounded_on_line()) return false;
  return true;
}

inline bool level_membership(const RFMatrix& m, CertificateLevel level, bool plus) {
  return level == CertificateLevel::kH ? all_in_h(m, plus) : all_bounded_on_line(m);
}

// Report for the scalar symbol det G; not Fredholm when det G is singular on the line.
inline std::shared_ptr<const FredholmReport> scalar_report(const RationalFunction& det) {
  auto rep = std::make_shared<FredholmReport>();
  if (det.invertible_on_line()) {
    int k = winding_exact(det);
    *rep = report_from_indices({k});
    rep->basis = "scalar rational symbol invertible on the line";
  } else {
    rep->fredholm = Tristate::kNo;
    rep->invertible = Tristate::kNo;
    rep->basis = "scalar rational symbol with a zero or pole on the closed line";
  }
  rep->det_symbol = det.to_string();
  return rep;
}

}  // namespace detail

/// Classification from a structural certificate: strictly equivalent to the
/// scalar det G operator at H level, nearly equivalent at M level.
inline FredholmReport classify(const RFMatrix& g, const StructureCertificate& cert) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  FredholmReport rep;
  auto require = [&](const std::string& name, bool ok) {
    rep.hypotheses.push_back({name, ok, ""});
    if (!ok) fail(ErrorCode::kCertificateInvalid, "certificate check failed: " + name);
  };
  const bool h_level = cert.level == CertificateLevel::kH;
  switch (cert.kind) {
    case StructureKind::kRowSubmatrix: {
      if (cert.omitted >= n) fail(ErrorCode::kShapeMismatch, "omitted row out of range");
      RFMatrix psi = g.without_row(cert.omitted);
      require("inverse_shape", cert.inverse.rows() == n && cert.inverse.cols() == n - 1);
      require("right_inverse_identity", (psi * cert.inverse).is_identity());
      require("rows_membership", detail::level_membership(psi, cert.level, true));
      require("inverse_membership", detail::level_membership(cert.inverse, cert.level, true));
      rep.basis = h_level ? "row submatrix right invertible over H+" : "row submatrix right invertible over M+";
      break;
    }
    case StructureKind::kColumnSubmatrix: {
      if (cert.omitted >= n) fail(ErrorCode::kShapeMismatch, "omitted column out of range");
      RFMatrix phi = g.without_col(cert.omitted);
      require("inverse_shape", cert.inverse.rows() == n - 1 && cert.inverse.cols() == n);
      require("left_inverse_identity", (cert.inverse * phi).is_identity());
      require("columns_membership", detail::level_membership(phi, cert.level, false));
      require("inverse_membership", detail::level_membership(cert.inverse, cert.level, false));
      rep.basis = h_level ? "column submatrix left invertible over H-" : "column submatrix left invertible over M-";
      break;
    }
    case StructureKind::kSolutionPair: {
      require("shapes", cert.phi_plus.rows() == n && cert.phi_plus.cols() == n - 1 && cert.phi_minus.rows() == n &&
                            cert.phi_minus.cols() == n - 1 && cert.psi_plus.rows() == n - 1 &&
                            cert.psi_minus.rows() == n - 1 && cert.psi_plus.cols() == n &&
                            cert.psi_minus.cols() == n);
      require("solution_identity", g * cert.phi_plus == cert.phi_minus);
      require("left_inverse_plus", (cert.psi_plus * cert.phi_plus).is_identity());
      require("left_inverse_minus", (cert.psi_minus * cert.phi_minus).is_identity());
      require("plus_membership", detail::level_membership(cert.phi_plus, cert.level, true) &&
                                     detail::level_membership(cert.psi_plus, cert.level, true));
      require("minus_membership", detail::level_membership(cert.phi_minus, cert.level, false) &&
                                      detail::level_membership(cert.psi_minus, cert.level, false));
      rep.basis = h_level ? "solution pair left invertible over H+/H-" : "solution pair left invertible over M+/M-";
      break;
    }
  }
  RationalFunction det = determinant(g);
  rep.det_symbol = det.to_string();
  rep.det_report = detail::scalar_report(det);
  rep.fredholm = rep.det_report->fredholm;
  if (h_level) {
    rep.equivalence = Equivalence::kStrictly;
    rep.dim_ker = rep.det_report->dim_ker;
    rep.dim_coker = rep.det_report->dim_coker;
    rep.index = rep.det_report->index;
    rep.invertible = rep.det_report->invertible;
    rep.coburn = rep.det_report->fredholm == Tristate::kYes ? rep.det_report->coburn : Coburn::kUnknown;
    if (rep.det_report->fredholm == Tristate::kNo) rep.note = "kernel or cokernel of T_G is trivial";
  } else {
    rep.equivalence = Equivalence::kNearly;
  }
  return rep;
}

inline RFMatrix conj_transpose(const RFMatrix& m) {
  return m.transpose().map([](const RationalFunction& f) { return f.conj_on_line(); });
}

namespace detail {

inline std::vector<RationalFunction> last_row(const RFMatrix& g) {
  std::vector<RationalFunction> v;
  for (size_t j = 0; j < g.cols(); ++j) v.push_back(g(g.rows() - 1, j));
  return v;
}

inline bool is_diagonal(const RFMatrix& g) {
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j)
      if (i != j && !g(i, j).is_zero()) return false;
  return true;
}

// Shared tail of the unitary/orthogonal reports.
inline FredholmReport special_report(const RFMatrix& g, const RationalFunction& det, bool last_row_plus,
                                     const std::string& basis) {
  const size_t n = g.rows();
  FredholmReport rep;
  rep.basis = basis;
  rep.det_symbol = det.to_string();
  rep.det_report = scalar_report(det);
  rep.fredholm = Tristate::kYes;
  rep.index = 0;
  rep.equivalence = Equivalence::kNearly;
  RFMatrix psi = g.without_row(n - 1);
  std::vector<RationalFunction> last = last_row(g);
  bool h_rows = all_in_h(psi, true);
  bool h_last = true;
  for (const auto& v : last)
    if (!v.in_h(last_row_plus)) h_last = false;
  rep.hypotheses.push_back({"retained_rows_in_h_plus", h_rows, ""});
  if (h_rows && h_last) {
    RationalCorona hc = corona_solve_hplus(last, last_row_plus);
    bool ok = hc.verdict == CoronaVerdict::kCertificate;
    rep.hypotheses.push_back({"last_row_h_corona", ok, hc.witness.description});
    if (ok) {
      rep.invertible = Tristate::kYes;
      rep.dim_ker = 0;
      rep.dim_coker = 0;
      rep.coburn = Coburn::kBoth;
      rep.partial_indices = std::vector<int>(n, 0);
      return rep;
    }
  }
  if (is_diagonal(g)) {
    std::vector<int> idx;
    for (size_t i = 0; i < n; ++i) idx.push_back(winding_exact(g(i, i)));
    FredholmReport d = report_from_indices(idx);
    rep.partial_indices = d.partial_indices;
    rep.dim_ker = d.dim_ker;
    rep.dim_coker = d.dim_coker;
    rep.invertible = d.invertible;
    rep.coburn = d.coburn;
    rep.note = "diagonal symbol: partial indices from the entries";
  }
  return rep;
}

}  // namespace detail

/// Unitary G (G G* = I on the line) with constant determinant.
inline FredholmReport special_unitary(const RFMatrix& g, const std::optional<GaussianRational>& det_constant = {}) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 1) fail(ErrorCode::kShapeMismatch, "symbol must be square");
  if (!(g * conj_transpose(g)).is_identity()) fail(ErrorCode::kNotUnitary, "G G* is not the identity");
  RationalFunction det = determinant(g);
  if (!det.is_constant() || det.is_zero()) fail(ErrorCode::kHypothesisViolation, "det G is not constant");
  if (det_constant && !(det.constant_value() == *det_constant))
    fail(ErrorCode::kHypothesisViolation, "det G differs from the stated constant");
  RFMatrix psi = g.without_row(n - 1);
  if (!detail::all_bounded_on_line(psi))
    fail(ErrorCode::kHypothesisViolation, "retained rows are not bounded on the line");
  RationalCorona c = corona_solve_mplus(detail::last_row(g), false, false);
  if (c.verdict != CoronaVerdict::kCertificate) {
    Error e(ErrorCode::kHypothesisViolation, "last row is not an M- corona tuple: " + c.witness.description);
    throw e;
  }
  FredholmReport rep =
      detail::special_report(g, det, false, "unitary with constant determinant, last row M- corona tuple");
  rep.hypotheses.insert(rep.hypotheses.begin(), {"last_row_m_corona", true, ""});
  rep.hypotheses.insert(rep.hypotheses.begin(), {"unitary", true, ""});
  return rep;
}

/// Orthogonal G (G G^T = I) with constant determinant.
inline FredholmReport special_orthogonal(const RFMatrix& g) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 1) fail(ErrorCode::kShapeMismatch, "symbol must be square");
  // The last-row check comes first so that a planted common zero is reported with its witness.
  std::vector<RationalFunction> last = detail::last_row(g);
  for (const auto& v : last)
    if (!v.bounded_on_line()) fail(ErrorCode::kHypothesisViolation, "last row is not bounded on the line");
  RationalCorona c = corona_solve_mplus(last, true, false);
  if (c.verdict != CoronaVerdict::kCertificate)
    fail(ErrorCode::kHypothesisViolation, "last row is not an M+ corona tuple: " + c.witness.description);
  if (!(g * g.transpose()).is_identity()) fail(ErrorCode::kNotOrthogonal, "G G^T is not the identity");
  RationalFunction det = determinant(g);
  if (!det.is_constant() || det.is_zero()) fail(ErrorCode::kHypothesisViolation, "det G is not constant");
  if (!detail::all_bounded_on_line(g.without_row(n - 1)))
    fail(ErrorCode::kHypothesisViolation, "retained rows are not bounded on the line");
  FredholmReport rep =
      detail::special_report(g, det, true, "orthogonal with constant determinant, last row M+ corona tuple");
  rep.hypotheses.insert(rep.hypotheses.begin(), {"orthogonal", true, ""});
  rep.hypotheses.insert(rep.hypotheses.begin(), {"last_row_m_corona", true, ""});
  rep.note += rep.note.empty() ? "" : "; ";
  rep.note += "G^T supplies a right inverse of the retained rows";
  return rep;
}

/// All rows (or all columns) but one rational; the exceptional line may mix
/// rational functions and exponentials.
inline FredholmReport continuous_except_line(const MixedMatrix& g) {
  const size_t n = g.rows();
  if (!g.is_square() || n < 1) fail(ErrorCode::kShapeViolation, "symbol must be square");
  auto row_rational = [&](size_t i) {
    for (size_t j = 0; j < n; ++j)
      if (!g(i, j).is_rational()) return false;
    return true;
  };
  auto col_rational = [&](size_t j) {
    for (size_t i = 0; i < n; ++i)
      if (!g(i, j).is_rational()) return false;
    return true;
  };
  size_t bad_rows = 0, bad_cols = 0;
  for (size_t k = 0; k < n; ++k) {
    if (!row_rational(k)) ++bad_rows;
    if (!col_rational(k)) ++bad_cols;
  }
  if (bad_rows > 1 && bad_cols > 1)
    fail(ErrorCode::kShapeViolation, "more than one row and more than one column are not rational");
  for (const auto& v : g.entries())
    for (const auto& [lambda, f] : v.terms())
      if (!f.bounded_on_line()) fail(ErrorCode::kShapeViolation, "an entry is not bounded on the line");
  FredholmReport rep;
  rep.equivalence = Equivalence::kNearly;
  rep.basis = "all entries outside one row or column are continuous on the closed line";
  MixedSymbol det = det_cofactor(g);
  rep.det_symbol = det.to_string();
  if (det.is_rational()) {
    rep.det_report = detail::scalar_report(det.to_rational());
    rep.fredholm = rep.det_report->fredholm;
    rep.note = "index of T_G not inferred; see the det G report";
  } else if (det.is_pure_ap()) {
    APPoly p = det.to_ap();
    MeanMotionResult mm = mean_motion(p);
    auto sub = std::make_shared<FredholmReport>();
    sub->det_symbol = p.to_string();
    if (!mm.kappa || mm.method == MeanMotionMethod::kNumericEstimate) {
      sub->fredholm = Tristate::kUnknown;
      sub->note = mm.kappa ? "mean motion only estimated numerically" : mm.warning;
    } else {
      // An invertible almost periodic symbol gives a Fredholm operator only with zero mean motion.
      sub->fredholm = mm.kappa->is_zero() ? Tristate::kYes : Tristate::kNo;
      sub->invertible = sub->fredholm;
      sub->basis = std::string("almost periodic symbol, mean motion by ") + mean_motion_method_name(mm.method);
      sub->note = "mean motion " + mm.kappa->to_string();
    }
    rep.det_report = sub;
    rep.fredholm = sub->fredholm;
  } else {
    rep.fredholm = Tristate::kUnknown;
    rep.note = "det G mixes rational functions and exponentials; returned for external analysis";
  }
  return rep;
}

}  // namespace whfactor

#endif  // WHFACTOR_FREDHOLM_HPP_
