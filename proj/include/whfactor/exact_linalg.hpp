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


#ifndef WHFACTOR_EXACT_LINALG_HPP_
#define WHFACTOR_EXACT_LINALG_HPP_

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "whfactor/ring_matrix.hpp"

namespace whfactor {

/// All m-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<size_t>> lex_subsets(size_t n, size_t m) {
  std::vector<std::vector<size_t>> out;
  if (m > n) return out;
  std::vector<size_t> cur(m);
  for (size_t k = 0; k < m; ++k) cur[k] = k;
  while (true) {
    out.push_back(cur);
    if (m == 0) break;
    size_t k = m;
    while (k > 0 && cur[k - 1] == n - m + k - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (size_t j = k; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class R>
struct MinorVector {
  std::vector<std::vector<size_t>> subsets;  // row subsets, lexicographic
  std::vector<R> values;
};

/// d_k = det Phi_{I_k} over all maximal row subsets I_k.
template <class R>
MinorVector<R> maximal_minors(const Matrix<R>& phi) {
  if (phi.cols() > phi.rows()) fail(ErrorCode::kShapeMismatch, "maximal minors need m <= n");
  MinorVector<R> mv;
  mv.subsets = lex_subsets(phi.rows(), phi.cols());
  for (const auto& subset : mv.subsets)
    mv.values.push_back(determinant(phi.submatrix(subset, Matrix<R>::range(phi.cols()))));
  return mv;
}

template <class R>
R dot(const std::vector<R>& a, const std::vector<R>& b) {
  if (a.size() != b.size()) fail(ErrorCode::kShapeMismatch, "vector lengths differ");
  R acc = ring_traits<R>::zero();
  for (size_t k = 0; k < a.size(); ++k) acc = acc + a[k] * b[k];
  return acc;
}

// Sign conventions for the adjoint submatrix. The cofactor sign exponent is
// taken either from the row's position inside the subset or from its row
// number in Phi; the outer diagonal sign matrix is one of four candidates.
enum class CofactorSignIndex { kPositionInSubset, kRowOfPhi };
enum class OuterSign { kIdentity, kAlternating, kAlternatingShifted, kNegIdentity };

inline const char* cofactor_sign_index_name(CofactorSignIndex c) {
  return c == CofactorSignIndex::kPositionInSubset ? "position_in_subset" : "row_of_phi";
}
inline const char* outer_sign_name(OuterSign s) {
  switch (s) {
    case OuterSign::kIdentity: return "identity";
    case OuterSign::kAlternating: return "diag((-1)^q)";
    case OuterSign::kAlternatingShifted: return "diag((-1)^(q+1))";
    case OuterSign::kNegIdentity: return "-identity";
  }
  return "?";
}

struct SignConvention {
  CofactorSignIndex index = CofactorSignIndex::kPositionInSubset;
  OuterSign outer = OuterSign::kIdentity;
  friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

// Found by calibrate_adjoint_signs (see below); the test suite reruns it.
inline constexpr SignConvention kCalibratedSigns{CofactorSignIndex::kPositionInSubset, OuterSign::kIdentity};

/// Sign of the q-th diagonal entry (q 1-based) of the outer sign matrix.
inline int outer_sign_entry(OuterSign s, size_t q) {
  switch (s) {
    case OuterSign::kIdentity: return 1;
    case OuterSign::kAlternating: return q % 2 == 0 ? 1 : -1;
    case OuterSign::kAlternatingShifted: return q % 2 == 0 ? -1 : 1;
    case OuterSign::kNegIdentity: return -1;
  }
  return 1;
}

template <class R>
R signed_value(const R& v, int sign) {
  return sign > 0 ? v : -v;
}

/// m x n matrix supported on the columns in I, filled with signed cofactors of
/// Phi_I (transposed), so that with the calibrated convention
/// adjoint_submatrix(Phi, I) * Phi = det(Phi_I) * I_m.
template <class R>
Matrix<R> adjoint_submatrix(const Matrix<R>& phi, const std::vector<size_t>& subset,
                            CofactorSignIndex index = kCalibratedSigns.index) {
  const size_t n = phi.rows(), m = phi.cols();
  if (subset.size() != m) fail(ErrorCode::kShapeMismatch, "subset size must equal the column count");
  for (size_t p : subset)
    if (p >= n) fail(ErrorCode::kShapeMismatch, "subset index out of range");
  Matrix<R> phi_i = phi.submatrix(subset, Matrix<R>::range(m));
  Matrix<R> out(m, n);
  for (size_t t = 0; t < m; ++t) {
    const size_t p = subset[t];
    for (size_t q = 0; q < m; ++q) {
      R minor = m == 1 ? ring_traits<R>::one() : determinant(phi_i.without_row(t).without_col(q));
      size_t exponent = (index == CofactorSignIndex::kPositionInSubset ? t : p) + q;
      out(q, p) = signed_value(minor, exponent % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

/// Delta* built from the maximal minors of psi^T, after checking psi phi = I.
template <class R>
std::vector<R> delta_left_inverse_from_psi(const Matrix<R>& psi, const Matrix<R>& phi) {
  if (psi.rows() != phi.cols() || psi.cols() != phi.rows())
    fail(ErrorCode::kShapeMismatch, "psi must be m x n for phi n x m");
  if (!(psi * phi).is_identity()) fail(ErrorCode::kNotALeftInverse, "psi * phi is not the identity");
  return maximal_minors(psi.transpose()).values;
}

template <class R>
Matrix<R> left_inverse_general(const Matrix<R>& phi, const std::vector<R>& delta_star,
                               SignConvention signs = kCalibratedSigns) {
  const size_t n = phi.rows(), m = phi.cols();
  MinorVector<R> mv = maximal_minors(phi);
  if (delta_star.size() != mv.values.size())
    fail(ErrorCode::kShapeMismatch, "certificate length must be C(n, m)");
  if (!(dot(delta_star, mv.values) == ring_traits<R>::one()))
    fail(ErrorCode::kBezoutCertificateInvalid, "certificate does not pair with the minors to 1");
  Matrix<R> psi(m, n);
  for (size_t k = 0; k < mv.subsets.size(); ++k) {
    if (ring_traits<R>::is_zero(delta_star[k])) continue;
    psi = psi + delta_star[k] * adjoint_submatrix(phi, mv.subsets[k], signs.index);
  }
  for (size_t q = 0; q < m; ++q)
    if (outer_sign_entry(signs.outer, q + 1) < 0)
      for (size_t p = 0; p < n; ++p) psi(q, p) = -psi(q, p);
  return psi;
}

/// Determinants of Phi with row p omitted, p = 0..n-1 (n x (n-1) input).
template <class R>
std::vector<R> omitted_row_minors(const Matrix<R>& phi) {
  if (phi.cols() + 1 != phi.rows()) fail(ErrorCode::kShapeMismatch, "expected an n x (n-1) matrix");
  std::vector<R> out;
  for (size_t p = 0; p < phi.rows(); ++p) out.push_back(determinant(phi.without_row(p)));
  return out;
}

/// Determinants of Psi with column p omitted ((n-1) x n input).
template <class R>
std::vector<R> omitted_col_minors(const Matrix<R>& psi) {
  return omitted_row_minors(psi.transpose());
}

/// Left inverse of an n x (n-1) matrix from the (n-2) x (n-2) minors and a
/// certificate c ordered by omitted row: sum_p c_p det(Phi without row p) = 1.
template <class R>
Matrix<R> left_inverse_corank1(const Matrix<R>& phi, const std::vector<R>& certificate) {
  using T = ring_traits<R>;
  const size_t n = phi.rows();
  if (n < 2 || phi.cols() + 1 != n) fail(ErrorCode::kShapeMismatch, "expected an n x (n-1) matrix, n >= 2");
  if (certificate.size() != n) fail(ErrorCode::kShapeMismatch, "certificate length must be n");
  if (!(dot(certificate, omitted_row_minors(phi)) == T::one()))
    fail(ErrorCode::kBezoutCertificateInvalid, "certificate does not pair with the minors to 1");
  Matrix<R> psi(n - 1, n);
  for (size_t j = 0; j < n - 1; ++j) {
    Matrix<R> reduced = phi.without_col(j);
    // Skew matrix of minors with rows r and s removed.
    Matrix<R> skew(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t s = r + 1; s < n; ++s) {
        std::vector<size_t> keep;
        for (size_t k = 0; k < n; ++k)
          if (k != r && k != s) keep.push_back(k);
        R d = n == 2 ? T::one() : determinant(reduced.submatrix(keep, Matrix<R>::range(n - 2)));
        skew(r, s) = d;
        skew(s, r) = -d;
      }
    // Row j of psi: (-1)^(j+1) c * skew * diag(1, -1, 1, ...), j 0-based.
    for (size_t s = 0; s < n; ++s) {
      R acc = T::zero();
      for (size_t r = 0; r < n; ++r)
        if (!T::is_zero(certificate[r]) && !T::is_zero(skew(r, s))) acc = acc + certificate[r] * skew(r, s);
      int sign = ((j + 1) % 2 == 0 ? 1 : -1) * (s % 2 == 0 ? 1 : -1);
      psi(j, s) = signed_value(acc, sign);
    }
  }
  return psi;
}

template <class R>
struct Completion {
  Matrix<R> phi_e;  // [phi N]
  Matrix<R> psi_e;  // [psi; N~]
  R det_value;      // (-1)^(n-1)
  std::vector<R> n_col;
  std::vector<R> n_row;
};

/// Square completions of a left-invertible n x (n-1) pair with
/// psi_e phi_e = phi_e psi_e = I and det = (-1)^(n-1).
template <class R>
Completion<R> complete(const Matrix<R>& phi, const Matrix<R>& psi) {
  using T = ring_traits<R>;
  const size_t n = phi.rows();
  if (n < 1 || phi.cols() + 1 != n || psi.rows() + 1 != n || psi.cols() != n)
    fail(ErrorCode::kShapeMismatch, "expected phi n x (n-1) and psi (n-1) x n");
  if (!(psi * phi).is_identity()) fail(ErrorCode::kNotALeftInverse, "psi * phi is not the identity");
  Completion<R> c;
  std::vector<R> col_minors = n == 1 ? std::vector<R>{T::one()} : omitted_col_minors(psi);
  std::vector<R> row_minors = n == 1 ? std::vector<R>{T::one()} : omitted_row_minors(phi);
  c.phi_e = Matrix<R>(n, n);
  c.psi_e = Matrix<R>(n, n);
  for (size_t j = 0; j < n; ++j) {
    int sign = j % 2 == 0 ? 1 : -1;
    c.n_col.push_back(signed_value(col_minors[j], sign));
    c.n_row.push_back(signed_value(row_minors[j], sign));
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j + 1 < n; ++j) {
      c.phi_e(i, j) = phi(i, j);
      c.psi_e(j, i) = psi(j, i);
    }
    c.phi_e(i, n - 1) = c.n_col[i];
    c.psi_e(n - 1, i) = c.n_row[i];
  }
  c.det_value = (n - 1) % 2 == 0 ? T::one() : -T::one();
  return c;
}

// ---------------------------------------------------------------------------
// One-sided invertibility through a scalar Bezout solver.
// ---------------------------------------------------------------------------

enum class BezoutStatus { kSolved, kNoSolution, kUnresolved };

template <class R>
struct BezoutOutcome {
  BezoutStatus status = BezoutStatus::kUnresolved;
  std::vector<R> coefficients;  // sum coefficients[k] * h[k] = 1 when solved
  std::string witness;
};

template <class R>
using BezoutSolver = std::function<BezoutOutcome<R>(const std::vector<R>&)>;

enum class Side { kLeft, kRight };

template <class R>
struct OneSidedDiagnosis {
  BezoutStatus status = BezoutStatus::kUnresolved;
  MinorVector<R> minors;
  std::vector<R> certificate;
  std::optional<Matrix<R>> inverse;  // left inverse of phi, or right inverse for kRight
  std::string witness;
};

/// Solver for fields: any nonzero minor is a unit.
template <class R>
BezoutOutcome<R> field_bezout(const std::vector<R>& h) {
  BezoutOutcome<R> out;
  for (size_t k = 0; k < h.size(); ++k) {
    if (!ring_traits<R>::is_zero(h[k])) {
      out.status = BezoutStatus::kSolved;
      out.coefficients.assign(h.size(), ring_traits<R>::zero());
      out.coefficients[k] = ring_traits<R>::one() / h[k];
      return out;
    }
  }
  out.status = BezoutStatus::kNoSolution;
  out.witness = "all minors vanish";
  return out;
}

template <class R>
OneSidedDiagnosis<R> one_sided_diagnose(const Matrix<R>& phi, Side side, const BezoutSolver<R>& solver) {
  Matrix<R> a = side == Side::kLeft ? phi : phi.transpose();
  OneSidedDiagnosis<R> d;
  d.minors = maximal_minors(a);
  bool all_zero = true;
  for (const auto& v : d.minors.values)
    if (!ring_traits<R>::is_zero(v)) all_zero = false;
  if (all_zero) {
    d.status = BezoutStatus::kNoSolution;
    d.witness = "all maximal minors vanish";
    return d;
  }
  BezoutOutcome<R> b = solver(d.minors.values);
  d.status = b.status;
  d.witness = b.witness;
  if (b.status != BezoutStatus::kSolved) return d;
  d.certificate = b.coefficients;
  Matrix<R> inv = left_inverse_general(a, d.certificate);
  d.inverse = side == Side::kLeft ? inv : inv.transpose();
  return d;
}

// ---------------------------------------------------------------------------
// Sign calibration.
// ---------------------------------------------------------------------------

struct CalibrationCandidate {
  SignConvention convention;
  bool passed = false;
  int trials = 0;
};

struct CalibrationReport {
  std::vector<CalibrationCandidate> candidates;
  std::optional<SignConvention> chosen;  // unique passing candidate, if any
};

/// Tries every sign convention against Psi Phi = I on random integer
/// matrices over Q(i) with m <= max_m. Deterministic for a given seed.
inline CalibrationReport calibrate_adjoint_signs(size_t max_m = 5, int trials_per_shape = 3, unsigned seed = 20260101) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  struct Instance {
    GMatrix phi;
    std::vector<GaussianRational> delta_star;
  };
  std::vector<Instance> instances;
  for (size_t m = 1; m <= max_m; ++m)
    for (size_t n = m; n <= m + 2; ++n)
      for (int t = 0; t < trials_per_shape; ++t) {
        GMatrix phi(n, m);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < m; ++j) phi(i, j) = GaussianRational(Rational(dist(rng)), Rational(dist(rng)));
        auto minors = maximal_minors(phi).values;
        std::vector<GaussianRational> ds(minors.size());
        for (auto& v : ds) v = GaussianRational(Rational(dist(rng)), Rational(dist(rng)));
        GaussianRational s = dot(ds, minors);
        if (s.is_zero()) continue;
        for (auto& v : ds) v /= s;
        instances.push_back({phi, ds});
      }
  CalibrationReport report;
  for (auto index : {CofactorSignIndex::kPositionInSubset, CofactorSignIndex::kRowOfPhi})
    for (auto outer : {OuterSign::kIdentity, OuterSign::kAlternating, OuterSign::kAlternatingShifted,
                       OuterSign::kNegIdentity}) {
      CalibrationCandidate cand{{index, outer}, true, 0};
      for (const auto& inst : instances) {
        ++cand.trials;
        if (!(left_inverse_general(inst.phi, inst.delta_star, cand.convention) * inst.phi).is_identity()) {
          cand.passed = false;
          break;
        }
      }
      report.candidates.push_back(cand);
    }
  int passing = 0;
  for (const auto& c : report.candidates)
    if (c.passed) {
      ++passing;
      report.chosen = c.convention;
    }
  if (passing != 1) report.chosen.reset();
  return report;
}

}  // namespace whfactor

#endif  // WHFACTOR_EXACT_LINALG_HPP_
