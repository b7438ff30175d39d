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


#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "support.hpp"

using namespace whfactor;
using namespace whfactor::testing;

namespace {

GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }

GMatrix example_3x2() { return GMatrix{{1, 0}, {0, 1}, {2, 3}}; }

template <class R>
Matrix<R> scaled_identity(size_t m, const R& s) {
  Matrix<R> out(m, m);
  for (size_t k = 0; k < m; ++k) out(k, k) = s;
  return out;
}

}  // namespace

TEST_CASE("maximal minors of the 3x2 example", "[exact-linalg]") {
  GMatrix phi = example_3x2();
  MinorVector<GaussianRational> mv = maximal_minors(phi);
  REQUIRE(mv.subsets == std::vector<std::vector<size_t>>{{0, 1}, {0, 2}, {1, 2}});
  // oracle: ad - bc on each pair of rows
  for (size_t k = 0; k < mv.subsets.size(); ++k) {
    size_t p = mv.subsets[k][0], q = mv.subsets[k][1];
    REQUIRE(mv.values[k] == phi(p, 0) * phi(q, 1) - phi(p, 1) * phi(q, 0));
  }
  REQUIRE(mv.values == std::vector<GaussianRational>{1, 3, -2});
}

TEST_CASE("maximal minors of an identity block and of a rank-deficient matrix", "[exact-linalg]") {
  GMatrix block{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  MinorVector<GaussianRational> mv = maximal_minors(block);
  REQUIRE(mv.values.size() == 4);
  REQUIRE(mv.values[0] == GaussianRational(1));
  for (size_t k = 1; k < 4; ++k) REQUIRE(mv.values[k].is_zero());

  GMatrix low_rank{{1, 2}, {2, 4}, {3, 6}};
  for (const auto& v : maximal_minors(low_rank).values) REQUIRE(v.is_zero());
  REQUIRE_THROWS_AS(maximal_minors(GMatrix{{1, 2, 3}}), Error);
}

TEST_CASE("symbolic 2x2: the calibrated adjoint gives det times identity", "[exact-linalg][calibration]") {
  Sym a = Sym::var(0), b = Sym::var(1), c = Sym::var(2), d = Sym::var(3);
  Matrix<Sym> phi{{a, b}, {c, d}};
  Sym det = a * d - b * c;
  Matrix<Sym> adj = adjoint_submatrix(phi, {0, 1});
  REQUIRE(adj * phi == scaled_identity<Sym>(2, det));

  // The printed outer sign diag((-1)^q) flips the first row and misses the identity.
  Matrix<Sym> printed = adj;
  for (size_t q = 0; q < 2; ++q)
    if (outer_sign_entry(OuterSign::kAlternating, q + 1) < 0)
      for (size_t p = 0; p < 2; ++p) printed(q, p) = -printed(q, p);
  Matrix<Sym> expected_printed = Matrix<Sym>::diagonal({-det, det});
  REQUIRE(printed * phi == expected_printed);
  REQUIRE_FALSE(printed * phi == scaled_identity<Sym>(2, det));
}

TEST_CASE("symbolic 3x2: cofactor signs follow the position inside the subset", "[exact-linalg][calibration]") {
  std::array<Sym, 6> v;
  for (int k = 0; k < 6; ++k) v[k] = Sym::var(k);
  Matrix<Sym> phi{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
  std::vector<size_t> subset{0, 2};
  Sym det = v[0] * v[5] - v[1] * v[4];
  REQUIRE(adjoint_submatrix(phi, subset, CofactorSignIndex::kPositionInSubset) * phi == scaled_identity<Sym>(2, det));
  // Row numbers of Phi give the opposite sign on the off-diagonal cofactors here.
  REQUIRE_FALSE(adjoint_submatrix(phi, subset, CofactorSignIndex::kRowOfPhi) * phi == scaled_identity<Sym>(2, det));
}

TEST_CASE("adjoint submatrix edge cases", "[exact-linalg]") {
  GMatrix id = GMatrix::identity(3);
  REQUIRE((adjoint_submatrix(id, {0, 1, 2}) * id).is_identity());
  GMatrix singular{{1, 2}, {2, 4}, {0, 1}};
  REQUIRE((adjoint_submatrix(singular, {0, 1}) * singular).is_zero());
  REQUIRE_THROWS_AS(adjoint_submatrix(singular, {0}), Error);
}

TEST_CASE("sign calibration selects a unique convention", "[exact-linalg][calibration]") {
  CalibrationReport rep = calibrate_adjoint_signs(5);
  REQUIRE(rep.candidates.size() == 8);
  REQUIRE(rep.chosen.has_value());
  REQUIRE(*rep.chosen == kCalibratedSigns);
  int passing = 0;
  for (const auto& c : rep.candidates) passing += c.passed ? 1 : 0;
  REQUIRE(passing == 1);
}

TEST_CASE("delta from a left inverse pairs with the minors to one", "[exact-linalg]") {
  GMatrix phi{{1, 0}, {0, 1}, {0, 0}};
  GMatrix psi{{1, 0, 0}, {0, 1, 0}};
  auto ds = delta_left_inverse_from_psi(psi, phi);
  REQUIRE(ds == std::vector<GaussianRational>{1, 0, 0});
  REQUIRE(dot(ds, maximal_minors(phi).values) == GaussianRational(1));

  GMatrix sq{{2, 1}, {1, 1}};
  REQUIRE(delta_left_inverse_from_psi(inverse(sq), sq) == std::vector<GaussianRational>{GaussianRational(1) / det_cofactor(sq)});

  std::mt19937 rng(21);
  for (int t = 0; t < 20; ++t) {
    GMatrix u = random_unimodular<GaussianRational>(rng, 4, [](std::mt19937& g) { return small_gaussian(g); });
    GMatrix p = u.submatrix(GMatrix::range(4), GMatrix::range(3));
    GMatrix ps = inverse(u).submatrix(GMatrix::range(3), GMatrix::range(4));
    REQUIRE(dot(delta_left_inverse_from_psi(ps, p), maximal_minors(p).values) == GaussianRational(1));
  }
  REQUIRE_THROWS_AS(delta_left_inverse_from_psi(GMatrix{{0, 1, 0}, {1, 0, 0}}, GMatrix{{1, 0}, {1, 1}, {0, 0}}), Error);
}

TEST_CASE("general left inverse from a certificate", "[exact-linalg]") {
  GMatrix block{{1, 0}, {0, 1}, {0, 0}};
  REQUIRE((left_inverse_general(block, {1, 0, 0}) * block).is_identity());
  GMatrix phi = example_3x2();
  GMatrix psi = left_inverse_general(phi, {0, 0, GaussianRational(Rational(-1, 2))});
  REQUIRE((psi * phi).is_identity());
  GMatrix sq{{2, gi(0, 1)}, {1, 3}};
  REQUIRE(left_inverse_general(sq, {GaussianRational(1) / det_cofactor(sq)}) == inverse(sq));
  REQUIRE_THROWS_AS(left_inverse_general(phi, {1, 1, 1}), Error);
}

TEST_CASE("corank-one left inverse", "[exact-linalg]") {
  GMatrix phi = example_3x2();
  REQUIRE(omitted_row_minors(phi) == std::vector<GaussianRational>{-2, 3, 1});
  REQUIRE((left_inverse_corank1(phi, {0, 0, 1}) * phi).is_identity());
  // n = 2: the omitted-row minors of [1, 0]^T are (0, 1), so the certificate is (0, 1).
  GMatrix col{{1}, {0}};
  REQUIRE(left_inverse_corank1(col, {0, 1}) == GMatrix{{1, 0}});
  REQUIRE_THROWS_AS(left_inverse_corank1(col, {1, 0}), Error);
}

TEST_CASE("corank-one left inverse over polynomials, certificate from a Laplace expansion", "[exact-linalg]") {
  std::mt19937 rng(22);
  for (int t = 0; t < 10; ++t) {
    const size_t n = 5;
    PolyMatrix u = random_unimodular<GPoly>(rng, n, [](std::mt19937& g) { return small_poly(g, 1); });
    PolyMatrix phi = u.submatrix(PolyMatrix::range(n), PolyMatrix::range(n - 1));
    // det u = 1 = sum_p (-1)^(p + n - 1) u(p, n-1) det(phi without row p)
    std::vector<GPoly> cert;
    for (size_t p = 0; p < n; ++p) cert.push_back((p + n - 1) % 2 == 0 ? u(p, n - 1) : -u(p, n - 1));
    PolyMatrix psi = left_inverse_corank1(phi, cert);
    REQUIRE((psi * phi).is_identity());
  }
}

TEST_CASE("invertible completion", "[exact-linalg]") {
  GMatrix phi = example_3x2();
  GMatrix psi{{1, 0, 0}, {0, 1, 0}};
  Completion<GaussianRational> c = complete(phi, psi);
  REQUIRE(c.n_col == std::vector<GaussianRational>{0, 0, 1});
  REQUIRE(c.n_row == std::vector<GaussianRational>{-2, -3, 1});
  REQUIRE((c.psi_e * c.phi_e).is_identity());
  REQUIRE((c.phi_e * c.psi_e).is_identity());
  REQUIRE(det_cofactor(c.phi_e) == GaussianRational(1));

  Completion<GaussianRational> c2 = complete(GMatrix{{1}, {0}}, GMatrix{{1, 0}});
  REQUIRE(c2.phi_e == GMatrix{{1, 0}, {0, -1}});
  REQUIRE(det_cofactor(c2.phi_e) == GaussianRational(-1));
  REQUIRE_THROWS_AS(complete(phi, GMatrix{{0, 1, 0}, {1, 0, 0}}), Error);
}

TEST_CASE("one-sided diagnosis", "[exact-linalg]") {
  GMatrix block{{1, 0}, {0, 1}, {0, 0}};
  auto d = one_sided_diagnose<GaussianRational>(block, Side::kLeft, field_bezout<GaussianRational>);
  REQUIRE(d.status == BezoutStatus::kSolved);
  REQUIRE(d.certificate == std::vector<GaussianRational>{1, 0, 0});
  REQUIRE((*d.inverse * block).is_identity());

  auto right = one_sided_diagnose<GaussianRational>(block.transpose(), Side::kRight, field_bezout<GaussianRational>);
  REQUIRE((block.transpose() * *right.inverse).is_identity());

  auto none = one_sided_diagnose<GaussianRational>(GMatrix{{1, 2}, {2, 4}, {3, 6}}, Side::kLeft,
                                                   field_bezout<GaussianRational>);
  REQUIRE(none.status == BezoutStatus::kNoSolution);

  // Rational entries whose minors share the real zero xi = 1.
  RationalFunction z(GPoly{-1, 1}, GPoly{GaussianRational::i(), 1});
  RFMatrix phi{{z, 0}, {0, 1}, {0, z}};
  auto rf = one_sided_diagnose<RationalFunction>(phi, Side::kLeft, corona_bezout_solver(Algebra::kHPlus));
  REQUIRE(rf.status == BezoutStatus::kNoSolution);
  REQUIRE(rf.witness.find("1") != std::string::npos);
}
