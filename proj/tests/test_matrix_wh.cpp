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

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace whfactor;
using namespace whfactor::testing;

namespace {

const GaussianRational kI = GaussianRational::i();

RationalFunction b_symbol() { return RationalFunction(GPoly(1), GPoly{1, 0, 1}); }

RFMatrix column(std::vector<RationalFunction> v) {
  RFMatrix m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

// Bounded on the line, poles on both sides.
RationalFunction random_mixed(std::mt19937& rng) {
  return from_roots(1, {}, {point_in(rng, HalfPlane::kUpper), point_in(rng, HalfPlane::kLower)}) *
         RationalFunction(small_poly(rng, 2));
}

// Unit lower times unit upper triangular, entries in H+ (plus) or H-.
RFMatrix random_h_unimodular(std::mt19937& rng, size_t n, bool plus) {
  return random_unimodular<RationalFunction>(rng, n, [plus](std::mt19937& g) { return random_h(g, plus, 1); });
}

bool all_pass(const VerificationReport& rep) { return rep.all_passed(); }

int index_sum(const WHFactorization& f) {
  int s = 0;
  for (int k : f.partial_indices) s += k;
  return s;
}

}  // namespace

TEST_CASE("row route: worked 2x2 example", "[matrix-wh]") {
  RationalFunction a = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{1, 0}, {a, r.inverse()}};
  WHFactorization f = factor_via_row(g, 1, column({1, 0}));
  ProjectionResult pa = riesz_project(a);
  REQUIRE(f.partial_indices == std::vector<int>{0, -1});
  REQUIRE(f.g_minus == RFMatrix{{1, 0}, {pa.minus_part, 1}});
  REQUIRE(f.g_plus == RFMatrix{{1, 0}, {r * pa.plus_part, 1}});
  REQUIRE(f.g_minus * d_matrix(f.partial_indices) * f.g_plus == g);
  REQUIRE(all_pass(verify_factorization(g, f)));
  REQUIRE(f.trace.route == "row");
}

TEST_CASE("row route: already factored and guarded cases", "[matrix-wh]") {
  RationalFunction r = RationalFunction::r();
  for (int k : {0, -1, -2}) {
    RFMatrix g = RFMatrix::diagonal({1, 1, pow(r, k)});
    RFMatrix phi{{1, 0}, {0, 1}, {0, 0}};
    WHFactorization f = factor_via_row(g, 2, phi);
    REQUIRE(f.partial_indices == std::vector<int>{0, 0, k});
    REQUIRE(f.g_minus * d_matrix(f.partial_indices) * f.g_plus == g);
    REQUIRE(f.g_minus == RFMatrix::identity(3));
    REQUIRE(f.g_plus == RFMatrix::identity(3));
  }
  RFMatrix g{{1, 0}, {0, r}};
  REQUIRE_THROWS_AS(factor_via_row(g, 1, column({1, 0})), Error);
  try {
    factor_via_row(g, 1, column({1, 0}));
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::kHypothesisViolation);
  }
  // Wrong right inverse.
  REQUIRE_THROWS_AS(factor_via_row(RFMatrix{{1, 0}, {0, r.inverse()}}, 1, column({2, 0})), Error);
}

TEST_CASE("row route with an omitted row other than the last", "[matrix-wh]") {
  RationalFunction a = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{a, r.inverse()}, {1, 0}};
  WHFactorization f = factor_via_row(g, 0, column({1, 0}));
  REQUIRE(f.g_minus * d_matrix(f.partial_indices) * f.g_plus == g);
  REQUIRE(all_pass(verify_factorization(g, f)));
  REQUIRE(index_sum(f) == winding_exact(determinant(g)));
}

TEST_CASE("column route: transpose of the worked example", "[matrix-wh]") {
  RationalFunction a = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{1, a}, {0, r}};
  RFMatrix psi{{1, 0}};
  WHFactorization f = factor_via_column(g, 1, psi);
  REQUIRE(f.partial_indices == std::vector<int>{0, 1});
  REQUIRE(f.g_minus * d_matrix(f.partial_indices) * f.g_plus == g);
  REQUIRE(all_pass(verify_factorization(g, f)));

  RFMatrix diag = RFMatrix::diagonal({1, r});
  WHFactorization d = factor_via_column(diag, 1, psi);
  REQUIRE(d.g_minus * d_matrix(d.partial_indices) * d.g_plus == diag);
  REQUIRE_THROWS_AS(factor_via_column(RFMatrix::diagonal({1, r.inverse()}), 1, psi), Error);
}

TEST_CASE("solution-pair route: worked 2x2 example", "[matrix-wh]") {
  RationalFunction b = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{1, b}, {0, r}};
  RFMatrix phi = column({1, 0});
  RFMatrix psi{{1, 0}};
  WHFactorization f = factor_via_rh(g, phi, phi, psi, psi);
  ProjectionResult pb = riesz_project(-b);
  RationalFunction alpha_plus = pb.plus_part, alpha_minus = r.inverse() * pb.minus_part;
  REQUIRE(f.g_minus == RFMatrix{{1, alpha_minus}, {0, -1}});
  REQUIRE(f.g_plus == RFMatrix{{1, -alpha_plus}, {0, -1}});
  REQUIRE(f.partial_indices == std::vector<int>{0, 1});
  REQUIRE(f.g_minus * d_matrix(f.partial_indices) * f.g_plus == g);
  REQUIRE(all_pass(verify_factorization(g, f)));
  auto find = [&](const std::string& key) {
    for (const auto& e : f.trace.entries)
      if (e.key == key) return e.value;
    return std::string();
  };
  REQUIRE(find("det_g0_equals_det_g") == "true");
  REQUIRE(find("g0_block_triangular") == "true");
}

TEST_CASE("solution-pair route: identity and residual guard", "[matrix-wh]") {
  RFMatrix id = RFMatrix::identity(3);
  RFMatrix phi{{1, 0}, {0, 1}, {0, 0}};
  RFMatrix psi = phi.transpose();
  WHFactorization f = factor_via_rh(id, phi, phi, psi, psi);
  REQUIRE(f.partial_indices == std::vector<int>{0, 0, 0});
  REQUIRE(f.g_minus * f.g_plus == id);

  RFMatrix perturbed{{1, 0}, {0, 1}, {RationalFunction(GPoly(1), GPoly{kI, 1}), 0}};
  try {
    factor_via_rh(id, phi, perturbed, psi, psi);
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::kRhResidual);
  }
}

TEST_CASE("verification flags a tampered factorization", "[matrix-wh]") {
  RationalFunction a = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{1, 0}, {a, r.inverse()}};
  WHFactorization f = factor_via_row(g, 1, column({1, 0}));
  // Move a C+ zero into g_plus; the product is unchanged.
  RationalFunction s = from_roots(1, {2 * kI}, {-2 * kI});
  WHFactorization bad = f;
  bad.g_plus = RFMatrix::diagonal({1, s}) * f.g_plus;
  bad.g_minus = f.g_minus * RFMatrix::diagonal({1, s.inverse()});
  VerificationReport rep = verify_factorization(g, bad);
  REQUIRE_FALSE(rep.all_passed());
  bool product_ok = false, plus_inverse_ok = true;
  for (const auto& c : rep.checks) {
    if (c.name == "product") product_ok = c.passed;
    if (c.name == "g_plus_analytic_inverse") plus_inverse_ok = c.passed;
  }
  REQUIRE(product_ok);
  REQUIRE_FALSE(plus_inverse_ok);

  WHFactorization trivial{RFMatrix::identity(2), {0, 0}, RFMatrix::identity(2), true, {}};
  REQUIRE(verify_factorization(RFMatrix::identity(2), trivial).all_passed());
}

TEST_CASE("inverse operator in the canonical case", "[matrix-wh]") {
  RationalFunction b = b_symbol();
  RFMatrix g{{1, b}, {0, 1}};
  WHFactorization f = factor_via_rh(g, column({1, 0}), column({1, 0}), RFMatrix{{1, 0}}, RFMatrix{{1, 0}});
  REQUIRE(f.partial_indices == std::vector<int>{0, 0});
  RationalFunction e = from_roots(1, {}, {-kI});
  std::vector<RationalFunction> phi{0, e};
  std::vector<RationalFunction> x = apply_inverse(f, phi);
  REQUIRE(x[0] == -(riesz_project(b).plus_part * e));
  REQUIRE(x[1] == e);
  REQUIRE(apply_toeplitz(g, x) == phi);

  WHFactorization id{RFMatrix::identity(2), {0, 0}, RFMatrix::identity(2), true, {}};
  REQUIRE(apply_inverse(id, phi) == phi);
  WHFactorization nonzero{RFMatrix::identity(2), {0, -1}, RFMatrix::identity(2), true, {}};
  try {
    apply_inverse(nonzero, phi);
    FAIL("expected an error");
  } catch (const Error& err) {
    REQUIRE(err.code() == ErrorCode::kIndexNonzero);
  }
  REQUIRE_THROWS_AS(apply_inverse(id, {0, from_roots(1, {}, {kI})}), Error);
}

TEST_CASE("row route on random 3x3 symbols", "[matrix-wh][random]") {
  std::mt19937 rng(51);
  const size_t n = 3;
  for (int t = 0; t < 15; ++t) {
    RFMatrix w = random_h_unimodular(rng, n, true);
    RFMatrix w_inv = inverse(w);
    RationalFunction s = expand(random_symbol_with_index(rng, -uniform_int(rng, 0, 2)));
    RFMatrix g = w;
    for (size_t j = 0; j < n; ++j) g(n - 1, j) = s * w(n - 1, j);
    for (size_t i = 0; i + 1 < n; ++i) {
      RationalFunction t_i = random_mixed(rng);
      for (size_t j = 0; j < n; ++j) g(n - 1, j) += t_i * w(i, j);
    }
    REQUIRE(determinant(g) == s);
    RFMatrix phi = w_inv.submatrix(RFMatrix::range(n), RFMatrix::range(n - 1));
    WHFactorization f = factor_via_row(g, n - 1, phi);
    REQUIRE(all_pass(verify_factorization(g, f)));
    REQUIRE(index_sum(f) == winding_exact(s));
  }
}

TEST_CASE("column route on random 3x3 symbols", "[matrix-wh][random]") {
  std::mt19937 rng(52);
  const size_t n = 3;
  for (int t = 0; t < 15; ++t) {
    RFMatrix w = random_h_unimodular(rng, n, false);
    RFMatrix w_inv = inverse(w);
    RationalFunction s = expand(random_symbol_with_index(rng, uniform_int(rng, 0, 2)));
    RFMatrix g = w;
    for (size_t i = 0; i < n; ++i) g(i, n - 1) = w(i, n - 1) * s;
    for (size_t j = 0; j + 1 < n; ++j) {
      RationalFunction t_j = random_mixed(rng);
      for (size_t i = 0; i < n; ++i) g(i, n - 1) += w(i, j) * t_j;
    }
    RFMatrix psi = w_inv.submatrix(RFMatrix::range(n - 1), RFMatrix::range(n));
    WHFactorization f = factor_via_column(g, n - 1, psi);
    REQUIRE(all_pass(verify_factorization(g, f)));
    REQUIRE(index_sum(f) == winding_exact(s));
  }
}

TEST_CASE("solution-pair route on random symbols", "[matrix-wh][random]") {
  std::mt19937 rng(53);
  for (int t = 0; t < 15; ++t) {
    const size_t n = 2 + t % 2;
    RFMatrix wm = random_h_unimodular(rng, n, false), wp = random_h_unimodular(rng, n, true);
    RationalFunction s = expand(random_symbol_with_index(rng, uniform_int(rng, 0, 2)));
    std::vector<RationalFunction> d(n, RationalFunction(1));
    d[n - 1] = s;
    RFMatrix g = wm * RFMatrix::diagonal(d) * wp;
    RFMatrix phi_plus = inverse(wp).submatrix(RFMatrix::range(n), RFMatrix::range(n - 1));
    RFMatrix phi_minus = g * phi_plus;
    RFMatrix psi_plus = wp.submatrix(RFMatrix::range(n - 1), RFMatrix::range(n));
    RFMatrix psi_minus = inverse(wm).submatrix(RFMatrix::range(n - 1), RFMatrix::range(n));
    WHFactorization f = factor_via_rh(g, phi_plus, phi_minus, psi_plus, psi_minus);
    REQUIRE(all_pass(verify_factorization(g, f)));
    REQUIRE(index_sum(f) == winding_exact(s));
  }
}

TEST_CASE("row and solution-pair routes agree on index multisets", "[matrix-wh][random]") {
  std::mt19937 rng(54);
  const size_t n = 3;
  for (int t = 0; t < 8; ++t) {
    RFMatrix wp = random_h_unimodular(rng, n, true);
    RationalFunction s = expand(random_symbol_with_index(rng, 0));
    RFMatrix g = RFMatrix::diagonal({1, 1, s}) * wp;
    RFMatrix phi_plus = inverse(wp).submatrix(RFMatrix::range(n), RFMatrix::range(n - 1));
    RFMatrix phi_minus = g * phi_plus;
    RFMatrix psi_plus = wp.submatrix(RFMatrix::range(n - 1), RFMatrix::range(n));
    RFMatrix psi_minus = phi_minus.transpose();
    WHFactorization row = factor_via_row(g, n - 1, phi_plus);
    WHFactorization rh = factor_via_rh(g, phi_plus, phi_minus, psi_plus, psi_minus);
    std::vector<int> a = row.partial_indices, b = rh.partial_indices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
    REQUIRE(all_pass(verify_factorization(g, row)));
    REQUIRE(all_pass(verify_factorization(g, rh)));
  }
}

TEST_CASE("inverse operator round trip on random canonical symbols", "[matrix-wh][random]") {
  std::mt19937 rng(55);
  for (int t = 0; t < 10; ++t) {
    const size_t n = 2;
    RFMatrix wm = random_h_unimodular(rng, n, false), wp = random_h_unimodular(rng, n, true);
    RFMatrix g = wm * wp;
    RFMatrix phi_plus = inverse(wp).submatrix(RFMatrix::range(n), RFMatrix::range(n - 1));
    RFMatrix phi_minus = g * phi_plus;
    RFMatrix psi_plus = wp.submatrix(RFMatrix::range(n - 1), RFMatrix::range(n));
    RFMatrix psi_minus = inverse(wm).submatrix(RFMatrix::range(n - 1), RFMatrix::range(n));
    WHFactorization f = factor_via_rh(g, phi_plus, phi_minus, psi_plus, psi_minus);
    std::vector<RationalFunction> phi;
    for (size_t i = 0; i < n; ++i) phi.push_back(from_roots(nonzero_gaussian(rng), {}, {point_in(rng, HalfPlane::kLower)}));
    REQUIRE(apply_toeplitz(g, apply_inverse(f, phi)) == phi);
  }
}
