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

#include <random>

#include "support.hpp"

using namespace whfactor;
using namespace whfactor::testing;

namespace {

const GaussianRational kI = GaussianRational::i();

RationalFunction bezout_sum(const std::vector<RationalFunction>& g, const std::vector<RationalFunction>& h) {
  RationalFunction total;
  for (size_t j = 0; j < h.size(); ++j) total += g[j] * h[j];
  return total;
}

APPoly ap(std::initializer_list<std::pair<Rational, GaussianRational>> terms) {
  APPoly p;
  for (const auto& [l, c] : terms) p.add_term(l, c);
  return p;
}

}  // namespace

TEST_CASE("H+ corona: worked example", "[corona]") {
  std::vector<RationalFunction> h{from_roots(1, {kI}, {-kI}), from_roots(1, {}, {-kI})};
  RationalCorona c = corona_solve_hplus(h);
  REQUIRE(c.verdict == CoronaVerdict::kCertificate);
  REQUIRE(c.algebra == Algebra::kHPlus);
  REQUIRE(c.solution == std::vector<RationalFunction>{RationalFunction(1), RationalFunction(2 * kI)});
  REQUIRE(bezout_sum(c.solution, h) == RationalFunction(1));
}

TEST_CASE("H corona: trivial tuple and membership errors", "[corona]") {
  RationalCorona c = corona_solve_hplus({RationalFunction(1)});
  REQUIRE(c.solution == std::vector<RationalFunction>{RationalFunction(1)});
  REQUIRE_THROWS_AS(corona_solve_hplus({from_roots(1, {}, {kI})}), Error);
  REQUIRE_THROWS_AS(corona_solve_hplus({RationalFunction::xi()}), Error);
  REQUIRE(corona_solve_hplus({}).witness.kind == CoronaWitness::Kind::kEmpty);
}

TEST_CASE("H corona: planted common real zero gives the witness", "[corona]") {
  std::vector<RationalFunction> h{from_roots(1, {1}, {-kI}), from_roots(1, {1}, {-3 * kI})};
  RationalCorona c = corona_solve_hplus(h);
  REQUIRE(c.verdict == CoronaVerdict::kFailure);
  REQUIRE(c.witness.kind == CoronaWitness::Kind::kPoint);
  REQUIRE(c.witness.point == GaussianRational(1));
  for (const auto& f : h) REQUIRE(f.eval(*c.witness.point).is_zero());
}

TEST_CASE("M+ succeeds where H+ fails on a common zero inside C+", "[corona]") {
  GaussianRational z2 = 2 * kI, z3 = 3 * kI;
  std::vector<RationalFunction> h{from_roots(1, {z2}, {-kI}), from_roots(1, {z2, z3}, {-kI, -kI})};
  RationalCorona hc = corona_solve_hplus(h);
  REQUIRE(hc.verdict == CoronaVerdict::kFailure);
  REQUIRE(hc.witness.point == z2);

  RationalCorona mc = corona_solve_mplus(h);
  REQUIRE(mc.verdict == CoronaVerdict::kCertificate);
  REQUIRE(mc.algebra == Algebra::kMPlus);
  REQUIRE(bezout_sum(mc.solution, h) == RationalFunction(1));
  for (const auto& g : mc.solution) REQUIRE(g.bounded_on_line());
  REQUIRE(mc.decomposition.has_value());
  const MDecomposition& d = *mc.decomposition;
  REQUIRE(d.r.invertible_on_line());
  for (size_t j = 0; j < h.size(); ++j) {
    REQUIRE(d.r * d.g[j] == h[j]);
    REQUIRE(d.g[j].in_h_plus());
  }
  REQUIRE(corona_solve_hplus(d.g).verdict == CoronaVerdict::kCertificate);
  REQUIRE(d.canonical.has_value());
  RationalFunction rebuilt = d.canonical->minus_part * d.canonical->plus_part;
  RationalFunction rp = RationalFunction::r();
  for (int k = 0; k < std::abs(d.canonical->power); ++k) rebuilt = rebuilt * (d.canonical->power > 0 ? rp : rp.inverse());
  REQUIRE(rebuilt == d.r);
}

TEST_CASE("M corona: bounded second entry and the point at infinity", "[corona]") {
  std::vector<RationalFunction> h{RationalFunction(1), from_roots(3, {2}, {kI})};
  RationalCorona c = corona_solve_mplus(h);
  REQUIRE(c.verdict == CoronaVerdict::kCertificate);
  REQUIRE(bezout_sum(c.solution, h) == RationalFunction(1));

  std::vector<RationalFunction> vanish{from_roots(1, {}, {-kI}), from_roots(1, {}, {-2 * kI})};
  RationalCorona inf = corona_solve_mplus(vanish);
  REQUIRE(inf.verdict == CoronaVerdict::kFailure);
  REQUIRE(inf.witness.kind == CoronaWitness::Kind::kInfinity);
  REQUIRE(corona_solve_hplus(vanish).witness.kind == CoronaWitness::Kind::kInfinity);
  REQUIRE_THROWS_AS(corona_solve_mplus({from_roots(1, {}, {1})}), Error);
}

TEST_CASE("H corona on random tuples, both half planes", "[corona][random]") {
  std::mt19937 rng(31);
  for (bool plus : {true, false}) {
    int solved = 0;
    for (int t = 0; t < 60; ++t) {
      std::vector<RationalFunction> h;
      int len = uniform_int(rng, 2, 3);
      for (int j = 0; j < len; ++j) h.push_back(random_h(rng, plus, 2));
      RationalCorona c = corona_solve_hplus(h, plus);
      if (c.verdict == CoronaVerdict::kFailure) {
        REQUIRE(c.witness.kind != CoronaWitness::Kind::kNone);
        continue;
      }
      ++solved;
      REQUIRE(bezout_sum(c.solution, h) == RationalFunction(1));
      for (const auto& g : c.solution) REQUIRE(g.in_h(plus));
    }
    REQUIRE(solved > 40);
  }
}

TEST_CASE("H corona on random tuples with a planted common zero", "[corona][random]") {
  std::mt19937 rng(32);
  for (int t = 0; t < 40; ++t) {
    bool plus = t % 2 == 0;
    GaussianRational z = point_in(rng, t % 3 == 0 ? HalfPlane::kReal : (plus ? HalfPlane::kUpper : HalfPlane::kLower));
    RationalFunction factor = from_roots(1, {z}, {plus ? -kI : kI});
    std::vector<RationalFunction> h;
    for (int j = 0; j < 3; ++j) h.push_back(random_h(rng, plus, 2) * factor);
    RationalCorona c = corona_solve_hplus(h, plus);
    REQUIRE(c.verdict == CoronaVerdict::kFailure);
    REQUIRE(c.witness.point.has_value());
    for (const auto& f : h) REQUIRE(f.eval(*c.witness.point).is_zero());
    // Off the line the M level removes the zero.
    if (classify_point(z) != HalfPlane::kReal) {
      RationalCorona m = corona_solve_mplus(h, plus);
      if (m.verdict == CoronaVerdict::kCertificate) REQUIRE(bezout_sum(m.solution, h) == RationalFunction(1));
      for (size_t j = 0; m.decomposition && j < h.size(); ++j) REQUIRE(m.decomposition->r * m.decomposition->g[j] == h[j]);
    } else {
      REQUIRE(corona_solve_mplus(h, plus).verdict == CoronaVerdict::kFailure);
    }
  }
}

TEST_CASE("corona on minors agrees with one-sided diagnosis", "[corona][exact-linalg]") {
  std::mt19937 rng(33);
  for (int t = 0; t < 20; ++t) {
    RFMatrix phi(3, 2);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 2; ++j) phi(i, j) = random_h(rng, true, 1);
    if (t % 4 == 0)
      for (size_t j = 0; j < 2; ++j) phi(2, j) = RationalFunction(0), phi(1, j) = phi(0, j);
    auto diag = one_sided_diagnose<RationalFunction>(phi, Side::kLeft, corona_bezout_solver(Algebra::kHPlus));
    RationalCorona c = corona_solve_hplus(maximal_minors(phi).values);
    REQUIRE((diag.status == BezoutStatus::kSolved) == (c.verdict == CoronaVerdict::kCertificate));
    if (diag.inverse) REQUIRE((*diag.inverse * phi).is_identity());
  }
}

TEST_CASE("polynomial Bezout", "[corona]") {
  GPoly x = GPoly::x();
  auto ok = polynomial_bezout({x, x + GPoly(1)});
  REQUIRE(ok.status == BezoutStatus::kSolved);
  REQUIRE(ok.coefficients[0] * x + ok.coefficients[1] * (x + GPoly(1)) == GPoly(1));
  REQUIRE(polynomial_bezout({x * x, x}).status == BezoutStatus::kNoSolution);
}

TEST_CASE("AP corona examples", "[corona][ap]") {
  Rational q(1, 4);
  std::vector<APPoly> h{ap({{0, 1}, {1, q}}), APPoly::e(2)};
  APCorona c = corona_solve_ap(h);
  REQUIRE(c.verdict == CoronaVerdict::kCertificate);
  REQUIRE(c.approximate);
  REQUIRE(c.series_terms == 16);
  REQUIRE(*c.residual_bound == pow(q, 16));
  APPoly total = c.solution[0] * h[0] + c.solution[1] * h[1];
  REQUIRE(total - APPoly(1) == *c.residual);
  // residual is -(-e_1/4)^16
  REQUIRE(*c.residual == APPoly::e(16, -GaussianRational(pow(q, 16))));

  APCorona exact = corona_solve_ap({APPoly::e(0)});
  REQUIRE(exact.verdict == CoronaVerdict::kCertificate);
  REQUIRE_FALSE(exact.approximate);
  REQUIRE(exact.solution[0] == APPoly(1));

  APCorona shared = corona_solve_ap({APPoly::e(1), APPoly::e(2)});
  REQUIRE(shared.verdict == CoronaVerdict::kFailure);
  REQUIRE(shared.witness.kind == CoronaWitness::Kind::kCommonFactor);
  REQUIRE(*shared.witness.ap_shift == Rational(1));

  REQUIRE_THROWS_AS(corona_solve_ap({APPoly::e(1) + APPoly::e(-1)}), Error);
  REQUIRE(corona_solve_ap({APPoly::e(-1) + APPoly::e(-2)}, false).verdict == CoronaVerdict::kFailure);
  REQUIRE(corona_solve_ap({ap({{0, 1}, {1, 1}})}).verdict == CoronaVerdict::kUnresolved);
}

TEST_CASE("AP corona on random dominant tuples", "[corona][ap][random]") {
  std::mt19937 rng(34);
  for (int t = 0; t < 30; ++t) {
    APPoly tail;
    for (int k = 0; k < 2; ++k) tail.add_term(Rational(uniform_int(rng, 1, 6), 2), GaussianRational(Rational(uniform_int(rng, -2, 2), 9)));
    APPoly h0 = APPoly(3) + tail;
    std::vector<APPoly> h{h0, APPoly::e(Rational(uniform_int(rng, 0, 4)))};
    APCorona c = corona_solve_ap(h, true, 8);
    REQUIRE(c.verdict == CoronaVerdict::kCertificate);
    APPoly total = c.solution[0] * h[0] + c.solution[1] * h[1];
    if (c.approximate) {
      REQUIRE(total - APPoly(1) == *c.residual);
      REQUIRE(*c.residual_bound < Rational(1));
    } else {
      REQUIRE(total == APPoly(1));
    }
  }
}
