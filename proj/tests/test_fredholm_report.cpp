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

#include <optional>
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

template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("kernel and cokernel from partial indices", "[fredholm-report]") {
  FredholmReport a = report_from_indices({0, 0, -2});
  REQUIRE(*a.dim_ker == 2);
  REQUIRE(*a.dim_coker == 0);
  REQUIRE(*a.index == 2);
  REQUIRE(a.coburn == Coburn::kCokerZero);

  FredholmReport z = report_from_indices({0, 0, 0});
  REQUIRE(z.invertible == Tristate::kYes);
  REQUIRE(*z.dim_ker == 0);
  REQUIRE(z.coburn == Coburn::kBoth);

  FredholmReport m = report_from_indices({1, -1});
  REQUIRE(m.fredholm == Tristate::kYes);
  REQUIRE(m.invertible == Tristate::kNo);
  REQUIRE(*m.dim_ker == 1);
  REQUIRE(*m.dim_coker == 1);
  REQUIRE(*m.index == 0);
  REQUIRE(m.coburn == Coburn::kNeither);
}

TEST_CASE("index arithmetic on random index lists", "[fredholm-report][random]") {
  std::mt19937 rng(61);
  for (int t = 0; t < 500; ++t) {
    std::vector<int> k(uniform_int(rng, 1, 5));
    int sum = 0;
    bool has_pos = false, has_neg = false;
    for (auto& v : k) {
      v = uniform_int(rng, -3, 3);
      sum += v;
      has_pos |= v > 0;
      has_neg |= v < 0;
    }
    FredholmReport rep = report_from_indices(k);
    REQUIRE(*rep.dim_ker - *rep.dim_coker == -sum);
    REQUIRE(*rep.index == -sum);
    REQUIRE((*rep.dim_ker * *rep.dim_coker == 0) == !(has_pos && has_neg));
  }
}

TEST_CASE("classification from an H-level row certificate", "[fredholm-report]") {
  RationalFunction a = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{1, 0}, {a, r.inverse()}};
  StructureCertificate cert;
  cert.kind = StructureKind::kRowSubmatrix;
  cert.level = CertificateLevel::kH;
  cert.omitted = 1;
  cert.inverse = column({1, 0});
  FredholmReport rep = classify(g, cert);
  REQUIRE(rep.equivalence == Equivalence::kStrictly);
  REQUIRE(rep.fredholm == Tristate::kYes);
  FredholmReport scalar = report_from_indices({winding_exact(determinant(g))});
  REQUIRE(rep.dim_ker == scalar.dim_ker);
  REQUIRE(rep.dim_coker == scalar.dim_coker);
  REQUIRE(*rep.dim_ker == 1);
  REQUIRE(*rep.dim_coker == 0);
  REQUIRE((*rep.dim_ker == 0 || *rep.dim_coker == 0));

  cert.inverse = column({2, 0});
  REQUIRE(code_of([&] { classify(g, cert); }) == ErrorCode::kCertificateInvalid);
}

TEST_CASE("classification from an M-level certificate is only near", "[fredholm-report]") {
  RationalFunction a = b_symbol(), r = RationalFunction::r();
  RationalFunction s = from_roots(1, {2 * kI}, {-kI});
  RFMatrix g{{s, 0}, {a, r.inverse()}};
  StructureCertificate cert;
  cert.kind = StructureKind::kRowSubmatrix;
  cert.level = CertificateLevel::kM;
  cert.omitted = 1;
  cert.inverse = column({s.inverse(), 0});
  FredholmReport rep = classify(g, cert);
  REQUIRE(rep.equivalence == Equivalence::kNearly);
  REQUIRE_FALSE(rep.dim_ker.has_value());
  REQUIRE_FALSE(rep.dim_coker.has_value());
  cert.level = CertificateLevel::kH;
  REQUIRE(code_of([&] { classify(g, cert); }) == ErrorCode::kCertificateInvalid);
}

TEST_CASE("classification from column and solution-pair certificates", "[fredholm-report]") {
  RationalFunction b = b_symbol(), r = RationalFunction::r();
  RFMatrix g{{1, b}, {0, r}};
  StructureCertificate col;
  col.kind = StructureKind::kColumnSubmatrix;
  col.omitted = 1;
  col.inverse = RFMatrix{{1, 0}};
  FredholmReport c = classify(g, col);
  REQUIRE(c.equivalence == Equivalence::kStrictly);
  REQUIRE(*c.dim_coker == 1);
  REQUIRE(*c.dim_ker == 0);
  REQUIRE(c.coburn == Coburn::kKerZero);

  StructureCertificate rh;
  rh.kind = StructureKind::kSolutionPair;
  rh.phi_plus = rh.phi_minus = column({1, 0});
  rh.psi_plus = rh.psi_minus = RFMatrix{{1, 0}};
  FredholmReport p = classify(g, rh);
  REQUIRE(p.equivalence == Equivalence::kStrictly);
  REQUIRE(p.index == c.index);
  // Cross-check against the partial indices of an explicit factorization.
  WHFactorization f = factor_via_rh(g, rh.phi_plus, rh.phi_minus, rh.psi_plus, rh.psi_minus);
  FredholmReport from_f = report_from_indices(f.partial_indices);
  REQUIRE(from_f.dim_ker == p.dim_ker);
  REQUIRE(from_f.dim_coker == p.dim_coker);

  rh.phi_minus = column({2, 0});
  REQUIRE(code_of([&] { classify(g, rh); }) == ErrorCode::kCertificateInvalid);
}

TEST_CASE("strict copy rule on random row-structured symbols", "[fredholm-report][random]") {
  std::mt19937 rng(62);
  const size_t n = 3;
  for (int t = 0; t < 10; ++t) {
    RFMatrix w = random_unimodular<RationalFunction>(rng, n, [](std::mt19937& g) { return random_h(g, true, 1); });
    RationalFunction s = expand(random_symbol_with_index(rng, uniform_int(rng, -2, 2)));
    RFMatrix g = w;
    for (size_t j = 0; j < n; ++j) g(n - 1, j) = s * w(n - 1, j);
    StructureCertificate cert;
    cert.omitted = n - 1;
    cert.inverse = inverse(w).submatrix(RFMatrix::range(n), RFMatrix::range(n - 1));
    FredholmReport rep = classify(g, cert);
    FredholmReport scalar = report_from_indices({winding_exact(s)});
    REQUIRE(rep.equivalence == Equivalence::kStrictly);
    REQUIRE(rep.dim_ker == scalar.dim_ker);
    REQUIRE(rep.dim_coker == scalar.dim_coker);
    REQUIRE((*rep.dim_ker == 0 || *rep.dim_coker == 0));
  }
}

TEST_CASE("unitary symbols with constant determinant", "[fredholm-report]") {
  RationalFunction r = RationalFunction::r();
  RFMatrix g = RFMatrix::diagonal({r, r.inverse()});
  FredholmReport rep = special_unitary(g, GaussianRational(1));
  REQUIRE(rep.fredholm == Tristate::kYes);
  REQUIRE(*rep.partial_indices == std::vector<int>{1, -1});
  REQUIRE(*rep.dim_ker == 1);
  REQUIRE(*rep.dim_coker == 1);
  REQUIRE(rep.invertible == Tristate::kNo);
  // per-entry scalar factorizations
  REQUIRE(wh_factor_scalar(r).k == 1);
  REQUIRE(wh_factor_scalar(r.inverse()).k == -1);

  FredholmReport id = special_unitary(RFMatrix::identity(2));
  REQUIRE(id.invertible == Tristate::kYes);
  REQUIRE(code_of([&] { special_unitary(RFMatrix::diagonal({r, r})); }) == ErrorCode::kHypothesisViolation);
  REQUIRE(code_of([&] { special_unitary(RFMatrix::diagonal({2, 1})); }) == ErrorCode::kNotUnitary);
}

TEST_CASE("orthogonal symbols with constant determinant", "[fredholm-report]") {
  RationalFunction den(GPoly{1, 0, 1});
  RationalFunction c = RationalFunction(GPoly{-1, 0, 1}) / den, s = RationalFunction(GPoly{0, 2}) / den;
  REQUIRE(c * c + s * s == RationalFunction(1));
  RFMatrix g{{c, s}, {-s, c}};
  FredholmReport rep = special_orthogonal(g);
  REQUIRE(rep.fredholm == Tristate::kYes);
  REQUIRE(*rep.index == 0);
  REQUIRE(winding_numeric(determinant(g)) == 0);

  REQUIRE(special_orthogonal(RFMatrix::identity(3)).invertible == Tristate::kYes);

  RationalFunction z = RationalFunction(GPoly{-1, 1}) / RationalFunction(GPoly{kI, 1});
  RFMatrix planted{{c, s}, {-s * z, c * z}};
  try {
    special_orthogonal(planted);
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::kHypothesisViolation);
    REQUIRE(std::string(e.what()).find("xi = 1") != std::string::npos);
  }
  REQUIRE(code_of([&] { special_orthogonal(RFMatrix{{1, 1}, {0, 1}}); }) == ErrorCode::kNotOrthogonal);
}

TEST_CASE("symbols continuous except on one line", "[fredholm-report]") {
  RationalFunction r = RationalFunction::r();
  MixedMatrix rational{{MixedSymbol(r), 0}, {0, 1}};
  FredholmReport a = continuous_except_line(rational);
  REQUIRE(a.equivalence == Equivalence::kNearly);
  REQUIRE(a.fredholm == Tristate::kYes);
  REQUIRE(*a.det_report->index == -1);
  REQUIRE_FALSE(a.index.has_value());

  MixedMatrix m{{1, 0}, {MixedSymbol::term(Rational(1, 2), RationalFunction(1)), MixedSymbol(r)}};
  FredholmReport b = continuous_except_line(m);
  REQUIRE(b.equivalence == Equivalence::kNearly);
  REQUIRE(b.fredholm == Tristate::kYes);
  REQUIRE(*b.det_report->index == -1);

  MixedMatrix mixed{{1, 0}, {MixedSymbol::term(Rational(1, 2), RationalFunction(1)), MixedSymbol::term(1, r)}};
  FredholmReport u = continuous_except_line(mixed);
  REQUIRE(u.equivalence == Equivalence::kNearly);
  REQUIRE(u.fredholm == Tristate::kUnknown);

  MixedMatrix ap{{1, 0}, {0, MixedSymbol::term(1, RationalFunction(1))}};
  REQUIRE(continuous_except_line(ap).fredholm == Tristate::kNo);

  MixedSymbol e = MixedSymbol::term(1, RationalFunction(1));
  MixedMatrix bad{{e, e, 0}, {e, e, 0}, {0, 0, 1}};
  REQUIRE(code_of([&] { continuous_except_line(bad); }) == ErrorCode::kShapeViolation);
}
