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


#ifndef WHFACTOR_JSON_IO_HPP_
#define WHFACTOR_JSON_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "whfactor/ap_factor.hpp"
#include "whfactor/fredholm.hpp"
#include "whfactor/mixed_symbol.hpp"

// JSON encodings for the exact types. Objects use std::map keys, so dumps are
// sorted and byte-stable.
//   Rational          [p, q] | p | "p/q"        (p, q may be strings for big values)
//   GaussianRational  {"re": Rational, "im": Rational} | Rational
//   Polynomial        [c0, c1, ...]               ascending
//   RationalFunction  {"num": poly, "den": poly} | poly | GaussianRational
//   FactoredRational  {"lead": G, "factors": [{"root": G, "mult": k}]}
//   APPoly            [{"freq": Rational, "coeff": G}] | GaussianRational
//   MixedSymbol       [{"freq": Rational, "coeff": RationalFunction}] | RationalFunction

namespace whfactor::json_io {

using Json = nlohmann::json;

[[noreturn]] inline void parse_fail(const std::string& what) { fail(ErrorCode::kParse, what); }

inline mpz_class to_mpz(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) parse_fail("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  parse_fail("expected an integer, got " + j.dump());
}

inline Json from_mpz(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) parse_fail("rational must be [p, q]");
    mpz_class q = to_mpz(j[1]);
    if (q == 0) fail(ErrorCode::kZeroDenominator, "rational with zero denominator");
    return Rational(to_mpz(j[0]), q);
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      return Rational::parse(s);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kZeroDenominator) throw;
      parse_fail("bad rational '" + s + "'");
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(to_mpz(j));
  parse_fail("expected a rational, got " + j.dump());
}

inline Json to_json(const Rational& q) { return Json::array({from_mpz(q.num()), from_mpz(q.den())}); }

inline bool is_gaussian_json(const Json& j) { return j.is_object() && (j.contains("re") || j.contains("im")); }

inline GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") parse_fail("unexpected key '" + k + "' in complex number");
    Rational re = j.contains("re") ? rational_from_json(j["re"]) : Rational(0);
    Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
    return {re, im};
  }
  return GaussianRational(rational_from_json(j));
}

inline Json to_json(const GaussianRational& z) { return Json{{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

inline GPoly poly_from_json(const Json& j) {
  if (!j.is_array()) return GPoly(gaussian_from_json(j));
  std::vector<GaussianRational> c;
  for (const auto& v : j) c.push_back(gaussian_from_json(v));
  return GPoly(std::move(c));
}

inline Json to_json(const GPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

inline RationalFunction rf_from_json(const Json& j) {
  if (j.is_object() && (j.contains("num") || j.contains("den"))) {
    if (!j.contains("num")) parse_fail("rational function without 'num'");
    GPoly num = poly_from_json(j["num"]);
    GPoly den = j.contains("den") ? poly_from_json(j["den"]) : GPoly(1);
    if (den.is_zero()) fail(ErrorCode::kZeroDenominator, "rational function with zero denominator");
    return RationalFunction(num, den);
  }
  if (j.is_array()) return RationalFunction(poly_from_json(j));
  return RationalFunction(gaussian_from_json(j));
}

inline Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline FactoredRational factored_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lead")) parse_fail("factored rational needs 'lead'");
  GaussianRational lead = gaussian_from_json(j["lead"]);
  if (lead.is_zero()) fail(ErrorCode::kZeroInput, "factored rational with zero lead");
  std::vector<std::pair<GaussianRational, int>> f;
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) parse_fail("'factors' must be an array");
    for (const auto& e : j["factors"]) {
      if (!e.is_object() || !e.contains("root")) parse_fail("factor needs 'root'");
      int mult = e.contains("mult") ? e["mult"].get<int>() : 1;
      f.emplace_back(gaussian_from_json(e["root"]), mult);
    }
  }
  return FactoredRational::exact(lead, f);
}

inline Json to_json(const FactoredRational& f) {
  Json factors = Json::array();
  for (const auto& r : f.factors()) {
    Json e{{"mult", r.mult}, {"side", half_plane_name(r.side)}};
    if (r.exact) {
      e["root"] = to_json(*r.exact);
    } else {
      e["approx"] = Json::array({static_cast<double>(r.approx.real()), static_cast<double>(r.approx.imag())});
    }
    factors.push_back(e);
  }
  return Json{{"lead", to_json(f.lead())}, {"factors", factors}};
}

inline APPoly ap_from_json(const Json& j) {
  if (!j.is_array()) return APPoly(gaussian_from_json(j));
  APPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("freq")) parse_fail("AP term needs 'freq'");
    p.add_term(rational_from_json(t["freq"]), t.contains("coeff") ? gaussian_from_json(t["coeff"]) : GaussianRational(1));
  }
  return p;
}

inline Json to_json(const APPoly& p) {
  Json a = Json::array();
  for (const auto& [lambda, c] : p.terms()) a.push_back(Json{{"freq", to_json(lambda)}, {"coeff", to_json(c)}});
  return a;
}

inline MixedSymbol mixed_from_json(const Json& j) {
  if (j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("freq")) {
    MixedSymbol m;
    for (const auto& t : j) {
      if (!t.is_object() || !t.contains("freq")) parse_fail("mixed term needs 'freq'");
      m.add_term(rational_from_json(t["freq"]), t.contains("coeff") ? rf_from_json(t["coeff"]) : RationalFunction(1));
    }
    return m;
  }
  return MixedSymbol(rf_from_json(j));
}

inline Json to_json(const MixedSymbol& m) {
  Json a = Json::array();
  for (const auto& [lambda, f] : m.terms()) a.push_back(Json{{"freq", to_json(lambda)}, {"coeff", to_json(f)}});
  return a;
}

template <class R, class F>
Matrix<R> matrix_from_json(const Json& j, F&& entry) {
  if (!j.is_array() || j.empty()) parse_fail("matrix must be a non-empty array of rows");
  size_t cols = 0;
  std::vector<std::vector<R>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) parse_fail("matrix row must be a non-empty array");
    if (rows.empty()) cols = row.size();
    if (row.size() != cols) fail(ErrorCode::kShapeMismatch, "matrix rows have different lengths");
    std::vector<R> r;
    for (const auto& v : row) r.push_back(entry(v));
    rows.push_back(std::move(r));
  }
  Matrix<R> m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  return m;
}

template <class R>
Json matrix_to_json(const Matrix<R>& m) {
  Json a = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    a.push_back(row);
  }
  return a;
}

inline RFMatrix rf_matrix(const Json& j) { return matrix_from_json<RationalFunction>(j, rf_from_json); }
inline GMatrix g_matrix(const Json& j) { return matrix_from_json<GaussianRational>(j, gaussian_from_json); }
inline PolyMatrix poly_matrix(const Json& j) { return matrix_from_json<GPoly>(j, poly_from_json); }
inline APMatrix ap_matrix(const Json& j) { return matrix_from_json<APPoly>(j, ap_from_json); }
inline MixedMatrix mixed_matrix(const Json& j) { return matrix_from_json<MixedSymbol>(j, mixed_from_json); }

template <class R, class F>
std::vector<R> vector_from_json(const Json& j, F&& entry) {
  if (!j.is_array()) parse_fail("expected an array");
  std::vector<R> v;
  for (const auto& e : j) v.push_back(entry(e));
  return v;
}

template <class R>
Json vector_to_json(const std::vector<R>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

// ---------------------------------------------------------------------------
// Results.
// ---------------------------------------------------------------------------

inline Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"checks", checks}, {"all_passed", r.all_passed()}};
}

inline Json to_json(const ConstructionTrace& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back(Json{{"key", e.key}, {"value", e.value}});
  return Json{{"route", t.route}, {"entries", entries}, {"corrections", t.corrections}};
}

inline Json to_json(const ScalarWH& s) {
  return Json{{"gamma_minus", to_json(s.gamma_minus)}, {"k", s.k}, {"gamma_plus", to_json(s.gamma_plus)}};
}

inline ScalarWH scalar_wh_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gamma_minus") || !j.contains("gamma_plus") || !j.contains("k"))
    parse_fail("scalar factorization needs gamma_minus, k, gamma_plus");
  return {factored_from_json(j["gamma_minus"]), j["k"].get<int>(), factored_from_json(j["gamma_plus"])};
}

inline Json to_json(const WHFactorization& f) {
  return Json{{"g_minus", matrix_to_json(f.g_minus)},
              {"partial_indices", f.partial_indices},
              {"g_plus", matrix_to_json(f.g_plus)},
              {"trace", to_json(f.trace)}};
}

inline WHFactorization wh_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g_minus") || !j.contains("g_plus") || !j.contains("partial_indices"))
    parse_fail("factorization needs g_minus, partial_indices, g_plus");
  WHFactorization f;
  f.g_minus = rf_matrix(j["g_minus"]);
  f.g_plus = rf_matrix(j["g_plus"]);
  f.partial_indices = j["partial_indices"].get<std::vector<int>>();
  return f;
}

inline Json to_json(const APFactorization& f) {
  return Json{{"g_minus", matrix_to_json(f.g_minus)},
              {"partial_ap_indices", vector_to_json(f.partial_ap_indices)},
              {"g_plus", matrix_to_json(f.g_plus)}};
}

inline APFactorization ap_factorization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g_minus") || !j.contains("g_plus") || !j.contains("partial_ap_indices"))
    parse_fail("AP factorization needs g_minus, partial_ap_indices, g_plus");
  APFactorization f;
  f.g_minus = ap_matrix(j["g_minus"]);
  f.g_plus = ap_matrix(j["g_plus"]);
  f.partial_ap_indices = vector_from_json<Rational>(j["partial_ap_indices"], rational_from_json);
  return f;
}

inline Json to_json(const FredholmReport& r) {
  Json j{{"fredholm", tristate_name(r.fredholm)},
         {"invertible", tristate_name(r.invertible)},
         {"equivalence", equivalence_name(r.equivalence)},
         {"coburn", coburn_name(r.coburn)},
         {"uniform_in_p", r.uniform_in_p},
         {"basis", r.basis},
         {"note", r.note},
         {"witness", r.witness},
         {"det_symbol", r.det_symbol}};
  auto opt = [&](const char* key, const std::optional<long>& v) { j[key] = v ? Json(*v) : Json(nullptr); };
  opt("dim_ker", r.dim_ker);
  opt("dim_coker", r.dim_coker);
  opt("index", r.index);
  j["partial_indices"] = r.partial_indices ? Json(*r.partial_indices) : Json(nullptr);
  Json hyp = Json::array();
  for (const auto& h : r.hypotheses) hyp.push_back(Json{{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
  j["hypotheses"] = hyp;
  j["det_report"] = r.det_report ? to_json(*r.det_report) : Json(nullptr);
  return j;
}

inline Json to_json(const CoronaWitness& w) {
  const char* kind = "none";
  switch (w.kind) {
    case CoronaWitness::Kind::kNone: kind = "none"; break;
    case CoronaWitness::Kind::kPoint: kind = "point"; break;
    case CoronaWitness::Kind::kInfinity: kind = "infinity"; break;
    case CoronaWitness::Kind::kCommonFactor: kind = "common_factor"; break;
    case CoronaWitness::Kind::kEmpty: kind = "empty"; break;
  }
  Json j{{"kind", kind}, {"description", w.description}};
  if (w.point) j["point"] = to_json(*w.point);
  if (w.kind == CoronaWitness::Kind::kPoint && !w.point)
    j["approx"] = Json::array({static_cast<double>(w.approx.real()), static_cast<double>(w.approx.imag())});
  if (w.common_factor.degree() > 0) j["common_factor"] = to_json(w.common_factor);
  if (w.ap_shift) j["ap_shift"] = to_json(*w.ap_shift);
  return j;
}

}  // namespace whfactor::json_io

#endif  // WHFACTOR_JSON_IO_HPP_
