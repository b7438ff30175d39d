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


#ifndef WHFACTOR_CLI_HPP_
#define WHFACTOR_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whfactor/json_io.hpp"

namespace whfactor::cli {

using json_io::Json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"minors",   "left-inverse", "right-inverse", "complete", "corona",
                                              "wh-scalar", "wh-matrix",   "ap-factor",     "report",   "verify",
                                              "winding",  "project",      "apply-inverse"};
  return names;
}

struct Options {
  std::string command;
  std::string input;
  std::string format = "json";
  std::optional<std::string> mode;
  std::optional<std::string> half;
  std::optional<std::string> level;
  std::optional<long double> tol;
  std::optional<int> grid;
  std::optional<long> omitted;
};

/// Failure of a mathematical hypothesis with a structured verdict (exit 1).
struct Verdict {
  Json body;
};

inline long double default_tolerance() {
  if (const char* env = std::getenv("WHFACTOR_TOL")) {
    char* end = nullptr;
    long double v = std::strtold(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) fail(ErrorCode::kParse, "WHFACTOR_TOL is not a positive number");
    return v;
  }
  return 1e-9L;
}

// Which flags each command accepts; anything else is rejected before computing.
inline void validate(const Options& o) {
  static const std::map<std::string, std::set<std::string>> allowed{
      {"minors", {}},
      {"left-inverse", {"half", "level"}},
      {"right-inverse", {"half", "level"}},
      {"complete", {}},
      {"corona", {"half", "level"}},
      {"wh-scalar", {"tol"}},
      {"wh-matrix", {"mode", "omitted", "tol"}},
      {"ap-factor", {"mode", "omitted"}},
      {"report", {"tol"}},
      {"verify", {}},
      {"winding", {"tol", "grid"}},
      {"project", {}},
      {"apply-inverse", {"mode", "omitted", "tol"}},
  };
  const auto& ok = allowed.at(o.command);
  auto check = [&](bool present, const char* name) {
    if (present && !ok.count(name))
      fail(ErrorCode::kParse, std::string("option --") + name + " does not apply to " + o.command);
  };
  check(o.mode.has_value(), "mode");
  check(o.half.has_value(), "half");
  check(o.level.has_value(), "level");
  check(o.tol.has_value(), "tol");
  check(o.grid.has_value(), "grid");
  check(o.omitted.has_value(), "omitted");
  if (o.mode) {
    std::set<std::string> modes = o.command == "ap-factor" ? std::set<std::string>{"row", "rh"}
                                                           : std::set<std::string>{"row", "col", "rh"};
    if (!modes.count(*o.mode)) fail(ErrorCode::kParse, "unsupported --mode " + *o.mode + " for " + o.command);
  }
  if (o.half && *o.half != "plus" && *o.half != "minus") fail(ErrorCode::kParse, "--half must be plus or minus");
  if (o.level && *o.level != "H" && *o.level != "M") fail(ErrorCode::kParse, "--level must be H or M");
  if (o.tol && !(*o.tol > 0)) fail(ErrorCode::kParse, "--tol must be positive");
  if (o.grid && *o.grid < 8) fail(ErrorCode::kParse, "--grid must be at least 8");
  if (o.omitted && *o.omitted < 0) fail(ErrorCode::kParse, "--omitted must be non-negative");
  if (o.format != "json" && o.format != "text") fail(ErrorCode::kParse, "--format must be json or text");
}

namespace detail {

inline const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) fail(ErrorCode::kParse, std::string("input is missing '") + key + "'");
  return doc.at(key);
}

inline std::string ring_of(const Json& doc, std::initializer_list<const char*> allowed) {
  const Json& r = field(doc, "ring");
  if (!r.is_string()) fail(ErrorCode::kParse, "'ring' must be a string");
  std::string ring = r.get<std::string>();
  for (const char* a : allowed)
    if (ring == a) return ring;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  fail(ErrorCode::kParse, "ring '" + ring + "' not supported here (expected " + list + ")");
}

inline std::string str_or(const Json& doc, const char* key, const std::optional<std::string>& flag,
                          const std::string& fallback) {
  if (flag) return *flag;
  if (doc.contains(key)) {
    if (!doc[key].is_string()) fail(ErrorCode::kParse, std::string("'") + key + "' must be a string");
    return doc[key].get<std::string>();
  }
  return fallback;
}

inline size_t omitted_index(const Json& doc, const Options& o, size_t n) {
  long v = static_cast<long>(n) - 1;
  if (o.omitted) {
    v = *o.omitted;
  } else if (doc.contains("omitted")) {
    if (!doc["omitted"].is_number_integer()) fail(ErrorCode::kParse, "'omitted' must be an integer");
    v = doc["omitted"].get<long>();
  }
  if (v < 0 || v >= static_cast<long>(n)) fail(ErrorCode::kParse, "omitted index out of range");
  return static_cast<size_t>(v);
}

inline Algebra algebra_for(const Json& doc, const Options& o) {
  bool plus = str_or(doc, "half", o.half, "plus") == "plus";
  bool h = str_or(doc, "level", o.level, "H") == "H";
  return h ? (plus ? Algebra::kHPlus : Algebra::kHMinus) : (plus ? Algebra::kMPlus : Algebra::kMMinus);
}

inline Json subset_labels(const std::vector<std::vector<size_t>>& subsets) {
  Json labels = Json::array();
  for (const auto& s : subsets) {
    std::string l = "{";
    for (size_t k = 0; k < s.size(); ++k) l += (k ? "," : "") + std::to_string(s[k]);
    labels.push_back(l + "}");
  }
  return labels;
}

inline Json failure(const std::string& command, const Error& e) {
  std::string code(error_code_name(e.code())), message = e.what();
  if (message.rfind(code + ": ", 0) == 0) message.erase(0, code.size() + 2);
  return Json{{"command", command}, {"status", "failure"}, {"error", Json{{"code", code}, {"message", message}}}};
}

inline Json check(const std::string& name, bool passed) {
  return Json{{"name", name}, {"passed", passed}, {"detail", passed ? "exact-zero residual" : "identity fails"}};
}

inline Json checks_block(const Json& checks) {
  bool all = true;
  for (const auto& c : checks) all = all && c["passed"].get<bool>();
  return Json{{"checks", checks}, {"all_passed", all}};
}

// Points of the closed real line where a rational symbol vanishes or blows up.
inline Json singular_points(const RationalFunction& f) {
  Json pts = Json::array();
  for (const GPoly* p : {&f.num(), &f.den()}) {
    if (p->degree() <= 0) continue;
    QPoly a = real_part(*p), b = imag_part(*p);
    QPoly common = b.is_zero() ? a.monic() : (a.is_zero() ? b.monic() : gcd(a, b));
    if (common.degree() <= 0) continue;
    GPoly c = to_gpoly(common);
    for (const auto& nr : numeric_roots(c)) {
      if (std::abs(nr.value.imag()) > 1e-12L) continue;
      std::optional<GaussianRational> z = snap_root(c, nr.value);
      if (z && z->is_real()) {
        pts.push_back(Json{{"point", json_io::to_json(*z)}, {"text", z->to_string()}});
      } else {
        pts.push_back(Json{{"approx", static_cast<double>(nr.value.real())}});
      }
    }
  }
  if (f.num().degree() != f.den().degree() && !f.is_zero()) pts.push_back(Json{{"point", "infinity"}, {"text", "infinity"}});
  return pts;
}

inline Json singular_points(const FactoredRational& f) {
  Json pts = Json::array();
  for (const auto& r : f.factors()) {
    if (r.side != HalfPlane::kReal) continue;
    if (r.exact) {
      pts.push_back(Json{{"point", json_io::to_json(*r.exact)}, {"text", r.exact->to_string()}});
    } else {
      pts.push_back(Json{{"approx", static_cast<double>(r.approx.real())}});
    }
  }
  if (!f.degree_balanced()) pts.push_back(Json{{"point", "infinity"}, {"text", "infinity"}});
  return pts;
}

// ---------------------------------------------------------------------------
// exact-linalg commands, generic over the coefficient ring.
// ---------------------------------------------------------------------------

template <class R>
Json minors_json(const Matrix<R>& phi) {
  if (phi.rows() < phi.cols()) fail(ErrorCode::kShapeMismatch, "expected a tall matrix (rows >= cols)");
  MinorVector<R> mv = maximal_minors(phi);
  Json subsets = Json::array();
  for (const auto& s : mv.subsets) subsets.push_back(s);
  return Json{{"subsets", subsets}, {"labels", subset_labels(mv.subsets)}, {"values", json_io::vector_to_json(mv.values)}};
}

template <class R>
Json one_sided_json(const std::string& command, const Matrix<R>& m, const Json& doc, const BezoutSolver<R>& solver,
                    const std::function<R(const Json&)>& entry) {
  const bool left = command == "left-inverse";
  Matrix<R> tall = left ? m : m.transpose();
  if (tall.rows() < tall.cols())
    fail(ErrorCode::kShapeMismatch, left ? "left inverse needs rows >= cols" : "right inverse needs cols >= rows");
  Json out;
  Matrix<R> inv;
  MinorVector<R> mv = maximal_minors(tall);
  if (doc.contains("certificate")) {
    std::vector<R> cert = json_io::vector_from_json<R>(doc["certificate"], entry);
    bool corank1 = tall.rows() == tall.cols() + 1 && tall.rows() >= 2;
    std::string order = doc.value("certificate_order", corank1 ? "omitted-row" : "lex-subset");
    if (order == "omitted-row") {
      if (!corank1) fail(ErrorCode::kParse, "omitted-row certificates need an n x (n-1) matrix");
      inv = left_inverse_corank1(tall, cert);
    } else if (order == "lex-subset") {
      inv = left_inverse_general(tall, cert);
    } else {
      fail(ErrorCode::kParse, "certificate_order must be omitted-row or lex-subset");
    }
    out["certificate"] = json_io::vector_to_json(cert);
    out["certificate_order"] = order;
  } else {
    OneSidedDiagnosis<R> d = one_sided_diagnose(tall, Side::kLeft, solver);
    if (d.status != BezoutStatus::kSolved) {
      Json v{{"command", command},
             {"status", d.status == BezoutStatus::kNoSolution ? "failure" : "unresolved"},
             {"witness", d.witness},
             {"minors", minors_json(tall)}};
      if (d.status == BezoutStatus::kNoSolution) throw Verdict{v};
      return v;
    }
    inv = *d.inverse;
    out["certificate"] = json_io::vector_to_json(d.certificate);
    out["certificate_order"] = "lex-subset";
  }
  Matrix<R> result = left ? inv : inv.transpose();
  bool identity = left ? (result * m).is_identity() : (m * result).is_identity();
  out["inverse"] = json_io::matrix_to_json(result);
  out["minors"] = minors_json(tall);
  out["verify"] = checks_block(Json::array({check(left ? "psi_phi_identity" : "phi_psi_identity", identity)}));
  out["status"] = "ok";
  return out;
}

template <class R>
Json complete_json(const Matrix<R>& phi, const Matrix<R>& psi) {
  Completion<R> c = complete(phi, psi);
  const size_t n = phi.rows();
  R sign = n % 2 == 1 ? ring_traits<R>::one() : -ring_traits<R>::one();
  Json checks = Json::array({check("psi_e_phi_e_identity", (c.psi_e * c.phi_e).is_identity()),
                             check("phi_e_psi_e_identity", (c.phi_e * c.psi_e).is_identity()),
                             check("det_phi_e", determinant(c.phi_e) == sign),
                             check("det_psi_e", determinant(c.psi_e) == sign)});
  return Json{{"phi_e", json_io::matrix_to_json(c.phi_e)},
              {"psi_e", json_io::matrix_to_json(c.psi_e)},
              {"det", json_io::to_json(c.det_value)},
              {"n_col", json_io::vector_to_json(c.n_col)},
              {"n_row", json_io::vector_to_json(c.n_row)},
              {"verify", checks_block(checks)},
              {"status", "ok"}};
}

template <class Fn>
Json with_ring(const std::string& ring, const Json& m, const BezoutSolver<RationalFunction>& rf_solver, Fn&& fn) {
  if (ring == "gaussian") return fn(json_io::g_matrix(m), BezoutSolver<GaussianRational>(field_bezout<GaussianRational>),
                                    std::function<GaussianRational(const Json&)>(json_io::gaussian_from_json));
  if (ring == "poly") return fn(json_io::poly_matrix(m), BezoutSolver<GPoly>(polynomial_bezout),
                                std::function<GPoly(const Json&)>(json_io::poly_from_json));
  return fn(json_io::rf_matrix(m), rf_solver, std::function<RationalFunction(const Json&)>(json_io::rf_from_json));
}

// ---------------------------------------------------------------------------
// Analytic commands.
// ---------------------------------------------------------------------------

inline Json corona_json(const Json& doc, const Options& o) {
  std::string ring = ring_of(doc, {"rational", "ap"});
  bool plus = str_or(doc, "half", o.half, "plus") == "plus";
  Json out;
  auto common = [&](const auto& c) {
    out["verdict"] = corona_verdict_name(c.verdict);
    out["algebra"] = algebra_name(c.algebra);
    out["witness"] = json_io::to_json(c.witness);
    out["approximate"] = c.approximate;
    out["note"] = c.note;
    if (c.verdict == CoronaVerdict::kCertificate) out["solution"] = json_io::vector_to_json(c.solution);
  };
  if (ring == "ap") {
    if (o.level) fail(ErrorCode::kParse, "--level does not apply to almost periodic tuples");
    std::vector<APPoly> h = json_io::vector_from_json<APPoly>(field(doc, "tuple"), json_io::ap_from_json);
    int terms = doc.value("series_terms", 16);
    if (terms < 1 || terms > 4096) fail(ErrorCode::kParse, "series_terms out of range");
    APCorona c = corona_solve_ap(h, plus, terms);
    common(c);
    if (c.verdict == CoronaVerdict::kCertificate) {
      APPoly total;
      for (size_t j = 0; j < h.size(); ++j) total += c.solution[j] * h[j];
      APPoly residual = total - APPoly(1);
      bool exact = residual.is_zero();
      out["series_terms"] = c.series_terms;
      out["residual"] = json_io::to_json(residual);
      if (c.residual_bound) out["residual_bound"] = json_io::to_json(*c.residual_bound);
      Json checks = Json::array();
      bool membership = true;
      for (const auto& g : c.solution) membership = membership && g.in_half(plus);
      checks.push_back(Json{{"name", "bezout_identity"},
                            {"passed", exact || (c.residual && *c.residual == residual)},
                            {"detail", exact ? "exact-zero residual" : "residual equals the reported series tail"}});
      checks.push_back(Json{{"name", "membership"}, {"passed", membership}, {"detail", ""}});
      out["verify"] = checks_block(checks);
    }
  } else {
    std::vector<RationalFunction> h = json_io::vector_from_json<RationalFunction>(field(doc, "tuple"), json_io::rf_from_json);
    bool h_level = str_or(doc, "level", o.level, "H") == "H";
    RationalCorona c = h_level ? corona_solve_hplus(h, plus) : corona_solve_mplus(h, plus, true);
    common(c);
    if (c.verdict == CoronaVerdict::kCertificate) {
      RationalFunction total;
      for (size_t j = 0; j < h.size(); ++j) total += c.solution[j] * h[j];
      bool membership = true;
      for (const auto& g : c.solution) membership = membership && (h_level ? g.in_h(plus) : g.bounded_on_line());
      out["verify"] = checks_block(Json::array({check("bezout_identity", total == RationalFunction(1)),
                                                Json{{"name", "membership"}, {"passed", membership}, {"detail", ""}}}));
    }
    if (c.decomposition) {
      Json d{{"r", json_io::to_json(c.decomposition->r)}, {"g", json_io::vector_to_json(c.decomposition->g)}};
      if (c.decomposition->canonical) {
        const auto& cf = *c.decomposition->canonical;
        d["canonical"] = Json{{"minus_part", json_io::to_json(cf.minus_part)},
                              {"power", cf.power},
                              {"plus_part", json_io::to_json(cf.plus_part)}};
      }
      out["decomposition"] = d;
    }
  }
  out["status"] = out["verdict"] == "failure" ? "failure" : "ok";
  if (out["verdict"] == "failure") {
    out["command"] = "corona";
    throw Verdict{out};
  }
  return out;
}

inline RationalFunction scalar_symbol(const Json& doc, const std::string& ring) {
  return ring == "factored" ? expand(json_io::factored_from_json(field(doc, "symbol")))
                            : json_io::rf_from_json(field(doc, "symbol"));
}

inline Json wh_scalar_json(const Json& doc, long double tol) {
  std::string ring = ring_of(doc, {"factored", "rational"});
  Json out{{"kind", "scalar-wh"}, {"ring", ring}, {"symbol", field(doc, "symbol")}};
  ScalarWH s;
  try {
    if (ring == "factored") {
      FactoredRational f = json_io::factored_from_json(doc["symbol"]);
      try {
        s = wh_factor_scalar(f);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSymbolSingularOnLine) throw;
        Json v = failure("wh-scalar", e);
        v["witness"] = singular_points(f);
        throw Verdict{v};
      }
    } else {
      RationalFunction f = json_io::rf_from_json(doc["symbol"]);
      if (f.is_zero()) fail(ErrorCode::kZeroInput, "symbol is zero");
      if (!f.invertible_on_line()) {
        Json v = failure("wh-scalar", Error(ErrorCode::kSymbolSingularOnLine, "symbol is not invertible on the line"));
        v["witness"] = singular_points(f);
        throw Verdict{v};
      }
      s = wh_factor_scalar(f, tol);
    }
  } catch (const Verdict&) {
    throw;
  }
  out["factorization"] = json_io::to_json(s);
  out["text"] = Json{{"gamma_minus", s.gamma_minus.to_string()}, {"gamma_plus", s.gamma_plus.to_string()}};
  out["verify"] = json_io::to_json(verify_scalar_factorization(scalar_symbol(doc, ring), s));
  out["status"] = "ok";
  return out;
}

inline std::optional<ScalarWH> scalar_from_doc(const Json& doc) {
  if (!doc.contains("scalar")) return std::nullopt;
  return json_io::scalar_wh_from_json(doc["scalar"]);
}

inline WHFactorization build_wh(const Json& doc, const Options& o, long double tol, std::string& mode) {
  RFMatrix g = json_io::rf_matrix(field(doc, "symbol"));
  mode = str_or(doc, "mode", o.mode, "row");
  if (mode != "row" && mode != "col" && mode != "rh") fail(ErrorCode::kParse, "mode must be row, col or rh");
  if (!g.is_square() || g.rows() < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  ScalarWH s = scalar_from_doc(doc) ? *scalar_from_doc(doc) : wh_factor_scalar(determinant(g), tol);
  if (mode == "row") return factor_via_row(g, omitted_index(doc, o, g.rows()), json_io::rf_matrix(field(doc, "phi_plus")), s);
  if (mode == "col")
    return factor_via_column(g, omitted_index(doc, o, g.rows()), json_io::rf_matrix(field(doc, "psi_minus")), s);
  if (o.omitted || doc.contains("omitted")) fail(ErrorCode::kParse, "omitted index does not apply to mode rh");
  return factor_via_rh(g, json_io::rf_matrix(field(doc, "phi_plus")), json_io::rf_matrix(field(doc, "phi_minus")),
                       json_io::rf_matrix(field(doc, "psi_plus")), json_io::rf_matrix(field(doc, "psi_minus")), s);
}

inline Json wh_matrix_json(const Json& doc, const Options& o, long double tol) {
  ring_of(doc, {"rational"});
  std::string mode;
  WHFactorization f = build_wh(doc, o, tol, mode);
  RFMatrix g = json_io::rf_matrix(doc["symbol"]);
  VerificationReport rep = verify_factorization(g, f);
  return Json{{"kind", "matrix-wh"},
              {"ring", "rational"},
              {"mode", mode},
              {"symbol", doc["symbol"]},
              {"factorization", json_io::to_json(f)},
              {"verify", json_io::to_json(rep)},
              {"status", "ok"}};
}

inline Json ap_factor_json(const Json& doc, const Options& o) {
  ring_of(doc, {"ap"});
  APMatrix g = json_io::ap_matrix(field(doc, "symbol"));
  std::string mode = str_or(doc, "mode", o.mode, "row");
  if (mode != "row" && mode != "rh") fail(ErrorCode::kParse, "mode must be row or rh");
  if (!g.is_square() || g.rows() < 2) fail(ErrorCode::kShapeMismatch, "symbol must be square with n >= 2");
  std::optional<APScalarFactorization> det;
  if (doc.contains("det_factorization")) {
    const Json& d = doc["det_factorization"];
    det = APScalarFactorization{json_io::gaussian_from_json(field(d, "gamma_minus")),
                                json_io::rational_from_json(field(d, "kappa")),
                                json_io::gaussian_from_json(field(d, "gamma_plus"))};
  }
  APFactorOutcome r;
  if (mode == "row") {
    r = ap_factor_via_row(g, omitted_index(doc, o, g.rows()), json_io::ap_matrix(field(doc, "phi_plus")), det);
  } else {
    if (o.omitted || doc.contains("omitted")) fail(ErrorCode::kParse, "omitted index does not apply to mode rh");
    r = ap_factor_via_rh(g, json_io::ap_matrix(field(doc, "phi_plus")), json_io::ap_matrix(field(doc, "phi_minus")),
                         json_io::ap_matrix(field(doc, "psi_plus")), json_io::ap_matrix(field(doc, "psi_minus")), det);
  }
  Json split{{"route", r.route},
             {"split_minus", json_io::vector_to_json(r.split_minus)},
             {"split_plus", json_io::vector_to_json(r.split_plus)},
             {"offending", json_io::vector_to_json(r.offending)}};
  Json out{{"kind", "ap-factorization"}, {"ring", "ap"}, {"mode", mode}, {"symbol", doc["symbol"]}, {"split", split}};
  if (!r.split_available()) {
    std::string freqs;
    for (const auto& q : r.offending) freqs += (freqs.empty() ? "" : ", ") + q.to_string();
    out["command"] = "ap-factor";
    out["status"] = "split-unavailable";
    out["error"] = Json{{"code", "SplitUnavailable"},
                        {"message", "frequency gap split fails at " + freqs + "; no factorization is claimed"}};
    throw Verdict{out};
  }
  out["factorization"] = json_io::to_json(*r.factorization);
  out["verify"] = json_io::to_json(verify_ap_factorization(g, *r.factorization));
  out["status"] = "ok";
  return out;
}

inline StructureCertificate certificate_from_json(const Json& c) {
  StructureCertificate cert;
  std::string kind = field(c, "kind").get<std::string>();
  if (kind == "row") {
    cert.kind = StructureKind::kRowSubmatrix;
  } else if (kind == "column") {
    cert.kind = StructureKind::kColumnSubmatrix;
  } else if (kind == "rh") {
    cert.kind = StructureKind::kSolutionPair;
  } else {
    fail(ErrorCode::kParse, "certificate kind must be row, column or rh");
  }
  std::string level = c.value("level", "H");
  if (level != "H" && level != "M") fail(ErrorCode::kParse, "certificate level must be H or M");
  cert.level = level == "H" ? CertificateLevel::kH : CertificateLevel::kM;
  if (cert.kind == StructureKind::kSolutionPair) {
    cert.phi_plus = json_io::rf_matrix(field(c, "phi_plus"));
    cert.phi_minus = json_io::rf_matrix(field(c, "phi_minus"));
    cert.psi_plus = json_io::rf_matrix(field(c, "psi_plus"));
    cert.psi_minus = json_io::rf_matrix(field(c, "psi_minus"));
  } else {
    if (!field(c, "omitted").is_number_integer() || c["omitted"].get<long>() < 0)
      fail(ErrorCode::kParse, "'omitted' must be a non-negative integer");
    cert.omitted = c["omitted"].get<size_t>();
    cert.inverse = json_io::rf_matrix(field(c, "inverse"));
  }
  return cert;
}

inline Json report_json(const Json& doc) {
  std::string ring = ring_of(doc, {"rational", "ap", "mixed", "indices"});
  FredholmReport rep;
  if (ring == "indices" || doc.contains("indices")) {
    if (!field(doc, "indices").is_array()) fail(ErrorCode::kParse, "'indices' must be an array of integers");
    rep = report_from_indices(doc["indices"].get<std::vector<int>>());
  } else if (ring == "mixed") {
    rep = continuous_except_line(json_io::mixed_matrix(field(doc, "symbol")));
  } else if (ring == "ap") {
    std::string special = field(doc, "special").get<std::string>();
    if (special != "unitary" && special != "orthogonal") fail(ErrorCode::kParse, "special must be unitary or orthogonal");
    rep = ap_special(json_io::ap_matrix(field(doc, "symbol")),
                     special == "unitary" ? SpecialMode::kUnitary : SpecialMode::kOrthogonal);
  } else {
    const Json& sym = field(doc, "symbol");
    bool matrix = sym.is_array() && !sym.empty() && sym[0].is_array();
    if (!matrix) {
      rep = *::whfactor::detail::scalar_report(json_io::rf_from_json(sym));
    } else if (doc.contains("special")) {
      std::string special = doc["special"].get<std::string>();
      RFMatrix g = json_io::rf_matrix(sym);
      if (special == "unitary") {
        rep = special_unitary(g);
      } else if (special == "orthogonal") {
        rep = special_orthogonal(g);
      } else {
        fail(ErrorCode::kParse, "special must be unitary or orthogonal");
      }
    } else {
      rep = classify(json_io::rf_matrix(sym), certificate_from_json(field(doc, "certificate")));
    }
  }
  Json out{{"report", json_io::to_json(rep)}, {"status", "ok"}};
  return out;
}

inline Json verify_json(const Json& doc) {
  std::string kind = field(doc, "kind").get<std::string>();
  Json out{{"kind", kind}};
  VerificationReport rep;
  if (kind == "scalar-wh") {
    std::string ring = ring_of(doc, {"factored", "rational"});
    rep = verify_scalar_factorization(scalar_symbol(doc, ring), json_io::scalar_wh_from_json(field(doc, "factorization")));
  } else if (kind == "matrix-wh") {
    ring_of(doc, {"rational"});
    rep = verify_factorization(json_io::rf_matrix(field(doc, "symbol")), json_io::wh_from_json(field(doc, "factorization")));
  } else if (kind == "ap-factorization") {
    ring_of(doc, {"ap"});
    rep = verify_ap_factorization(json_io::ap_matrix(field(doc, "symbol")),
                                  json_io::ap_factorization_from_json(field(doc, "factorization")));
  } else {
    fail(ErrorCode::kParse, "kind must be scalar-wh, matrix-wh or ap-factorization");
  }
  out["verify"] = json_io::to_json(rep);
  out["status"] = rep.all_passed() ? "ok" : "failure";
  if (!rep.all_passed()) {
    out["command"] = "verify";
    throw Verdict{out};
  }
  return out;
}

inline Json winding_json(const Json& doc, const Options& o, long double tol) {
  std::string ring = ring_of(doc, {"factored", "rational", "ap"});
  int grid = o.grid.value_or(doc.value("grid", 256));
  if (grid < 8) fail(ErrorCode::kParse, "grid must be at least 8");
  if (ring == "ap") {
    MeanMotionResult mm = mean_motion(json_io::ap_from_json(field(doc, "symbol")));
    Json out{{"method", mean_motion_method_name(mm.method)}, {"warning", mm.warning}, {"status", "ok"}};
    out["mean_motion"] = mm.kappa ? json_io::to_json(*mm.kappa) : Json(nullptr);
    return out;
  }
  RationalFunction f = scalar_symbol(doc, ring);
  if (f.is_zero()) fail(ErrorCode::kZeroInput, "symbol is zero");
  if (!f.invertible_on_line()) {
    Json v = failure("winding", Error(ErrorCode::kSymbolSingularOnLine, "symbol is not invertible on the line"));
    v["witness"] = singular_points(f);
    throw Verdict{v};
  }
  int exact = winding_exact(f);
  int numeric = winding_numeric(f, grid, tol);
  return Json{{"exact", exact}, {"numeric", numeric}, {"agree", exact == numeric}, {"grid", grid}, {"status", "ok"}};
}

inline Json project_json(const Json& doc) {
  std::string ring = ring_of(doc, {"rational", "ap"});
  if (ring == "ap") {
    APPoly p = json_io::ap_from_json(field(doc, "symbol"));
    APPoly plus = ap_project(p, true), minus = ap_project(p, false);
    Json checks = Json::array({check("sum", plus + minus == p), check("idempotent_plus", ap_project(plus, true) == plus),
                               check("idempotent_minus", ap_project(minus, false) == minus)});
    return Json{{"plus", json_io::to_json(plus)}, {"minus", json_io::to_json(minus)}, {"verify", checks_block(checks)},
                {"status", "ok"}};
  }
  RationalFunction f = json_io::rf_from_json(field(doc, "symbol"));
  bool weighted = doc.value("weighted", true);
  ProjectionResult r = weighted ? riesz_project(f) : plain_project(f);
  Json checks = Json::array({check("sum", r.plus_part + r.minus_part == f)});
  checks.push_back(Json{{"name", "plus_part_in_h_plus"}, {"passed", r.plus_part.in_h(true)}, {"detail", ""}});
  checks.push_back(Json{{"name", "minus_part_in_h_minus"}, {"passed", r.minus_part.in_h(false)}, {"detail", ""}});
  return Json{{"weighted", weighted}, {"plus", json_io::to_json(r.plus_part)}, {"minus", json_io::to_json(r.minus_part)},
              {"verify", checks_block(checks)}, {"status", "ok"}};
}

inline Json apply_inverse_json(const Json& doc, const Options& o, long double tol) {
  ring_of(doc, {"rational"});
  RFMatrix g = json_io::rf_matrix(field(doc, "symbol"));
  WHFactorization f;
  if (doc.contains("factorization")) {
    if (o.mode || o.omitted) fail(ErrorCode::kParse, "--mode/--omitted conflict with a supplied factorization");
    f = json_io::wh_from_json(doc["factorization"]);
    if (!verify_factorization(g, f).all_passed()) fail(ErrorCode::kCertificateInvalid, "supplied factorization does not verify");
  } else {
    std::string mode;
    f = build_wh(doc, o, tol, mode);
  }
  std::vector<RationalFunction> phi =
      json_io::vector_from_json<RationalFunction>(field(doc, "vector"), json_io::rf_from_json);
  std::vector<RationalFunction> x = apply_inverse(f, phi);
  bool round_trip = apply_toeplitz(g, x) == phi;
  return Json{{"solution", json_io::vector_to_json(x)},
              {"verify", checks_block(Json::array({check("toeplitz_round_trip", round_trip)}))},
              {"status", "ok"}};
}

// ---------------------------------------------------------------------------
// Text rendering.
// ---------------------------------------------------------------------------

inline std::string rf_text(const RationalFunction& f) {
  if (f.num().degree() <= 0 && f.den().degree() <= 0) return f.num().coeff(0).to_string();
  try {
    FactoredRational fr = factor_numeric(f);
    if (fr.all_exact()) return fr.to_string();
  } catch (const Error&) {
  }
  return f.to_string();
}

inline void render(std::ostream& os, const Json& j, int indent);

inline bool is_ring_object(const Json& j) {
  return json_io::is_gaussian_json(j) || (j.is_object() && j.contains("num") && j.contains("den") && j.size() == 2) ||
         (j.is_object() && j.contains("lead") && j.contains("factors"));
}

inline bool is_ap_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& t : j)
    if (!t.is_object() || !t.contains("freq") || !t.contains("coeff") || !is_ring_object(t["coeff"])) return false;
  return true;
}

inline std::string scalar_text(const Json& j) {
  if (json_io::is_gaussian_json(j)) return json_io::gaussian_from_json(j).to_string();
  if (j.is_object() && j.contains("lead")) return json_io::factored_from_json(j).to_string();
  if (j.is_object() && j.contains("num")) return rf_text(json_io::rf_from_json(j));
  if (is_ap_array(j)) {
    if (json_io::is_gaussian_json(j[0]["coeff"])) return json_io::ap_from_json(j).to_string();
    return json_io::mixed_from_json(j).to_string();
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool is_leaf(const Json& j) {
  if (j.is_primitive() || is_ring_object(j) || is_ap_array(j)) return true;
  if (j.is_array()) {
    for (const auto& e : j)
      if (!(e.is_primitive() || is_ring_object(e) || is_ap_array(e))) return false;
    return true;
  }
  return false;
}

inline std::string leaf_text(const Json& j) {
  if (j.is_array() && !is_ap_array(j)) {
    std::string s = "[";
    for (size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + scalar_text(j[k]);
    return s + "]";
  }
  return scalar_text(j);
}

inline void render(std::ostream& os, const Json& j, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object() && !is_ring_object(j)) {
    for (const auto& [k, v] : j.items()) {
      if (is_leaf(v)) {
        os << pad << k << ": " << leaf_text(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 1);
      }
    }
  } else if (j.is_array() && !is_leaf(j)) {
    for (const auto& v : j) {
      if (is_leaf(v)) {
        os << pad << "- " << leaf_text(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 1);
      }
    }
  } else {
    os << pad << leaf_text(j) << "\n";
  }
}

inline void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "text") {
    render(out, j, 0);
  } else {
    out << j.dump(2) << "\n";
  }
}

inline Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kParse, "cannot open input '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    Json doc = Json::parse(text);
    if (!doc.is_object()) fail(ErrorCode::kParse, "input must be a JSON object");
    return doc;
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kParse:
    case ErrorCode::kShapeMismatch:
    case ErrorCode::kShapeViolation:
    case ErrorCode::kZeroDenominator:
    case ErrorCode::kZeroInput:
      return 2;
    case ErrorCode::kRhResidual:
    case ErrorCode::kRootClassificationAmbiguous:
      return 3;
    default:
      return 1;
  }
}

inline Json dispatch(const Options& o, const Json& doc) {
  const long double tol = o.tol ? *o.tol : default_tolerance();
  const std::string& c = o.command;
  Json out;
  if (c == "minors" || c == "left-inverse" || c == "right-inverse" || c == "complete") {
    std::string ring = ring_of(doc, {"gaussian", "poly", "rational"});
    if (ring != "rational" && (o.half || o.level)) fail(ErrorCode::kParse, "--half/--level apply to the rational ring only");
    if (c == "complete") {
      if (ring == "gaussian") out = complete_json(json_io::g_matrix(field(doc, "phi")), json_io::g_matrix(field(doc, "psi")));
      if (ring == "poly") out = complete_json(json_io::poly_matrix(field(doc, "phi")), json_io::poly_matrix(field(doc, "psi")));
      if (ring == "rational") out = complete_json(json_io::rf_matrix(field(doc, "phi")), json_io::rf_matrix(field(doc, "psi")));
    } else {
      BezoutSolver<RationalFunction> rf_solver = corona_bezout_solver(algebra_for(doc, o));
      out = with_ring(ring, field(doc, "matrix"), rf_solver, [&](const auto& m, auto solver, auto entry) {
        if (c == "minors") {
          Json j = minors_json(m);
          j["status"] = "ok";
          return j;
        }
        return one_sided_json(c, m, doc, solver, entry);
      });
      if (ring == "rational" && c != "minors") out["algebra"] = algebra_name(algebra_for(doc, o));
    }
    out["ring"] = ring;
  } else if (c == "corona") {
    out = corona_json(doc, o);
  } else if (c == "wh-scalar") {
    out = wh_scalar_json(doc, tol);
  } else if (c == "wh-matrix") {
    out = wh_matrix_json(doc, o, tol);
  } else if (c == "ap-factor") {
    out = ap_factor_json(doc, o);
  } else if (c == "report") {
    out = report_json(doc);
  } else if (c == "verify") {
    out = verify_json(doc);
  } else if (c == "winding") {
    out = winding_json(doc, o, tol);
  } else if (c == "project") {
    out = project_json(doc);
  } else {
    out = apply_inverse_json(doc, o, tol);
  }
  out["command"] = c;
  return out;
}

}  // namespace detail

/// Runs one command; args excludes the program name. Exit codes: 0 success,
/// 1 hypothesis/corona/split failure, 2 parse or validation error, 3 internal error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Wiener-Hopf factorization and Toeplitz diagnostics", "whfactor"};
  app.require_subcommand(1, 1);
  Options o;
  std::string mode, half, level;
  long double tol = 0;
  int grid = 0;
  long omitted = 0;
  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--input,-i", o.input, "JSON input file, or - for stdin")->required();
    sub->add_option("--format", o.format, "json or text");
    sub->add_option("--mode", mode, "row, col or rh");
    sub->add_option("--half", half, "plus or minus");
    sub->add_option("--level", level, "H or M");
    sub->add_option("--tol", tol, "numeric tolerance");
    sub->add_option("--grid", grid, "winding grid size");
    sub->add_option("--omitted", omitted, "omitted row or column, 0-based");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "whfactor: " << e.what() << "\n";
    return 2;
  }
  CLI::App* sub = app.get_subcommands().front();
  o.command = sub->get_name();
  if (sub->count("--mode")) o.mode = mode;
  if (sub->count("--half")) o.half = half;
  if (sub->count("--level")) o.level = level;
  if (sub->count("--tol")) o.tol = tol;
  if (sub->count("--grid")) o.grid = grid;
  if (sub->count("--omitted")) o.omitted = omitted;
  try {
    validate(o);
    Json doc = detail::read_input(o.input);
    Json result = detail::dispatch(o, doc);
    detail::emit(out, result, o.format);
    return 0;
  } catch (const Verdict& v) {
    detail::emit(out, v.body, o.format);
    return 1;
  } catch (const Error& e) {
    int code = detail::exit_code_for(e.code());
    if (code == 1) {
      detail::emit(out, detail::failure(o.command, e), o.format);
    } else {
      err << "whfactor: " << e.what() << "\n";
    }
    return code;
  } catch (const Json::exception& e) {
    err << "whfactor: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "whfactor: internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace whfactor::cli

#endif  // WHFACTOR_CLI_HPP_
