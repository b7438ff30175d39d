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


#ifndef WHFACTOR_FREDHOLM_REPORT_HPP_
#define WHFACTOR_FREDHOLM_REPORT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace whfactor {

enum class Tristate { kYes, kNo, kUnknown };
enum class Equivalence { kNearly, kStrictly, kNone };
enum class Coburn { kKerZero, kCokerZero, kBoth, kNeither, kUnknown };

inline const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::kYes: return "yes";
    case Tristate::kNo: return "no";
    case Tristate::kUnknown: return "unknown";
  }
  return "?";
}
inline const char* equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::kNearly: return "nearly";
    case Equivalence::kStrictly: return "strictly";
    case Equivalence::kNone: return "none-established";
  }
  return "?";
}
inline const char* coburn_name(Coburn c) {
  switch (c) {
    case Coburn::kKerZero: return "ker_zero";
    case Coburn::kCokerZero: return "coker_zero";
    case Coburn::kBoth: return "both";
    case Coburn::kNeither: return "neither";
    case Coburn::kUnknown: return "unknown";
  }
  return "?";
}

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Toeplitz diagnostics for a symbol. Fields are set only when proved.
struct FredholmReport {
  Tristate fredholm = Tristate::kUnknown;
  std::optional<std::vector<int>> partial_indices;
  std::optional<long> dim_ker;
  std::optional<long> dim_coker;
  std::optional<long> index;
  Tristate invertible = Tristate::kUnknown;
  Equivalence equivalence = Equivalence::kNone;
  std::string basis;  // which structural fact justifies the equivalence verdict
  Coburn coburn = Coburn::kUnknown;
  bool uniform_in_p = true;
  std::vector<HypothesisCheck> hypotheses;
  std::shared_ptr<const FredholmReport> det_report;  // scalar report for det G
  std::string det_symbol;                            // det G, printed
  std::string witness;
  std::string note;
};

/// Kernel and cokernel dimensions from partial indices.
inline FredholmReport report_from_indices(const std::vector<int>& indices) {
  FredholmReport rep;
  rep.fredholm = Tristate::kYes;
  rep.partial_indices = indices;
  long ker = 0, coker = 0;
  bool all_nonneg = true, all_nonpos = true;
  for (int k : indices) {
    if (k <= 0) ker += -k;
    if (k >= 0) coker += k;
    if (k < 0) all_nonneg = false;
    if (k > 0) all_nonpos = false;
  }
  rep.dim_ker = ker;
  rep.dim_coker = coker;
  rep.index = ker - coker;
  rep.invertible = (ker == 0 && coker == 0) ? Tristate::kYes : Tristate::kNo;
  if (all_nonneg && all_nonpos) {
    rep.coburn = Coburn::kBoth;
  } else if (all_nonneg) {
    rep.coburn = Coburn::kKerZero;
  } else if (all_nonpos) {
    rep.coburn = Coburn::kCokerZero;
  } else {
    rep.coburn = Coburn::kNeither;
  }
  rep.basis = "partial indices";
  return rep;
}

}  // namespace whfactor

#endif  // WHFACTOR_FREDHOLM_REPORT_HPP_
