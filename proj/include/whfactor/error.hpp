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

#ifndef WHFACTOR_ERROR_HPP_
#define WHFACTOR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace whfactor {

enum class ErrorCode {
  kZeroDenominator,
  kShapeMismatch,
  kNotALeftInverse,
  kBezoutCertificateInvalid,
  kRootClassificationAmbiguous,
  kInexactRoots,
  kSymbolSingularOnLine,
  kRealPole,
  kMembershipViolation,
  kHypothesisViolation,
  kIndexNonzero,
  kCertificateInvalid,
  kNotUnitary,
  kNotOrthogonal,
  kShapeViolation,
  kNearZeroOnContour,
  kZeroInput,
  kRhResidual,
  kParse,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotALeftInverse: return "NotALeftInverse";
    case ErrorCode::kBezoutCertificateInvalid: return "BezoutCertificateInvalid";
    case ErrorCode::kRootClassificationAmbiguous: return "RootClassificationAmbiguous";
    case ErrorCode::kInexactRoots: return "InexactRoots";
    case ErrorCode::kSymbolSingularOnLine: return "SymbolSingularOnLine";
    case ErrorCode::kRealPole: return "RealPole";
    case ErrorCode::kMembershipViolation: return "MembershipViolation";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kIndexNonzero: return "IndexNonzero";
    case ErrorCode::kCertificateInvalid: return "CertificateInvalid";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kShapeViolation: return "ShapeViolation";
    case ErrorCode::kNearZeroOnContour: return "NearZeroOnContour";
    case ErrorCode::kZeroInput: return "ZeroInput";
    case ErrorCode::kRhResidual: return "RhResidual";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace whfactor

#endif  // WHFACTOR_ERROR_HPP_
