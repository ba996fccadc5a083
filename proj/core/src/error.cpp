// Copyright 2026 The vdyck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vdyck/error.hpp"

namespace vdyck {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kUnbalanced: return "Unbalanced";
    case ErrorCode::kNegativePrefix: return "NegativePrefix";
    case ErrorCode::kInvalidToken: return "InvalidToken";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kNot312Avoiding: return "Not312Avoiding";
    case ErrorCode::kNotInClass: return "NotInClass";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::kNonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::kNonContiguousLabels: return "NonContiguousLabels";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace vdyck
