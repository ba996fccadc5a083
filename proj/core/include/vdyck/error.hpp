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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vdyck {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidCharacter,
  kUnbalanced,
  kNegativePrefix,
  kInvalidToken,
  kNotAPermutation,
  kNot312Avoiding,
  kNotInClass,
  kCapExceeded,
  kNonIntegralCoefficient,
  kNonUnitConstantTerm,
  kNonContiguousLabels,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type thrown by the library. `position()` carries the
/// first offending index for the parsers (0-based into the input text for
/// paths, the offending value for permutations).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace vdyck
