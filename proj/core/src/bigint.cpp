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

#include "vdyck/bigint.hpp"

namespace vdyck {

std::string to_string(const BigInt& value) { return value.str(); }

BigInt binomial(std::int64_t m, std::int64_t r) {
  if (m < 0 || r < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    // Running product stays integral: result == C(m - r + i, i) after step i.
    result *= m - r + i;
    result /= i;
  }
  return result;
}

}  // namespace vdyck
