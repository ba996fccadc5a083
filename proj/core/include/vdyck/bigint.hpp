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

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vdyck {

/// Arbitrary-precision signed integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

/// Binomial coefficient with the extended-zero convention: returns 0 when
/// m < 0, r < 0 or r > m.
BigInt binomial(std::int64_t m, std::int64_t r);

}  // namespace vdyck
