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

#include <vector>

#include "vdyck/dyck.hpp"
#include "vdyck/perm.hpp"

namespace vdyck {

/// Labels the up steps 1..n from left to right, gives every down step the
/// label of its matching up step, and reads the down-step labels in order.
/// The result always avoids 312.
Permutation path_to_perm(const DyckPath& path);

/// Inverse of path_to_perm. Each left-to-right maximum heads a descending
/// block; the path climbs to the maximum's value and descends once per block
/// entry. Throws kNot312Avoiding for permutations outside the image.
DyckPath perm_to_path(const Permutation& perm);

struct LrmHeight {
  LrMaximum maximum;
  /// Height reached by the first down step of the matching descent run.
  int height = 0;

  friend bool operator==(const LrmHeight&, const LrmHeight&) = default;
};

std::vector<LrmHeight> lrm_heights(const Permutation& perm);

}  // namespace vdyck
