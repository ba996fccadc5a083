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

#include "vdyck/bijection.hpp"

#include "vdyck/error.hpp"

namespace vdyck {
namespace {

void require_312_avoiding(const Permutation& perm) {
  if (!avoids_312(perm)) {
    throw Error(ErrorCode::kNot312Avoiding,
                "permutation '" + perm.str() + "' contains the pattern 312");
  }
}

}  // namespace

Permutation path_to_perm(const DyckPath& path) {
  std::vector<int> open;
  std::vector<int> out;
  out.reserve(path.semilength());
  int next_label = 1;
  for (Step s : path.steps()) {
    if (s == Step::kUp) {
      open.push_back(next_label++);
    } else {
      out.push_back(open.back());
      open.pop_back();
    }
  }
  return Permutation::from_entries(std::move(out));
}

DyckPath perm_to_path(const Permutation& perm) {
  require_312_avoiding(perm);
  const auto maxima = left_to_right_maxima(perm);
  const int n = static_cast<int>(perm.size());
  std::vector<Step> steps;
  steps.reserve(2 * perm.size());
  int previous_value = 0;
  for (std::size_t j = 0; j < maxima.size(); ++j) {
    const int block_end =
        j + 1 < maxima.size() ? maxima[j + 1].index : n + 1;
    const int block_size = block_end - maxima[j].index;
    steps.insert(steps.end(), maxima[j].value - previous_value, Step::kUp);
    steps.insert(steps.end(), block_size, Step::kDown);
    previous_value = maxima[j].value;
  }
  return DyckPath::from_steps(std::move(steps));
}

std::vector<LrmHeight> lrm_heights(const Permutation& perm) {
  require_312_avoiding(perm);
  std::vector<LrmHeight> out;
  for (const LrMaximum& m : left_to_right_maxima(perm)) {
    out.push_back({m, m.excess()});
  }
  return out;
}

}  // namespace vdyck
