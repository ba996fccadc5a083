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

#include "vdyck/dyck.hpp"

#include <algorithm>

#include "vdyck/error.hpp"

namespace vdyck {
namespace {

void check_cap(int n, int cap) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "semilength must be non-negative, got " + std::to_string(n));
  }
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "semilength " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap));
  }
}

}  // namespace

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  int level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    level += steps[i] == Step::kUp ? 1 : -1;
    if (level < 0) {
      throw Error(ErrorCode::kNegativePrefix,
                  "prefix ending at index " + std::to_string(i) +
                      " goes below the axis",
                  i);
    }
  }
  if (level != 0) {
    throw Error(ErrorCode::kUnbalanced,
                "path ends at height " + std::to_string(level),
                steps.size());
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::kUp ? 'U' : 'D');
  return out;
}

DyckPath parse_path(std::string_view text) {
  // Errors are reported in scan order, so the first offending index wins.
  std::vector<Step> steps;
  steps.reserve(text.size());
  int level = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::kUp); ++level; break;
      case 'D': steps.push_back(Step::kDown); --level; break;
      default:
        throw Error(ErrorCode::kInvalidCharacter,
                    "unexpected character at index " + std::to_string(i), i);
    }
    if (level < 0) {
      throw Error(ErrorCode::kNegativePrefix,
                  "prefix ending at index " + std::to_string(i) +
                      " goes below the axis",
                  i);
    }
  }
  if (level != 0) {
    throw Error(ErrorCode::kUnbalanced,
                "path has " + std::to_string(level) + " more U than D steps",
                text.size());
  }
  return DyckPath::from_steps(std::move(steps));
}

int height(const DyckPath& path) {
  int level = 0;
  int best = 0;
  for (Step s : path.steps()) {
    level += s == Step::kUp ? 1 : -1;
    best = std::max(best, level);
  }
  return best;
}

std::vector<ValleyOccurrence> valleys(const DyckPath& path) {
  std::vector<ValleyOccurrence> out;
  const auto steps = path.steps();
  int level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    level += steps[i] == Step::kUp ? 1 : -1;
    if (steps[i] == Step::kDown && i + 1 < steps.size() &&
        steps[i + 1] == Step::kUp) {
      out.push_back({i, level});
    }
  }
  return out;
}

bool in_class(const DyckPath& path, int h, int k) {
  if (h < 1) {
    throw Error(ErrorCode::kInvalidArgument, "h must be positive");
  }
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  }
  if (height(path) > h) return false;

  // Valleys at height h-1 two positions apart share the intermediate peak,
  // so they belong to one (DU)^m factor.
  const int forbidden_run = k - 1;
  int run = 0;
  std::size_t last = 0;
  for (const ValleyOccurrence& v : valleys(path)) {
    if (v.height != h - 1) {
      run = 0;
      continue;
    }
    run = (run > 0 && v.position == last + 2) ? run + 1 : 1;
    last = v.position;
    if (run >= forbidden_run) return false;
  }
  return true;
}

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit,
                   int cap) {
  check_cap(n, cap);
  const std::size_t len = 2 * static_cast<std::size_t>(n);
  std::vector<Step> buf(len);

  // Explicit DFS: at each position try D before U.
  auto rec = [&](auto& self, std::size_t pos, int ups, int level) -> void {
    if (pos == len) {
      visit(DyckPath::from_steps(buf));
      return;
    }
    if (level > 0) {
      buf[pos] = Step::kDown;
      self(self, pos + 1, ups, level - 1);
    }
    if (ups < n) {
      buf[pos] = Step::kUp;
      self(self, pos + 1, ups + 1, level + 1);
    }
  };
  rec(rec, 0, 0, 0);
}

std::vector<DyckPath> enumerate_dyck(int n, int cap) {
  std::vector<DyckPath> out;
  check_cap(n, cap);
  out.reserve(catalan(n).convert_to<std::size_t>());
  for_each_dyck(n, [&](const DyckPath& p) { out.push_back(p); }, cap);
  return out;
}

BigInt catalan(int n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "n must be non-negative");
  }
  return binomial(2 * static_cast<std::int64_t>(n), n) / (n + 1);
}

BigInt count_brute(int n, int h, int k, int cap) {
  BigInt count = 0;
  for_each_dyck(
      n, [&](const DyckPath& p) { if (in_class(p, h, k)) ++count; }, cap);
  return count;
}

}  // namespace vdyck
