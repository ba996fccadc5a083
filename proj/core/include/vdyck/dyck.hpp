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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdyck/bigint.hpp"

namespace vdyck {

/// Down sorts before Up so that comparing step sequences agrees with
/// comparing their 'U'/'D' renderings ('D' < 'U').
enum class Step : std::uint8_t { kDown = 0, kUp = 1 };

/// A Dyck path stored as its explicit step sequence. Positions are 0-based.
/// Only constructible through validating factories, so every instance is
/// balanced and never dips below the axis.
class DyckPath {
 public:
  DyckPath() = default;  // the empty path

  static DyckPath from_steps(std::vector<Step> steps);

  std::span<const Step> steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  std::size_t semilength() const { return steps_.size() / 2; }
  bool empty() const { return steps_.empty(); }

  /// 'U'/'D' rendering; the empty path renders as "".
  std::string str() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

/// A DU factor. `position` indexes the D; `height` is the ordinate it reaches.
struct ValleyOccurrence {
  std::size_t position = 0;
  int height = 0;

  friend bool operator==(const ValleyOccurrence&,
                         const ValleyOccurrence&) = default;
};

inline constexpr int kDefaultEnumerationCap = 14;

DyckPath parse_path(std::string_view text);

int height(const DyckPath& path);

std::vector<ValleyOccurrence> valleys(const DyckPath& path);

/// Membership in D^(h,k): height at most h and no run of k-1 valleys at
/// height h-1 forming a contiguous (DU)^(k-1) factor. For k = 2 this forbids
/// any valley at height h-1.
bool in_class(const DyckPath& path, int h, int k = 2);

/// Visits every Dyck path of semilength n in lexicographic order of the
/// 'U'/'D' strings without materializing the list.
void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit,
                   int cap = kDefaultEnumerationCap);

std::vector<DyckPath> enumerate_dyck(int n, int cap = kDefaultEnumerationCap);

BigInt catalan(int n);

/// |D_n^(h,k)| by filtering the full enumeration. This is the oracle every
/// other counting route is checked against.
BigInt count_brute(int n, int h, int k = 2, int cap = kDefaultEnumerationCap);

}  // namespace vdyck
