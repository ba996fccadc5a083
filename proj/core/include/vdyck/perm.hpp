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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vdyck {

/// A permutation of 1..n in one-line notation.
///
/// Positions are 1-based throughout this module (`at(1)` is the first entry)
/// so that quantities such as value - index read the same as in the
/// combinatorial literature.
class Permutation {
 public:
  Permutation() = default;  // the empty permutation

  static Permutation from_entries(std::vector<int> entries);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  int at(std::size_t index) const { return entries_.at(index - 1); }
  int first() const { return entries_.front(); }
  std::span<const int> entries() const { return entries_; }

  /// Entries separated by single spaces; "" for the empty permutation.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> entries)
      : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

/// Left-to-right maximum at 1-based `index`.
struct LrMaximum {
  int index = 0;
  int value = 0;

  int excess() const { return value - index; }

  friend bool operator==(const LrMaximum&, const LrMaximum&) = default;
};

/// Accepts integers separated by spaces, tabs or commas.
Permutation parse_perm(std::string_view text);

/// Linear-time check: π avoids 312 iff its reverse-complement avoids 231,
/// which a single stack pass decides.
bool avoids_312(const Permutation& perm);

std::vector<LrMaximum> left_to_right_maxima(const Permutation& perm);

/// 312-avoiding and every left-to-right maximum has excess at most h-1.
/// This is the image of the paths of height at most h.
bool in_bounded_class(const Permutation& perm, int h);

/// in_bounded_class, and no left-to-right maximum of excess h-1 is
/// immediately followed (next position) by the value one larger. This is the
/// image of the paths of height at most h without valleys at height h-1.
bool in_restricted_class(const Permutation& perm, int h);

}  // namespace vdyck
