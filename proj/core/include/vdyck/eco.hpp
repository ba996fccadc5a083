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
#include <map>
#include <vector>

#include "vdyck/bigint.hpp"
#include "vdyck/dyck.hpp"
#include "vdyck/perm.hpp"

namespace vdyck {

/// Label of a node in a generating tree; a node labelled (k) has k children.
struct Label {
  int value = 1;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Axiom plus productions. Child lists keep the production order.
struct SuccessionRule {
  Label axiom;
  std::map<Label, std::vector<Label>> productions;

  const std::vector<Label>& children(Label label) const;
};

template <class Object>
struct TreeNode {
  Object object;
  Label label;
  int level = 0;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

using PathNode = TreeNode<DyckPath>;
using PermNode = TreeNode<Permutation>;

inline constexpr int kDefaultTreeCap = 12;

/// Number of leading up steps.
int initial_rise(const DyckPath& path);

/// The ECO operator on D^(h,2), h >= 3: inserts UD before each of the first
/// min(t, h-1) leading up steps and, when t < h, after the t-th as well.
/// The empty path yields {UD}. Children are ordered by insertion site.
std::vector<DyckPath> theta(const DyckPath& path, int h);

/// (1) for the empty path, (t+1) for 1 <= t <= h-1, (h-1) for t = h.
Label label_of(const DyckPath& path, int h);

/// The rule for D^(h,2), h >= 3.
SuccessionRule omega(int h);

/// The Fibonacci rule (1) -> (2), (2) -> (1)(2) for D^(2,2).
SuccessionRule omega2();

/// Level n of the tree generated by theta from the empty path, in parent
/// order and then insertion-site order.
std::vector<PathNode> generate_level(int h, int n, int cap = kDefaultTreeCap);

/// Every level 0..depth, e.g. for printing the tree.
std::vector<std::vector<PathNode>> generate_tree(int h, int depth,
                                                 int cap = kDefaultTreeCap);

struct SymbolicCounts {
  BigInt total;
  std::map<Label, BigInt> per_label;
};

/// Label multiset at level n of the abstract generating tree of `rule`.
SymbolicCounts symbolic_counts(const SuccessionRule& rule, int n);

/// Permutation-side ECO step: prepend l and shift entries >= l up by one,
/// for l = 1..π₁+1 when π₁ < h and l = 1..h-1 when π₁ = h. The empty
/// permutation yields {1}.
std::vector<Permutation> theta_perm(const Permutation& perm, int h);

/// (1) for the empty permutation, π₁+1 if π₁ != h, h-1 if π₁ = h.
Label label_of_perm(const Permutation& perm, int h);

std::vector<PermNode> generate_perm_level(int h, int n,
                                          int cap = kDefaultTreeCap);

}  // namespace vdyck
