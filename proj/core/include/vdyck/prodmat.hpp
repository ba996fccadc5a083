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
#include <string>
#include <vector>

#include "vdyck/bigint.hpp"
#include "vdyck/eco.hpp"

namespace vdyck {

/// Square production matrix. Rows and columns are addressed by label value,
/// 1-based: entry (i, j) counts the children labelled (j) of a node (i).
class ProductionMatrix {
 public:
  explicit ProductionMatrix(std::size_t dimension);

  std::size_t dimension() const { return dim_; }

  const BigInt& at(std::size_t row, std::size_t col) const;
  BigInt& at(std::size_t row, std::size_t col);

  BigInt row_sum(std::size_t row) const;
  std::vector<std::vector<BigInt>> rows() const;

  friend bool operator==(const ProductionMatrix&,
                         const ProductionMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<BigInt> entries_;  // row-major
};

/// Row vector of per-label node counts; index i holds label (i + 1).
struct LevelVector {
  std::vector<BigInt> counts;

  friend bool operator==(const LevelVector&, const LevelVector&) = default;
};

struct LevelCount {
  BigInt total;
  LevelVector per_label;
};

/// P_2 = [[0,1],[1,1]]; P_h = [[0, u^t], [0, P_{h-1} + e u^t]] for h >= 3,
/// with u = (1,0,...,0)^t and e = (1,...,1)^t.
ProductionMatrix build_block(int h);

/// Reads the matrix off a rule whose labels are exactly 1..d.
ProductionMatrix build_from_rule(const SuccessionRule& rule);

/// r_0 = unit vector at `axiom`, r_{i+1} = r_i * m; returns r_n and its sum.
LevelCount level_count(const ProductionMatrix& m, Label axiom, int n);

}  // namespace vdyck
