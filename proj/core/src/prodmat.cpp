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

#include "vdyck/prodmat.hpp"

#include <utility>

#include "vdyck/error.hpp"

namespace vdyck {

ProductionMatrix::ProductionMatrix(std::size_t dimension)
    : dim_(dimension), entries_(dimension * dimension, BigInt(0)) {}

const BigInt& ProductionMatrix::at(std::size_t row, std::size_t col) const {
  if (row < 1 || row > dim_ || col < 1 || col > dim_) {
    throw Error(ErrorCode::kInvalidArgument, "matrix index out of range");
  }
  return entries_[(row - 1) * dim_ + (col - 1)];
}

BigInt& ProductionMatrix::at(std::size_t row, std::size_t col) {
  return const_cast<BigInt&>(std::as_const(*this).at(row, col));
}

BigInt ProductionMatrix::row_sum(std::size_t row) const {
  BigInt sum = 0;
  for (std::size_t c = 1; c <= dim_; ++c) sum += at(row, c);
  return sum;
}

std::vector<std::vector<BigInt>> ProductionMatrix::rows() const {
  std::vector<std::vector<BigInt>> out(dim_);
  for (std::size_t r = 1; r <= dim_; ++r) {
    for (std::size_t c = 1; c <= dim_; ++c) out[r - 1].push_back(at(r, c));
  }
  return out;
}

ProductionMatrix build_block(int h) {
  if (h < 2) throw Error(ErrorCode::kInvalidArgument, "h must be >= 2");
  ProductionMatrix m(2);
  m.at(1, 2) = 1;
  m.at(2, 1) = 1;
  m.at(2, 2) = 1;
  for (int d = 3; d <= h; ++d) {
    ProductionMatrix next(d);
    next.at(1, 2) = 1;  // u^t
    // Lower-right block P_{d-1} + e u^t, shifted by one label.
    for (int r = 1; r < d; ++r) {
      for (int c = 1; c < d; ++c) {
        next.at(r + 1, c + 1) = m.at(r, c) + (c == 1 ? 1 : 0);
      }
    }
    m = std::move(next);
  }
  return m;
}

ProductionMatrix build_from_rule(const SuccessionRule& rule) {
  const std::size_t d = rule.productions.size();
  std::size_t expected = 1;
  for (const auto& [label, kids] : rule.productions) {
    if (label.value != static_cast<int>(expected++)) {
      throw Error(ErrorCode::kNonContiguousLabels,
                  "rule labels are not exactly 1.." + std::to_string(d));
    }
  }
  ProductionMatrix m(d);
  for (const auto& [label, kids] : rule.productions) {
    for (Label child : kids) {
      if (child.value < 1 || static_cast<std::size_t>(child.value) > d) {
        throw Error(ErrorCode::kNonContiguousLabels,
                    "production of (" + std::to_string(label.value) +
                        ") uses label (" + std::to_string(child.value) +
                        ") outside 1.." + std::to_string(d));
      }
      m.at(label.value, child.value) += 1;
    }
  }
  return m;
}

LevelCount level_count(const ProductionMatrix& m, Label axiom, int n) {
  const std::size_t d = m.dimension();
  if (axiom.value < 1 || static_cast<std::size_t>(axiom.value) > d) {
    throw Error(ErrorCode::kInvalidArgument, "axiom label outside matrix");
  }
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "level must be >= 0");

  std::vector<BigInt> row(d, BigInt(0));
  row[axiom.value - 1] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(d, BigInt(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) next[j] += row[i] * m.at(i + 1, j + 1);
    }
    row = std::move(next);
  }
  LevelCount out;
  out.total = 0;
  for (const BigInt& v : row) out.total += v;
  out.per_label.counts = std::move(row);
  return out;
}

}  // namespace vdyck
