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

// Test-only oracles. Nothing here calls into the code path it is used to
// check: Catalan numbers come from the convolution recurrence, 312 avoidance
// from the cubic definition, series from a truncated reciprocal.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "vdyck/bigint.hpp"
#include "vdyck/dyck.hpp"
#include "vdyck/perm.hpp"

namespace vdyck::oracle {

inline std::vector<BigInt> catalan_by_recurrence(int n_max) {
  std::vector<BigInt> c(n_max + 1, BigInt(0));
  c[0] = 1;
  for (int n = 0; n < n_max; ++n) {
    for (int i = 0; i <= n; ++i) c[n + 1] += c[i] * c[n - i];
  }
  return c;
}

inline std::vector<BigInt> fibonacci(int terms) {
  std::vector<BigInt> f{1, 1};
  while (static_cast<int>(f.size()) < terms) {
    f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  }
  f.resize(terms);
  return f;
}

inline bool contains_312_cubic(const std::vector<int>& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (p[a] > p[c] && p[c] > p[b]) return true;
  return false;
}

/// Every permutation of 1..n in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Heights reached by the first down step of each maximal run of D's.
inline std::vector<int> first_down_heights(const DyckPath& path) {
  std::vector<int> out;
  int level = 0;
  Step prev = Step::kUp;
  for (Step s : path.steps()) {
    level += s == Step::kUp ? 1 : -1;
    if (s == Step::kDown && prev == Step::kUp) out.push_back(level);
    prev = s;
  }
  return out;
}

/// Truncated power series arithmetic for the continued-fraction check.
using Series = std::vector<BigInt>;

inline Series series_mul(const Series& a, const Series& b, int terms) {
  Series out(terms, BigInt(0));
  for (int i = 0; i < terms; ++i)
    for (int j = 0; i + j < terms; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// 1 / g for g with g[0] = 1.
inline Series series_reciprocal(const Series& g, int terms) {
  Series out(terms, BigInt(0));
  out[0] = 1;
  for (int n = 1; n < terms; ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= n; ++i) acc -= g[i] * out[n - i];
    out[n] = acc;
  }
  return out;
}

/// f_h built from f_1 = 1 + x by f_h = 1 / (1 - x f_{h-1}).
inline Series continued_fraction_series(int h, int terms) {
  Series f(terms, BigInt(0));
  f[0] = 1;
  if (terms > 1) f[1] = 1;
  for (int k = 2; k <= h; ++k) {
    Series g(terms, BigInt(0));
    g[0] = 1;
    for (int i = 1; i < terms; ++i) g[i] = -f[i - 1];
    f = series_reciprocal(g, terms);
  }
  return f;
}

/// The published coefficient table a_{h,j}, h = 1..14, j = 1..8.
inline constexpr std::array<std::array<int, 8>, 14> kTable1 = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0, 0, 0},
    {3, 0, -1, 0, 0, 0, 0, 0},
    {4, -2, -2, 0, 0, 0, 0, 0},
    {5, -5, -2, 1, 0, 0, 0, 0},
    {6, -9, 0, 3, 0, 0, 0, 0},
    {7, -14, 5, 5, -1, 0, 0, 0},
    {8, -20, 14, 5, -4, 0, 0, 0},
    {9, -27, 28, 0, -9, 1, 0, 0},
    {10, -35, 48, -14, -14, 5, 0, 0},
    {11, -44, 75, -42, -14, 14, -1, 0},
    {12, -54, 110, -90, 0, 28, -6, 0},
    {13, -65, 154, -165, 42, 42, -20, 1},
}};

}  // namespace vdyck::oracle
