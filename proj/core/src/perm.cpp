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

#include "vdyck/perm.hpp"

#include <charconv>
#include <numeric>

#include "vdyck/error.hpp"

namespace vdyck {
namespace {

void check_h(int h) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "h must be positive");
}

}  // namespace

Permutation Permutation::from_entries(std::vector<int> entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(entries.size() + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(ErrorCode::kNotAPermutation,
                  "value " + std::to_string(v) +
                      " is duplicated or outside 1.." + std::to_string(n),
                  v < 0 ? std::nullopt
                        : std::optional<std::size_t>(static_cast<std::size_t>(v)));
    }
    seen[v] = true;
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation parse_perm(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == ',' || c == '\t' || c == '\r' || c == '\n';
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidToken,
                  "not an integer: '" + std::string(token) + "'", i);
    }
    values.push_back(value);
    i = j;
  }
  return Permutation::from_entries(std::move(values));
}

bool avoids_312(const Permutation& perm) {
  const auto e = perm.entries();
  const int n = static_cast<int>(e.size());
  // 231 scan over the reverse-complement. `floor` is the largest value popped
  // so far; a later value below it completes a 231.
  std::vector<int> stack;
  stack.reserve(e.size());
  int floor = 0;
  for (int i = n - 1; i >= 0; --i) {
    const int x = n + 1 - e[i];
    if (x < floor) return false;
    while (!stack.empty() && stack.back() < x) {
      floor = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return true;
}

std::vector<LrMaximum> left_to_right_maxima(const Permutation& perm) {
  std::vector<LrMaximum> out;
  int best = 0;
  const auto e = perm.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > best) {
      best = e[i];
      out.push_back({static_cast<int>(i) + 1, e[i]});
    }
  }
  return out;
}

bool in_bounded_class(const Permutation& perm, int h) {
  check_h(h);
  if (!avoids_312(perm)) return false;
  for (const LrMaximum& m : left_to_right_maxima(perm)) {
    if (m.excess() > h - 1) return false;
  }
  return true;
}

bool in_restricted_class(const Permutation& perm, int h) {
  if (!in_bounded_class(perm, h)) return false;
  const std::size_t n = perm.size();
  for (const LrMaximum& m : left_to_right_maxima(perm)) {
    const auto next = static_cast<std::size_t>(m.index) + 1;
    if (m.excess() == h - 1 && next <= n && perm.at(next) == m.value + 1) {
      return false;
    }
  }
  return true;
}

}  // namespace vdyck
