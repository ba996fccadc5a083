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

#include <iosfwd>
#include <string>
#include <vector>

#include "vdyck/bigint.hpp"

namespace vdyck::cli {

enum class Format { kText, kCsv, kJson };

inline constexpr int kSchemaVersion = 1;
inline constexpr int kMaxCountN = 512;

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or agreement failure
inline constexpr int kExitUsage = 2;    // usage, parse or precondition error

struct CountOptions {
  int h = 2;
  int n_max = 10;
  std::string method = "recurrence";  // recurrence|series|matrix|brute|eco|all
  int k = 2;
  int cap = -1;  // -1 selects the per-method default
};

struct ListOptions {
  int h = 3;
  int n = 0;
  std::string kind = "paths";  // paths|perms
  int k = 2;
  int cap = -1;
};

struct MapOptions {
  std::string direction = "auto";  // auto|to-perm|to-path
  std::vector<std::string> inputs;  // empty: read stdin
};

struct TreeOptions {
  int h = 3;
  int depth = 3;
  std::string kind = "paths";
  int cap = -1;
};

struct TableOptions {
  int h_max = 14;
  int j_max = 8;
};

struct MatrixOptions {
  int h = 3;
  std::string source = "block";  // block|rule
};

/// Sequence D_0..D_{n_max} computed by one method.
std::vector<BigInt> count_by_method(const std::string& method, int h,
                                    int n_max, int k, int cap);

int cmd_count(const CountOptions& opts, Format format, std::ostream& out,
              std::ostream& err);
int cmd_list(const ListOptions& opts, Format format, std::ostream& out,
             std::ostream& err);
int cmd_map(const MapOptions& opts, Format format, std::istream& in,
            std::ostream& out, std::ostream& err);
int cmd_tree(const TreeOptions& opts, Format format, std::ostream& out,
             std::ostream& err);
int cmd_table(const TableOptions& opts, Format format, std::ostream& out,
              std::ostream& err);
int cmd_matrix(const MatrixOptions& opts, Format format, std::ostream& out,
               std::ostream& err);

}  // namespace vdyck::cli
