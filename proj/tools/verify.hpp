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

#include "commands.hpp"

namespace vdyck::cli {

struct VerifyOptions {
  std::string scope = "all";  // all|bijection|identities|eco|matrix
  int n_max = -1;             // -1: per-scope default
  int h_max = -1;
  int alpha_max = 6;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the cross-module invariant checks for `scope`. Throws
/// vdyck::Error(kCapExceeded) when a bound is beyond what the brute-force
/// oracles can handle.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

int cmd_verify(const VerifyOptions& opts, Format format, std::ostream& out,
               std::ostream& err);

}  // namespace vdyck::cli
