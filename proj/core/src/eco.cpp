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

#include "vdyck/eco.hpp"

#include "vdyck/error.hpp"

namespace vdyck {
namespace {

void check_rule_h(int h) {
  if (h < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "the ECO operator is defined for h >= 3, got " +
                    std::to_string(h));
  }
}

void check_level(int n, int cap) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "level must be >= 0");
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "level " + std::to_string(n) +
                                             " exceeds cap " +
                                             std::to_string(cap));
  }
}

void require_path_in_class(const DyckPath& path, int h) {
  if (!in_class(path, h, 2)) {
    throw Error(ErrorCode::kNotInClass,
                "path '" + path.str() + "' is not in D^(" + std::to_string(h) +
                    ",2)");
  }
}

void require_perm_in_class(const Permutation& perm, int h) {
  if (!in_restricted_class(perm, h)) {
    throw Error(ErrorCode::kNotInClass,
                "permutation '" + perm.str() + "' is not in S^(" +
                    std::to_string(h) + ",2)(312)");
  }
}

Permutation prepend_rescaled(const Permutation& perm, int ell) {
  std::vector<int> out;
  out.reserve(perm.size() + 1);
  out.push_back(ell);
  for (int v : perm.entries()) out.push_back(v >= ell ? v + 1 : v);
  return Permutation::from_entries(std::move(out));
}

std::vector<PathNode> expand_level(const std::vector<PathNode>& parents, int h,
                                   int level) {
  std::vector<PathNode> next;
  for (const PathNode& parent : parents) {
    for (DyckPath& child : theta(parent.object, h)) {
      const Label label = label_of(child, h);
      next.push_back({std::move(child), label, level});
    }
  }
  return next;
}

}  // namespace

const std::vector<Label>& SuccessionRule::children(Label label) const {
  auto it = productions.find(label);
  if (it == productions.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no production for label (" + std::to_string(label.value) +
                    ")");
  }
  return it->second;
}

int initial_rise(const DyckPath& path) {
  int t = 0;
  for (Step s : path.steps()) {
    if (s != Step::kUp) break;
    ++t;
  }
  return t;
}

std::vector<DyckPath> theta(const DyckPath& path, int h) {
  check_rule_h(h);
  require_path_in_class(path, h);
  if (path.empty()) return {parse_path("UD")};

  const int t = initial_rise(path);
  // Site s means "insert UD right after the first s up steps".
  const int sites = t < h ? t + 1 : h - 1;
  const auto steps = path.steps();
  std::vector<DyckPath> out;
  out.reserve(sites);
  for (int s = 0; s < sites; ++s) {
    std::vector<Step> child(steps.begin(), steps.end());
    const Step ud[] = {Step::kUp, Step::kDown};
    child.insert(child.begin() + s, std::begin(ud), std::end(ud));
    out.push_back(DyckPath::from_steps(std::move(child)));
  }
  return out;
}

Label label_of(const DyckPath& path, int h) {
  check_rule_h(h);
  require_path_in_class(path, h);
  if (path.empty()) return {1};
  const int t = initial_rise(path);
  return {t < h ? t + 1 : h - 1};
}

SuccessionRule omega(int h) {
  check_rule_h(h);
  SuccessionRule rule{{1}, {}};
  rule.productions[{1}] = {{2}};
  for (int k = 2; k <= h; ++k) {
    std::vector<Label> kids;
    for (int c = 2; c <= k - 1; ++c) kids.push_back({c});
    if (k < h) {
      kids.push_back({k});
      kids.push_back({k + 1});
    } else {
      kids.push_back({h - 1});
      kids.push_back({h});
    }
    rule.productions[{k}] = std::move(kids);
  }
  return rule;
}

SuccessionRule omega2() {
  SuccessionRule rule{{1}, {}};
  rule.productions[{1}] = {{2}};
  rule.productions[{2}] = {{1}, {2}};
  return rule;
}

std::vector<std::vector<PathNode>> generate_tree(int h, int depth, int cap) {
  check_rule_h(h);
  check_level(depth, cap);
  std::vector<std::vector<PathNode>> levels;
  levels.push_back({PathNode{DyckPath{}, Label{1}, 0}});
  for (int level = 1; level <= depth; ++level) {
    levels.push_back(expand_level(levels.back(), h, level));
  }
  return levels;
}

std::vector<PathNode> generate_level(int h, int n, int cap) {
  check_rule_h(h);
  check_level(n, cap);
  std::vector<PathNode> current{PathNode{DyckPath{}, Label{1}, 0}};
  for (int level = 1; level <= n; ++level) {
    current = expand_level(current, h, level);
  }
  return current;
}

SymbolicCounts symbolic_counts(const SuccessionRule& rule, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "level must be >= 0");
  std::map<Label, BigInt> current{{rule.axiom, 1}};
  for (int level = 0; level < n; ++level) {
    std::map<Label, BigInt> next;
    for (const auto& [label, count] : current) {
      for (Label child : rule.children(label)) next[child] += count;
    }
    current = std::move(next);
  }
  SymbolicCounts out;
  out.total = 0;
  for (const auto& [label, count] : current) out.total += count;
  out.per_label = std::move(current);
  return out;
}

std::vector<Permutation> theta_perm(const Permutation& perm, int h) {
  check_rule_h(h);
  require_perm_in_class(perm, h);
  if (perm.empty()) return {Permutation::identity(1)};
  const int first = perm.first();
  const int max_ell = first < h ? first + 1 : h - 1;
  std::vector<Permutation> out;
  out.reserve(max_ell);
  for (int ell = 1; ell <= max_ell; ++ell) {
    out.push_back(prepend_rescaled(perm, ell));
  }
  return out;
}

Label label_of_perm(const Permutation& perm, int h) {
  check_rule_h(h);
  require_perm_in_class(perm, h);
  if (perm.empty()) return {1};
  const int first = perm.first();
  return {first != h ? first + 1 : first - 1};
}

std::vector<PermNode> generate_perm_level(int h, int n, int cap) {
  check_rule_h(h);
  check_level(n, cap);
  std::vector<PermNode> current{PermNode{Permutation{}, Label{1}, 0}};
  for (int level = 1; level <= n; ++level) {
    std::vector<PermNode> next;
    for (const PermNode& parent : current) {
      for (Permutation& child : theta_perm(parent.object, h)) {
        const Label label = label_of_perm(child, h);
        next.push_back({std::move(child), label, level});
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace vdyck
