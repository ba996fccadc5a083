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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits non-zero if any criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vdyck/vdyck.hpp"

namespace vdyck {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string nh(int n, int h) {
  return "n=" + std::to_string(n) + " h=" + std::to_string(h);
}

Outcome table_regression() {
  Outcome o;
  for (int h = 1; h <= 14; ++h)
    for (int j = 1; j <= 8; ++j)
      if (a_coeff(h, j) != oracle::kTable1[h - 1][j - 1])
        o.fail("a(" + std::to_string(h) + "," + std::to_string(j) + ")");
  o.detail = o.passed ? "112 entries, h=1..14, j=1..8" : o.detail;
  return o;
}

Outcome fibonacci() {
  Outcome o;
  if (series(gf(2), 16) != oracle::fibonacci(17)) o.fail("series(gf(2),16)");
  if (o.passed) o.detail = "17 terms";
  return o;
}

Outcome degenerate_height() {
  Outcome o;
  std::vector<BigInt> want(11, BigInt(0));
  want[0] = want[1] = 1;
  if (series(gf(1), 10) != want) o.fail("series(gf(1),10)");
  if (o.passed) o.detail = "1,1,0,...,0";
  return o;
}

Outcome catalan_cutoff() {
  Outcome o;
  const auto c = oracle::catalan_by_recurrence(12);
  for (int h = 1; h <= 12; ++h)
    for (int n = 0; n <= h; ++n)
      if (count_recurrence(h, n) != c[n]) o.fail(nh(n, h));
  if (o.passed) o.detail = "0<=n<=h<=12";
  return o;
}

Outcome catalan_identity_sweep() {
  Outcome o;
  for (int n = 1; n <= 12; ++n)
    for (int alpha = 0; alpha <= 6; ++alpha)
      if (!catalan_identity(n, alpha))
        o.fail("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha));
  if (o.passed) o.detail = "1<=n<=12, 0<=alpha<=6";
  return o;
}

Outcome four_way_agreement() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  constexpr int kN = 12;
  for (int h = 2; h <= 7; ++h) {
    std::vector<BigInt> brute;
    for (int n = 0; n <= kN; ++n) brute.push_back(count_brute(n, h, 2));
    const auto rec = count_recurrence_sequence(h, kN);
    const auto ser = series(gf(h), kN);
    const auto m = build_block(h);
    for (int n = 0; n <= kN; ++n) {
      if (rec[n] != brute[n]) o.fail("recurrence " + nh(n, h));
      if (ser[n] != brute[n]) o.fail("series " + nh(n, h));
      if (level_count(m, {1}, n).total != brute[n]) o.fail("matrix " + nh(n, h));
    }
    if (h >= 3) {
      const auto tree = generate_tree(h, kN);
      for (int n = 0; n <= kN; ++n) {
        if (BigInt(tree[n].size()) != brute[n]) o.fail("eco " + nh(n, h));
        if (symbolic_counts(omega(h), n).total != brute[n]) o.fail("rule " + nh(n, h));
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 120.0) o.fail("runtime " + std::to_string(secs) + "s exceeds 120s");
  if (o.passed) o.detail = "h=2..7, n<=12, " + std::to_string(secs).substr(0, 5) + "s";
  return o;
}

Outcome bijection_round_trips() {
  Outcome o;
  for (int n = 0; n <= 10; ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      if (perm_to_path(path_to_perm(p)) != p) o.fail("path " + p.str());
    });
  }
  // The stack-based 312 check is cross-validated against the cubic
  // definition before it is used to filter n = 9.
  for (int n = 0; n <= 8; ++n) {
    for (const auto& e : oracle::all_permutations(n)) {
      if (avoids_312(Permutation::from_entries(e)) == oracle::contains_312_cubic(e)) {
        o.fail("312 check disagrees on n=" + std::to_string(n));
      }
    }
  }
  std::size_t avoiders = 0;
  for (int n = 0; n <= 9; ++n) {
    for (const auto& e : oracle::all_permutations(n)) {
      const Permutation pi = Permutation::from_entries(e);
      if (!avoids_312(pi)) continue;
      ++avoiders;
      if (path_to_perm(perm_to_path(pi)) != pi) o.fail("perm " + pi.str());
    }
  }
  if (o.passed) {
    o.detail = "paths n<=10; " + std::to_string(avoiders) + " 312-avoiders n<=9";
  }
  return o;
}

Outcome lrm_height_property() {
  Outcome o;
  for (int n = 0; n <= 9; ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      const Permutation pi = path_to_perm(p);
      const auto maxima = left_to_right_maxima(pi);
      const auto runs = oracle::first_down_heights(p);
      if (maxima.size() != runs.size()) {
        o.fail(p.str());
        return;
      }
      for (std::size_t j = 0; j < runs.size(); ++j) {
        if (maxima[j].value - maxima[j].index != runs[j]) o.fail(p.str());
      }
    });
  }
  if (o.passed) o.detail = "n<=9";
  return o;
}

Outcome image_characterizations() {
  Outcome o;
  for (int n = 0; n <= 9; ++n) {
    const auto paths = enumerate_dyck(n);
    std::vector<Permutation> perms;
    for (const auto& e : oracle::all_permutations(n)) {
      perms.push_back(Permutation::from_entries(e));
    }
    for (int h = 1; h <= n + 1; ++h) {
      std::set<Permutation> bounded_img, restricted_img, bounded, restricted;
      for (const auto& p : paths) {
        if (height(p) <= h) bounded_img.insert(path_to_perm(p));
        if (in_class(p, h, 2)) restricted_img.insert(path_to_perm(p));
      }
      for (const auto& pi : perms) {
        if (in_bounded_class(pi, h)) bounded.insert(pi);
        if (in_restricted_class(pi, h)) restricted.insert(pi);
      }
      if (bounded != bounded_img) o.fail("height image " + nh(n, h));
      if (restricted != restricted_img) o.fail("valley image " + nh(n, h));
    }
  }
  if (o.passed) o.detail = "n<=9, 1<=h<=n+1";
  return o;
}

Outcome eco_soundness() {
  Outcome o;
  for (int h = 3; h <= 5; ++h) {
    for (int n = 0; n <= 9; ++n) {
      std::map<DyckPath, int> hits;
      for (const PathNode& node : generate_level(h, n)) {
        for (const DyckPath& child : theta(node.object, h)) {
          if (child.semilength() != static_cast<std::size_t>(n + 1) ||
              !in_class(child, h, 2)) {
            o.fail("unsound child " + child.str());
          }
          if (++hits[child] > 1) o.fail("not disjoint at " + child.str());
        }
      }
      std::size_t members = 0;
      for_each_dyck(n + 1, [&](const DyckPath& p) {
        if (!in_class(p, h, 2)) return;
        ++members;
        if (!hits.contains(p)) o.fail("not covered: " + p.str());
      });
      if (members != hits.size()) o.fail("coverage size " + nh(n + 1, h));
    }
  }
  if (o.passed) o.detail = "h=3..5, n<=9";
  return o;
}

Outcome rule_matrix_coherence() {
  Outcome o;
  for (int h = 3; h <= 10; ++h) {
    if (build_from_rule(omega(h)) != build_block(h)) o.fail("P_" + std::to_string(h));
  }
  if (build_from_rule(omega2()) != build_block(2)) o.fail("P_2");
  for (int h = 3; h <= 6; ++h) {
    const auto m = build_block(h);
    for (int n = 0; n <= 10; ++n) {
      const auto sym = symbolic_counts(omega(h), n);
      const auto lvl = level_count(m, {1}, n);
      for (int label = 1; label <= h; ++label) {
        auto it = sym.per_label.find({label});
        const BigInt want = it == sym.per_label.end() ? BigInt(0) : it->second;
        if (lvl.per_label.counts[label - 1] != want) o.fail("per-label " + nh(n, h));
      }
    }
  }
  if (o.passed) o.detail = "h=3..10 structure; per-label h<=6, n<=10";
  return o;
}

Outcome coefficient_recurrence() {
  Outcome o;
  for (int h = 3; h <= 14; ++h) {
    if (a_coeff(h, 1) != a_coeff(h - 1, 1) + 1) o.fail("j=1 h=" + std::to_string(h));
    for (int j = 2; j <= q_degree(h); ++j) {
      if (a_coeff(h, j) != a_coeff(h - 1, j) - a_coeff(h - 2, j - 1)) {
        o.fail("h=" + std::to_string(h) + " j=" + std::to_string(j));
      }
    }
  }
  if (o.passed) o.detail = "h<=14";
  return o;
}

}  // namespace
}  // namespace vdyck

int main() {
  using vdyck::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC01 coefficient table regression", vdyck::table_regression},
      {"AC02 Fibonacci series for h=2", vdyck::fibonacci},
      {"AC03 degenerate h=1 series", vdyck::degenerate_height},
      {"AC04 Catalan cutoff", vdyck::catalan_cutoff},
      {"AC05 Catalan identity sweep", vdyck::catalan_identity_sweep},
      {"AC06 four-way count agreement", vdyck::four_way_agreement},
      {"AC07 bijection round trips", vdyck::bijection_round_trips},
      {"AC08 l.r.M excess equals descent height", vdyck::lrm_height_property},
      {"AC09 image characterizations", vdyck::image_characterizations},
      {"AC10 ECO soundness", vdyck::eco_soundness},
      {"AC11 rule/matrix coherence", vdyck::rule_matrix_coherence},
      {"AC12 coefficient recurrence", vdyck::coefficient_recurrence},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s (%s)\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
