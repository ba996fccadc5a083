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

#include "verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "json.hpp"
#include "vdyck/vdyck.hpp"

namespace vdyck::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxPathN = 12;
constexpr int kMaxPermN = 9;
constexpr int kMaxEcoN = 11;

int pick(int requested, int fallback) { return requested < 0 ? fallback : requested; }

void check_bound(const char* what, int value, int limit) {
  if (value > limit) {
    throw Error(ErrorCode::kCapExceeded, std::string(what) + " " +
                                             std::to_string(value) +
                                             " exceeds cap " +
                                             std::to_string(limit));
  }
}

class Recorder {
 public:
  explicit Recorder(std::string prefix) : prefix_(std::move(prefix)) {}

  // Starts a named check; `fail` records the first counterexample only.
  void begin(const std::string& name, std::string scope_detail) {
    results_.push_back({prefix_ + "." + name, true, std::move(scope_detail)});
  }
  void fail(const std::string& why) {
    if (results_.back().passed) {
      results_.back().passed = false;
      results_.back().detail += "; first failure: " + why;
    }
  }
  bool ok() const { return results_.back().passed; }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string prefix_;
  std::vector<CheckResult> results_;
};

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<CheckResult> verify_bijection(int n_max) {
  check_bound("bijection --n-max", n_max, kMaxPathN);
  const int perm_n = std::min(n_max, kMaxPermN);
  Recorder r("bijection");
  const std::string range = "n<=" + std::to_string(n_max);

  r.begin("path_round_trip", range);
  for (int n = 0; n <= n_max && r.ok(); ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      if (perm_to_path(path_to_perm(p)) != p) r.fail(p.str());
    }, kMaxPathN);
  }

  r.begin("image_avoids_312", range);
  for (int n = 0; n <= n_max && r.ok(); ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      if (!avoids_312(path_to_perm(p))) r.fail(p.str());
    }, kMaxPathN);
  }

  r.begin("perm_round_trip", "n<=" + std::to_string(perm_n));
  for (int n = 0; n <= perm_n && r.ok(); ++n) {
    for (const auto& e : all_perms(n)) {
      const Permutation pi = Permutation::from_entries(e);
      if (avoids_312(pi) && path_to_perm(perm_to_path(pi)) != pi) {
        r.fail(pi.str());
        break;
      }
    }
  }

  r.begin("lrm_excess_is_descent_height", range);
  for (int n = 0; n <= n_max && r.ok(); ++n) {
    for_each_dyck(n, [&](const DyckPath& p) {
      std::vector<int> runs;
      int level = 0;
      Step prev = Step::kUp;
      for (Step s : p.steps()) {
        level += s == Step::kUp ? 1 : -1;
        if (s == Step::kDown && prev == Step::kUp) runs.push_back(level);
        prev = s;
      }
      const auto heights = lrm_heights(path_to_perm(p));
      bool same = heights.size() == runs.size();
      for (std::size_t j = 0; same && j < runs.size(); ++j) {
        same = heights[j].height == runs[j];
      }
      if (!same) r.fail(p.str());
    }, kMaxPathN);
  }

  r.begin("restricted_images", "n<=" + std::to_string(perm_n) + ", h<=n+1");
  for (int n = 0; n <= perm_n && r.ok(); ++n) {
    std::vector<Permutation> perms;
    for (const auto& e : all_perms(n)) perms.push_back(Permutation::from_entries(e));
    const auto paths = enumerate_dyck(n, kMaxPathN);
    for (int h = 1; h <= n + 1 && r.ok(); ++h) {
      std::set<Permutation> bounded_img, restricted_img, bounded, restricted;
      for (const auto& p : paths) {
        if (height(p) <= h) bounded_img.insert(path_to_perm(p));
        if (in_class(p, h, 2)) restricted_img.insert(path_to_perm(p));
      }
      for (const auto& pi : perms) {
        if (in_bounded_class(pi, h)) bounded.insert(pi);
        if (in_restricted_class(pi, h)) restricted.insert(pi);
      }
      if (bounded != bounded_img || restricted != restricted_img) {
        r.fail("n=" + std::to_string(n) + " h=" + std::to_string(h));
      }
    }
  }
  return r.take();
}

std::vector<CheckResult> verify_identities(int n_max, int h_max, int alpha_max) {
  Recorder r("identities");

  r.begin("catalan_identity", "n<=" + std::to_string(n_max) +
                                  ", alpha<=" + std::to_string(alpha_max));
  for (int n = 1; n <= n_max; ++n) {
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
      const auto check = evaluate_catalan_identity(n, alpha);
      if (!check.holds) {
        r.fail("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) +
               (check.failure.empty() ? "" : " (" + check.failure + ")"));
      }
    }
  }

  r.begin("a_coeff_recurrence", "3<=h<=" + std::to_string(h_max));
  for (int h = 3; h <= h_max; ++h) {
    if (a_coeff(h, 1) != a_coeff(h - 1, 1) + 1) r.fail("h=" + std::to_string(h) + " j=1");
    for (int j = 2; j <= q_degree(h); ++j) {
      if (a_coeff(h, j) != a_coeff(h - 1, j) - a_coeff(h - 2, j - 1)) {
        r.fail("h=" + std::to_string(h) + " j=" + std::to_string(j));
      }
    }
  }

  r.begin("q_coefficients_are_negated_a", "2<=h<=" + std::to_string(h_max));
  for (int h = 2; h <= h_max; ++h) {
    const IntPolynomial q = q_poly(h);
    bool same = q.coefficient(0) == 1 && q.degree() == q_degree(h);
    for (int j = 1; same && j <= q_degree(h) + 2; ++j) {
      same = q.coefficient(j) == -a_coeff(h, j);
    }
    if (!same) r.fail("h=" + std::to_string(h));
  }

  r.begin("catalan_cutoff", "n<=h<=" + std::to_string(h_max));
  for (int h = 2; h <= h_max; ++h) {
    const auto seq = count_recurrence_sequence(h, h);
    for (int n = 0; n <= h; ++n) {
      if (seq[n] != catalan(n)) {
        r.fail("h=" + std::to_string(h) + " n=" + std::to_string(n));
      }
    }
  }
  return r.take();
}

std::vector<CheckResult> verify_eco(int n_max, int h_max) {
  check_bound("eco --n-max", n_max, kMaxEcoN);
  Recorder r("eco");
  const std::string range =
      "3<=h<=" + std::to_string(h_max) + ", n<=" + std::to_string(n_max);

  // Soundness, disjointness and completeness share one expansion per level.
  r.begin("theta_sound", range);
  std::vector<std::string> disjoint_fail, complete_fail, label_fail;
  for (int h = 3; h <= h_max; ++h) {
    const SuccessionRule rule = omega(h);
    std::vector<PathNode> level = generate_level(h, 0);
    for (int n = 0; n <= n_max; ++n) {
      std::map<DyckPath, int> hits;
      for (const PathNode& node : level) {
        std::multiset<Label> labels;
        for (const DyckPath& child : theta(node.object, h)) {
          if (!in_class(child, h, 2)) r.fail(child.str());
          ++hits[child];
          labels.insert(label_of(child, h));
        }
        const auto& want = rule.children(node.label);
        if (labels != std::multiset<Label>(want.begin(), want.end())) {
          label_fail.push_back(node.object.str());
        }
      }
      for (const auto& [path, count] : hits) {
        if (count > 1) disjoint_fail.push_back(path.str());
      }
      for_each_dyck(n + 1, [&](const DyckPath& p) {
        if (in_class(p, h, 2) && !hits.contains(p)) complete_fail.push_back(p.str());
      }, kMaxPathN);
      if (n < n_max) {
        std::vector<PathNode> next;
        for (const PathNode& node : level) {
          for (DyckPath& child : theta(node.object, h)) {
            const Label l = label_of(child, h);
            next.push_back({std::move(child), l, n + 1});
          }
        }
        level = std::move(next);
      }
    }
  }
  r.begin("theta_disjoint", range);
  if (!disjoint_fail.empty()) r.fail(disjoint_fail.front());
  r.begin("theta_complete", range);
  if (!complete_fail.empty()) r.fail(complete_fail.front());
  r.begin("label_coherence", range);
  if (!label_fail.empty()) r.fail(label_fail.front());

  r.begin("symbolic_matches_tree", range);
  for (int h = 3; h <= h_max; ++h) {
    const auto tree = generate_tree(h, n_max, kMaxEcoN);
    for (int n = 0; n <= n_max; ++n) {
      std::map<Label, BigInt> concrete;
      for (const auto& node : tree[n]) concrete[node.label] += 1;
      if (symbolic_counts(omega(h), n).per_label != concrete) {
        r.fail("h=" + std::to_string(h) + " n=" + std::to_string(n));
      }
    }
  }

  const int perm_n = std::min(n_max, 8);
  r.begin("perm_step_commutes", "3<=h<=" + std::to_string(h_max) +
                                    ", n<=" + std::to_string(perm_n));
  for (int h = 3; h <= h_max; ++h) {
    for (int n = 0; n <= perm_n; ++n) {
      for (const PathNode& node : generate_level(h, n)) {
        std::vector<Permutation> mapped;
        for (const auto& c : theta(node.object, h)) mapped.push_back(path_to_perm(c));
        if (mapped != theta_perm(path_to_perm(node.object), h)) {
          r.fail(node.object.str());
        }
      }
    }
  }
  return r.take();
}

std::vector<CheckResult> verify_matrix(int n_max, int h_max) {
  Recorder r("matrix");

  r.begin("rule_equals_block", "3<=h<=" + std::to_string(h_max));
  for (int h = 3; h <= h_max; ++h) {
    if (build_from_rule(omega(h)) != build_block(h)) r.fail("h=" + std::to_string(h));
  }
  if (build_from_rule(omega2()) != build_block(2)) r.fail("h=2");

  r.begin("row_sums_equal_labels", "2<=h<=" + std::to_string(h_max));
  for (int h = 2; h <= h_max; ++h) {
    const auto m = build_block(h);
    for (int row = 1; row <= h; ++row) {
      if (m.row_sum(row) != row) r.fail("h=" + std::to_string(h));
    }
  }

  r.begin("per_label_matches_symbolic",
          "3<=h<=" + std::to_string(h_max) + ", n<=" + std::to_string(n_max));
  for (int h = 3; h <= h_max; ++h) {
    const auto m = build_block(h);
    for (int n = 0; n <= n_max; ++n) {
      const auto sym = symbolic_counts(omega(h), n);
      const auto lvl = level_count(m, {1}, n);
      for (int label = 1; label <= h; ++label) {
        auto it = sym.per_label.find({label});
        const BigInt want = it == sym.per_label.end() ? BigInt(0) : it->second;
        if (lvl.per_label.counts[label - 1] != want) {
          r.fail("h=" + std::to_string(h) + " n=" + std::to_string(n));
        }
      }
    }
  }

  const int brute_n = std::min(n_max, kMaxPathN);
  r.begin("count_methods_agree", "2<=h<=" + std::to_string(h_max) +
                                     ", n<=" + std::to_string(n_max) +
                                     " (brute/eco n<=" + std::to_string(brute_n) + ")");
  for (int h = 2; h <= h_max; ++h) {
    const auto rec = count_by_method("recurrence", h, n_max, 2, -1);
    std::vector<std::pair<std::string, std::vector<BigInt>>> others = {
        {"series", count_by_method("series", h, n_max, 2, -1)},
        {"matrix", count_by_method("matrix", h, n_max, 2, -1)},
        {"brute", count_by_method("brute", h, brute_n, 2, kMaxPathN)},
    };
    if (h >= 3) {
      others.push_back({"eco", count_by_method("eco", h, std::min(brute_n, kMaxEcoN), 2, kMaxEcoN)});
    }
    for (const auto& [name, seq] : others) {
      for (std::size_t n = 0; n < seq.size(); ++n) {
        if (seq[n] != rec[n]) {
          r.fail(name + " h=" + std::to_string(h) + " n=" + std::to_string(n));
        }
      }
    }
  }
  return r.take();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const std::string& s = opts.scope;
  if (s != "all" && s != "bijection" && s != "identities" && s != "eco" &&
      s != "matrix") {
    throw Error(ErrorCode::kInvalidArgument, "unknown scope '" + s + "'");
  }
  if (opts.alpha_max < 0) {
    throw Error(ErrorCode::kInvalidArgument, "--alpha-max must be >= 0");
  }
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  if (s == "all" || s == "bijection") append(verify_bijection(pick(opts.n_max, 9)));
  if (s == "all" || s == "identities") {
    append(verify_identities(pick(opts.n_max, 12), pick(opts.h_max, 14), opts.alpha_max));
  }
  if (s == "all" || s == "eco") append(verify_eco(pick(opts.n_max, 9), pick(opts.h_max, 5)));
  if (s == "all" || s == "matrix") append(verify_matrix(pick(opts.n_max, 10), pick(opts.h_max, 10)));
  return out;
}

int cmd_verify(const VerifyOptions& opts, Format format, std::ostream& out,
               std::ostream& err) {
  if (format == Format::kCsv) {
    err << "error: verify supports text or json\n";
    return kExitUsage;
  }
  const auto results = run_verification(opts);
  const bool all_passed = std::all_of(results.begin(), results.end(),
                                      [](const CheckResult& c) { return c.passed; });
  if (format == Format::kJson) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    j["scope"] = opts.scope;
    j["passed"] = all_passed;
    Json arr = Json::array();
    for (const auto& c : results) {
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : results) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.detail << "]\n";
    }
    out << (all_passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace vdyck::cli
