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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "vdyck/bijection.hpp"
#include "vdyck/error.hpp"

namespace vdyck {
namespace {

std::vector<std::string> strs(const std::vector<DyckPath>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.str());
  return out;
}

std::vector<int> values(const std::vector<Label>& labels) {
  std::vector<int> out;
  for (Label l : labels) out.push_back(l.value);
  return out;
}

TEST(ThetaTest, Examples) {
  EXPECT_EQ(strs(theta(DyckPath{}, 3)), (std::vector<std::string>{"UD"}));
  EXPECT_EQ(strs(theta(parse_path("UD"), 3)),
            (std::vector<std::string>{"UDUD", "UUDD"}));
  EXPECT_EQ(strs(theta(parse_path("UUUDDD"), 3)),
            (std::vector<std::string>{"UDUUUDDD", "UUDUUDDD"}));
}

TEST(ThetaTest, RejectsPathsOutsideTheClass) {
  try {
    theta(parse_path("UUUDUDDD"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInClass);
  }
  EXPECT_THROW(theta(parse_path("UUUUDDDD"), 3), Error);
  EXPECT_THROW(theta(DyckPath{}, 2), Error);
}

TEST(LabelOfTest, Examples) {
  EXPECT_EQ(label_of(DyckPath{}, 3), Label{1});
  EXPECT_EQ(label_of(parse_path("UUDD"), 3), Label{3});
  EXPECT_EQ(label_of(parse_path("UUUDDD"), 3), Label{2});
}

TEST(OmegaTest, RuleForThree) {
  const SuccessionRule r = omega(3);
  EXPECT_EQ(r.axiom, Label{1});
  EXPECT_EQ(values(r.children({1})), (std::vector<int>{2}));
  EXPECT_EQ(values(r.children({2})), (std::vector<int>{2, 3}));
  EXPECT_EQ(values(r.children({3})), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(r.productions.size(), 3u);
}

TEST(OmegaTest, TopProductionForFour) {
  EXPECT_EQ(values(omega(4).children({4})), (std::vector<int>{2, 3, 3, 4}));
  EXPECT_EQ(values(omega(4).children({3})), (std::vector<int>{2, 3, 4}));
}

TEST(OmegaTest, LabelKHasKChildren) {
  for (int h = 3; h <= 12; ++h) {
    for (const auto& [label, kids] : omega(h).productions) {
      EXPECT_EQ(static_cast<int>(kids.size()), label.value);
    }
  }
  for (const auto& [label, kids] : omega2().productions) {
    EXPECT_EQ(static_cast<int>(kids.size()), label.value);
  }
  EXPECT_THROW(omega(2), Error);
}

TEST(Omega2Test, Fibonacci) {
  const int expected[] = {1, 1, 2, 3, 5, 8, 13};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(symbolic_counts(omega2(), n).total, expected[n]);
  }
  EXPECT_EQ(symbolic_counts(omega2(), 4).total, 5);
  EXPECT_EQ(symbolic_counts(omega2(), 10).total, 89);
}

TEST(SymbolicCountsTest, Examples) {
  const auto zero = symbolic_counts(omega(3), 0);
  EXPECT_EQ(zero.total, 1);
  EXPECT_EQ(zero.per_label, (std::map<Label, BigInt>{{{1}, 1}}));
  EXPECT_EQ(symbolic_counts(omega(3), 3).total, 5);
}

TEST(GenerateLevelTest, Examples) {
  const auto zero = generate_level(3, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].object.empty());
  EXPECT_EQ(zero[0].label, Label{1});

  const auto two = generate_level(3, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].object.str(), "UDUD");
  EXPECT_EQ(two[0].label, Label{2});
  EXPECT_EQ(two[1].object.str(), "UUDD");
  EXPECT_EQ(two[1].label, Label{3});
  EXPECT_EQ(two[1].level, 2);

  EXPECT_EQ(generate_level(3, 4).size(), 12u);
  EXPECT_THROW(generate_level(3, 13), Error);
}

TEST(GenerateLevelTest, TreeLevelsMatchGenerateLevel) {
  const auto tree = generate_tree(4, 6);
  ASSERT_EQ(tree.size(), 7u);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(tree[n], generate_level(4, n));
}

TEST(EcoTest, SoundDisjointAndComplete) {
  for (int h = 3; h <= 5; ++h) {
    for (int n = 0; n <= 8; ++n) {
      std::map<DyckPath, int> hits;
      for (const PathNode& node : generate_level(h, n)) {
        for (const DyckPath& child : theta(node.object, h)) {
          ASSERT_TRUE(in_class(child, h, 2)) << child.str();
          ASSERT_EQ(child.semilength(), static_cast<std::size_t>(n + 1));
          ++hits[child];
        }
      }
      std::size_t expected = 0;
      for_each_dyck(n + 1, [&](const DyckPath& p) {
        if (!in_class(p, h, 2)) return;
        ++expected;
        auto it = hits.find(p);
        ASSERT_NE(it, hits.end()) << "missing " << p.str();
        ASSERT_EQ(it->second, 1) << "duplicate " << p.str();
      });
      ASSERT_EQ(hits.size(), expected);
    }
  }
}

TEST(EcoTest, ChildLabelsFollowTheRule) {
  for (int h = 3; h <= 6; ++h) {
    const SuccessionRule rule = omega(h);
    for (int n = 0; n <= 7; ++n) {
      for (const PathNode& node : generate_level(h, n)) {
        std::multiset<Label> got;
        for (const auto& child : theta(node.object, h)) {
          got.insert(label_of(child, h));
        }
        const auto& want = rule.children(node.label);
        ASSERT_EQ(got, std::multiset<Label>(want.begin(), want.end()))
            << node.object.str();
      }
    }
  }
}

TEST(EcoTest, SymbolicPerLabelMatchesConcreteTree) {
  for (int h = 3; h <= 6; ++h) {
    for (int n = 0; n <= 9; ++n) {
      std::map<Label, BigInt> concrete;
      for (const PathNode& node : generate_level(h, n)) concrete[node.label] += 1;
      const auto symbolic = symbolic_counts(omega(h), n);
      ASSERT_EQ(symbolic.per_label, concrete) << h << "," << n;
      ASSERT_EQ(symbolic.total, count_brute(n, h, 2));
    }
  }
}

TEST(ThetaPermTest, Examples) {
  const auto one = Permutation::identity(1);
  EXPECT_EQ(theta_perm(Permutation{}, 3), (std::vector<Permutation>{one}));
  EXPECT_EQ(theta_perm(one, 3),
            (std::vector<Permutation>{Permutation::from_entries({1, 2}),
                                      Permutation::from_entries({2, 1})}));
  EXPECT_EQ(label_of_perm(Permutation{}, 3), Label{1});
  EXPECT_EQ(label_of_perm(one, 3), Label{2});
  EXPECT_EQ(label_of_perm(Permutation::from_entries({3, 2, 1}), 3), Label{2});
  EXPECT_THROW(theta_perm(Permutation::from_entries({3, 4, 2, 1}), 3), Error);
}

TEST(ThetaPermTest, CommutesWithTheBijection) {
  for (int h = 3; h <= 5; ++h) {
    for (int n = 0; n <= 8; ++n) {
      for (const PathNode& node : generate_level(h, n)) {
        const Permutation pi = path_to_perm(node.object);
        std::vector<Permutation> mapped;
        for (const auto& child : theta(node.object, h)) {
          mapped.push_back(path_to_perm(child));
        }
        // Same order, not just the same set.
        ASSERT_EQ(mapped, theta_perm(pi, h)) << node.object.str();
        ASSERT_EQ(label_of_perm(pi, h), node.label);
      }
    }
  }
}

TEST(ThetaPermTest, PermLevelIsImageOfPathLevel) {
  for (int n = 0; n <= 7; ++n) {
    const auto paths = generate_level(4, n);
    const auto perms = generate_perm_level(4, n);
    ASSERT_EQ(paths.size(), perms.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      ASSERT_EQ(path_to_perm(paths[i].object), perms[i].object);
      ASSERT_EQ(paths[i].label, perms[i].label);
    }
  }
}

}  // namespace
}  // namespace vdyck
