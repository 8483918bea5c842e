#include "broomrank/oracle.hpp"

#include <functional>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace broomrank::oracle {
namespace {

RankSequence seq(std::initializer_list<std::int64_t> xs) { return RankSequence{IntSeq(1, xs)}; }

int depth(const RootedTree& t, int v) {
  int d = 0;
  for (; v != t.root(); v = t.parent(v)) ++d;
  return d;
}

TEST(RootedTree, RejectsMalformedParentArrays) {
  EXPECT_THROW(RootedTree::from_parents(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(RootedTree::from_parents(std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(RootedTree::from_parents(std::vector<int>{-1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(RootedTree::from_parents(std::vector<int>{-1, -1}), std::invalid_argument);
  EXPECT_THROW(RootedTree::from_parents(std::vector<int>{-1, 5}), std::invalid_argument);
  EXPECT_NO_THROW(RootedTree::from_parents(std::vector<int>{-1, 2, 0}));
}

TEST(BroomTree, Shapes) {
  const auto fig_left = broom_tree(3, 2);
  EXPECT_EQ(fig_left.size(), 6u);
  EXPECT_EQ(broom_tree(1, 0).size(), 2u);

  const auto t = broom_tree(2, 3);
  EXPECT_EQ(t.size(), 6u);
  int leaves = 0;
  for (int v = 0; v < static_cast<int>(t.size()); ++v) {
    if (t.children(v).empty()) {
      ++leaves;
      EXPECT_EQ(depth(t, v), 4);
    }
  }
  EXPECT_EQ(leaves, 2);
  EXPECT_THROW(broom_tree(0, 1), std::invalid_argument);
}

TEST(Merge, Examples) {
  const auto fig = merge(broom_tree(3, 2), broom_tree(2, 3));
  EXPECT_EQ(fig.size(), 11u);
  EXPECT_EQ(fig.children(fig.root()).size(), 2u);
  EXPECT_EQ(subtree_polynomial(fig), seq({1, 2, 3, 6, 10, 11, 10, 11, 10, 5, 1}));

  const auto t = broom_tree(3, 2);
  EXPECT_EQ(ahu_canonical(merge(t, RootedTree())), ahu_canonical(t));
  EXPECT_EQ(merge(t, RootedTree()).size(), t.size());

  const auto star = merge(broom_tree(1, 0), broom_tree(1, 0));
  EXPECT_EQ(star.size(), 3u);
  EXPECT_EQ(ahu_canonical(star), ahu_canonical(broom_tree(2, 0)));
}

TEST(SubtreePolynomial, PathsAndStars) {
  for (int len = 1; len <= 12; ++len) {
    std::vector<int> parents{-1};
    for (int v = 1; v < len; ++v) parents.push_back(v - 1);
    const auto r = subtree_polynomial(RootedTree::from_parents(parents));
    EXPECT_EQ(r.size(), static_cast<std::size_t>(len));
    for (std::int64_t i = 1; i <= len; ++i) EXPECT_EQ(r.at(i), 1);
  }
  for (int m = 1; m <= 15; ++m) {
    const auto r = subtree_polynomial(broom_tree(m, 0));
    for (int i = 1; i <= m + 1; ++i) EXPECT_EQ(r.at(i), binomial(m, i - 1));
  }
}

// Rank sequences multiply under root merge.
TEST(SubtreePolynomial, MergeIsConvolution) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = testing::random_tree(rng, size(rng));
    const auto b = testing::random_tree(rng, size(rng));
    const auto merged = subtree_polynomial(merge(a, b));
    ASSERT_EQ(merged.whitney, convolve(subtree_polynomial(a).whitney, subtree_polynomial(b).whitney));
    ASSERT_EQ(merged.at(1), 1);
    ASSERT_EQ(merged.at(static_cast<std::int64_t>(merged.size())), 1);
  }
}

TEST(SubtreePolynomial, MatchesExhaustiveSubsetEnumeration) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> size(1, 14);
  for (int trial = 0; trial < 150; ++trial) {
    const auto t = testing::random_tree(rng, size(rng));
    ASSERT_EQ(subtree_polynomial(t), subtree_counts_exhaustive(t));
  }
  const auto fig = merge(broom_tree(3, 2), broom_tree(2, 3));
  EXPECT_EQ(subtree_counts_exhaustive(fig), seq({1, 2, 3, 6, 10, 11, 10, 11, 10, 5, 1}));
  EXPECT_THROW(subtree_counts_exhaustive(broom_tree(30, 0)), std::length_error);
}

TEST(SubtreePolynomial, HandlesDeepTrees) {
  std::vector<int> parents{-1};
  for (int v = 1; v < 5000; ++v) parents.push_back(v - 1);
  const auto r = subtree_polynomial(RootedTree::from_parents(parents));
  EXPECT_EQ(r.size(), 5000u);
  EXPECT_EQ(r.sum(), 5000);
}

TEST(AhuCanonical, Examples) {
  EXPECT_EQ(ahu_canonical(merge(broom_tree(3, 2), broom_tree(2, 3))),
            ahu_canonical(merge(broom_tree(2, 3), broom_tree(3, 2))));
  EXPECT_EQ(ahu_canonical(broom_tree(2, 0)), ahu_canonical(merge(broom_tree(1, 0), broom_tree(1, 0))));
  EXPECT_NE(ahu_canonical(broom_tree(3, 1)), ahu_canonical(broom_tree(1, 3)));
  EXPECT_EQ(ahu_canonical(RootedTree()), "()");
  EXPECT_EQ(ahu_canonical(broom_tree(2, 1)), "((()()))");
}

TEST(AhuCanonical, InvariantUnderChildReordering) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> size(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = testing::random_tree(rng, size(rng));
    ASSERT_EQ(ahu_canonical(t), ahu_canonical(testing::relabel(t, rng)));
  }
}

// Distinguishes non-isomorphic trees: on 6 nodes there are exactly 20 rooted
// unlabeled trees (OEIS A000081).
TEST(AhuCanonical, CountsRootedTreesOnSixNodes) {
  std::set<std::string> forms;
  // Every parent array with parent[v] < v, which covers every rooted shape.
  std::vector<int> parents{-1, 0, 0, 0, 0, 0};
  std::function<void(int)> fill = [&](int v) {
    if (v == 6) {
      forms.insert(ahu_canonical(RootedTree::from_parents(parents)));
      return;
    }
    for (int p = 0; p < v; ++p) {
      parents[static_cast<std::size_t>(v)] = p;
      fill(v + 1);
    }
  };
  fill(1);
  EXPECT_EQ(forms.size(), 20u);
}

}  // namespace
}  // namespace broomrank::oracle
