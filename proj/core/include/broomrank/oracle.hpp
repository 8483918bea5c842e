#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "broomrank/broom.hpp"

namespace broomrank::oracle {

// Immutable rooted tree. Node 0 is the root; child order is not significant.
class RootedTree {
 public:
  // A single root node.
  RootedTree();

  // parents[0] must be -1; every other entry names the parent of that node.
  // Throws std::invalid_argument on cycles, out-of-range parents or a second root.
  static RootedTree from_parents(std::span<const int> parents);

  std::size_t size() const { return children_.size(); }
  int root() const { return 0; }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  int parent(int v) const { return parents_[static_cast<std::size_t>(v)]; }

  // Nodes ordered so every parent precedes its children.
  std::vector<int> top_down_order() const;

 private:
  explicit RootedTree(std::vector<int> parents);

  std::vector<int> parents_;
  std::vector<std::vector<int>> children_;
};

// Handle of k edges from the root, the last handle vertex carrying m leaves.
RootedTree broom_tree(int m, int k);

// Identify the two roots.
RootedTree merge(const RootedTree& t1, const RootedTree& t2);

RootedTree merged_brooms(const BroomPair& pair);

// Coefficients of P_root(x), where P_v(x) = x * prod_{c child of v} (1 + P_c(x)).
RankSequence subtree_polynomial(const RootedTree& t);

// Second oracle: walks every vertex subset containing the root and keeps the
// connected ones. Refuses trees above max_nodes (cost 2^(size-1)).
RankSequence subtree_counts_exhaustive(const RootedTree& t, std::size_t max_nodes = 24);

// Parenthesized encoding with recursively sorted children. Equal strings iff
// the rooted trees are isomorphic.
std::string ahu_canonical(const RootedTree& t);

}  // namespace broomrank::oracle
