#include "broomrank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace broomrank::oracle {

RootedTree::RootedTree() : RootedTree(std::vector<int>{-1}) {}

RootedTree::RootedTree(std::vector<int> parents)
    : parents_(std::move(parents)), children_(parents_.size()) {
  for (std::size_t v = 1; v < parents_.size(); ++v) {
    children_[static_cast<std::size_t>(parents_[v])].push_back(static_cast<int>(v));
  }
}

RootedTree RootedTree::from_parents(std::span<const int> parents) {
  const auto count = parents.size();
  if (count == 0) throw std::invalid_argument("RootedTree: empty tree");
  if (parents[0] != -1) throw std::invalid_argument("RootedTree: node 0 must be the root");
  for (std::size_t v = 1; v < count; ++v) {
    if (parents[v] < 0 || static_cast<std::size_t>(parents[v]) >= count ||
        static_cast<std::size_t>(parents[v]) == v) {
      throw std::invalid_argument("RootedTree: bad parent for node " + std::to_string(v));
    }
  }
  // 0 = unvisited, 1 = on current path, 2 = reaches the root
  std::vector<char> state(count, 0);
  state[0] = 2;
  std::vector<std::size_t> path;
  for (std::size_t v = 1; v < count; ++v) {
    std::size_t u = v;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = static_cast<std::size_t>(parents[u]);
    }
    if (state[u] == 1) throw std::invalid_argument("RootedTree: cycle through node " + std::to_string(u));
    for (auto w : path) state[w] = 2;
    path.clear();
  }
  return RootedTree(std::vector<int>(parents.begin(), parents.end()));
}

std::vector<int> RootedTree::top_down_order() const {
  std::vector<int> order{0};
  order.reserve(size());
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto& kids = children(order[head]);
    order.insert(order.end(), kids.begin(), kids.end());
  }
  return order;
}

RootedTree broom_tree(int m, int k) {
  if (m < 1) throw std::invalid_argument("broom_tree: m must be >= 1");
  if (k < 0) throw std::invalid_argument("broom_tree: k must be >= 0");
  std::vector<int> parents{-1};
  for (int v = 1; v <= k; ++v) parents.push_back(v - 1);
  for (int leaf = 0; leaf < m; ++leaf) parents.push_back(k);
  return RootedTree::from_parents(parents);
}

RootedTree merge(const RootedTree& t1, const RootedTree& t2) {
  std::vector<int> parents{-1};
  parents.reserve(t1.size() + t2.size() - 1);
  for (std::size_t v = 1; v < t1.size(); ++v) parents.push_back(t1.parent(static_cast<int>(v)));
  // t2's node v (v >= 1) becomes shift + v; its root maps onto node 0.
  const int shift = static_cast<int>(t1.size()) - 1;
  for (std::size_t v = 1; v < t2.size(); ++v) {
    const int p = t2.parent(static_cast<int>(v));
    parents.push_back(p == 0 ? 0 : p + shift);
  }
  return RootedTree::from_parents(parents);
}

RootedTree merged_brooms(const BroomPair& pair) {
  return merge(broom_tree(pair.m(), pair.p()), broom_tree(pair.n(), pair.q()));
}

RankSequence subtree_polynomial(const RootedTree& t) {
  // poly[v][d] = coefficient of x^d in P_v
  std::vector<std::vector<BigInt>> poly(t.size());
  const auto order = t.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<BigInt> acc{0, 1};  // x
    for (int c : t.children(v)) {
      auto& pc = poly[static_cast<std::size_t>(c)];
      std::vector<BigInt> next(acc.size() + pc.size() - 1);
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (acc[a].is_zero()) continue;
        next[a] += acc[a];
        for (std::size_t b = 0; b < pc.size(); ++b) next[a + b] += acc[a] * pc[b];
      }
      acc = std::move(next);
      pc.clear();
      pc.shrink_to_fit();
    }
    poly[static_cast<std::size_t>(v)] = std::move(acc);
  }
  auto& root = poly[0];
  return RankSequence{IntSeq(1, std::vector<BigInt>(root.begin() + 1, root.end()))};
}

RankSequence subtree_counts_exhaustive(const RootedTree& t, std::size_t max_nodes) {
  const std::size_t count = t.size();
  if (count > max_nodes || count > 63) {
    throw std::length_error("subtree_counts_exhaustive: tree too large");
  }
  std::vector<BigInt> counts(count, 0);
  const std::uint64_t subsets = std::uint64_t{1} << (count - 1);
  std::vector<int> stack;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const std::uint64_t members = (bits << 1) | 1u;  // root always present
    // Flood from the root through members only.
    std::uint64_t reached = 1;
    stack.assign(1, 0);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      std::vector<int> neighbours = t.children(v);
      if (v != 0) neighbours.push_back(t.parent(v));
      for (int w : neighbours) {
        const std::uint64_t bit = std::uint64_t{1} << w;
        if ((members & bit) && !(reached & bit)) {
          reached |= bit;
          stack.push_back(w);
        }
      }
    }
    if (reached == members) ++counts[static_cast<std::size_t>(std::popcount(members) - 1)];
  }
  return RankSequence{IntSeq(1, std::move(counts))};
}

std::string ahu_canonical(const RootedTree& t) {
  std::vector<std::string> code(t.size());
  const auto order = t.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<std::string> kids;
    for (int c : t.children(v)) kids.push_back(std::move(code[static_cast<std::size_t>(c)]));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ')';
    code[static_cast<std::size_t>(v)] = std::move(s);
  }
  return code[0];
}

}  // namespace broomrank::oracle
