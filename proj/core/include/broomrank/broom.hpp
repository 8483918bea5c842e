#pragma once

#include <cstdint>
#include <string>

#include "broomrank/seqcore.hpp"

namespace broomrank {

// Two brooms B_{m,p} and B_{n,q} merged at their roots.
//
// B_{m,p} is a handle of p edges from the root ending in a vertex with m
// pendant leaves. The pair is stored canonically: m > n, or m == n and p <= q.
// Construction swaps (m,p) <-> (n,q) when needed, since the merged tree does
// not depend on which broom is named first.
class BroomPair {
 public:
  // Throws std::invalid_argument unless m, n >= 1 and p, q >= 0.
  BroomPair(int m, int p, int n, int q);

  int m() const { return m_; }
  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }

  int vertex_count() const { return m_ + n_ + p_ + q_ + 1; }

  auto operator<=>(const BroomPair&) const = default;

  // "m=3 p=2 n=2 q=3"
  std::string to_string() const;

 private:
  int m_, p_, n_, q_;
};

// Whitney numbers of C(T, r): entry i counts rooted subtrees with i vertices.
struct RankSequence {
  IntSeq whitney{1};

  std::size_t size() const { return whitney.size(); }
  BigInt at(std::int64_t i) const { return whitney.at(i); }
  BigInt sum() const { return whitney.sum(); }
  std::string to_string() const { return whitney.to_string(); }

  bool operator==(const RankSequence&) const = default;
};

// (1 x p, C(m,0), ..., C(m,m)). Built from Pascal's recurrence, not binomial().
RankSequence broom_rank(int m, int p);

RankSequence rank_convolution(const BroomPair& pair);

// Five-case closed formula in binomial coefficients.
RankSequence rank_closed(const BroomPair& pair);
RankSequence rank_closed(const BroomPair& pair, const BinomialFn& binom);

// d_i = r_i - r_{i-1} for i >= 2 (offset 2).
IntSeq first_differences(const RankSequence& r);

// Closed-form first difference at index i, zero-extended outside the tree.
BigInt diff_closed(const BroomPair& pair, std::int64_t i);
BigInt diff_closed(const BroomPair& pair, std::int64_t i, const BinomialFn& binom);

// O(1) decision: unimodal iff m > q, n > p, m = n = 2, or n = 1.
UnimodalityVerdict classify_theorem(const BroomPair& pair);

// is_unimodal applied to rank_closed(pair).
UnimodalityVerdict classify_direct(const BroomPair& pair);

}  // namespace broomrank
