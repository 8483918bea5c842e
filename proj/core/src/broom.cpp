#include "broomrank/broom.hpp"

#include <stdexcept>
#include <utility>

namespace broomrank {

BroomPair::BroomPair(int m, int p, int n, int q) : m_(m), p_(p), n_(n), q_(q) {
  if (m < 1 || n < 1) throw std::invalid_argument("BroomPair: pendant counts must be >= 1");
  if (p < 0 || q < 0) throw std::invalid_argument("BroomPair: handle lengths must be >= 0");
  if (m_ < n_ || (m_ == n_ && p_ > q_)) {
    std::swap(m_, n_);
    std::swap(p_, q_);
  }
}

std::string BroomPair::to_string() const {
  return "m=" + std::to_string(m_) + " p=" + std::to_string(p_) + " n=" + std::to_string(n_) +
         " q=" + std::to_string(q_);
}

RankSequence broom_rank(int m, int p) {
  if (m < 1) throw std::invalid_argument("broom_rank: m must be >= 1");
  if (p < 0) throw std::invalid_argument("broom_rank: p must be >= 0");
  std::vector<BigInt> row{1};
  for (int k = 1; k <= m; ++k) {
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  std::vector<BigInt> values(static_cast<std::size_t>(p), BigInt(1));
  values.insert(values.end(), row.begin(), row.end());
  return RankSequence{IntSeq(1, std::move(values))};
}

RankSequence rank_convolution(const BroomPair& pair) {
  return RankSequence{
      convolve(broom_rank(pair.m(), pair.p()).whitney, broom_rank(pair.n(), pair.q()).whitney)};
}

namespace {

// The closed forms are written for the broom with the shorter handle in the
// (m, p) slot.
struct Oriented {
  std::int64_t m, p, n, q;
};

Oriented orient(const BroomPair& pair) {
  if (pair.p() <= pair.q()) return {pair.m(), pair.p(), pair.n(), pair.q()};
  return {pair.n(), pair.q(), pair.m(), pair.p()};
}

}  // namespace

RankSequence rank_closed(const BroomPair& pair) { return rank_closed(pair, binomial); }

RankSequence rank_closed(const BroomPair& pair, const BinomialFn& C) {
  const auto [m, p, n, q] = orient(pair);
  const std::int64_t last = q + p + m + n + 1;
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(last));
  for (std::int64_t i = 1; i <= last; ++i) {
    BigInt r = 0;
    if (i <= p) {
      r = i;
    } else if (i <= q) {
      r = p;
      for (std::int64_t j = 0; j <= i - p - 1; ++j) r += C(m, j);
    } else if (i <= q + p) {
      r = q + p - i;
      for (std::int64_t j = 0; j <= i - q - 1; ++j) r += C(n, j);
      for (std::int64_t j = 0; j <= i - p - 1; ++j) r += C(m, j);
    } else {
      r = C(m + n, i - q - p - 1);
      for (std::int64_t j = 0; j <= p - 1; ++j) r += C(n, i - q - 1 - j);
      for (std::int64_t j = 0; j <= q - 1; ++j) r += C(m, i - p - 1 - j);
    }
    values.push_back(std::move(r));
  }
  return RankSequence{IntSeq(1, std::move(values))};
}

IntSeq first_differences(const RankSequence& r) {
  const auto& v = r.whitney.values();
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
  return IntSeq(r.whitney.offset() + 1, std::move(d));
}

BigInt diff_closed(const BroomPair& pair, std::int64_t i) { return diff_closed(pair, i, binomial); }

BigInt diff_closed(const BroomPair& pair, std::int64_t i, const BinomialFn& C) {
  const auto [m, p, n, q] = orient(pair);
  if (i <= 0) return 0;
  if (i == 1) return 1;
  if (i <= p) return 1;
  if (i <= q) return C(m, i - p - 1);
  if (i <= q + p) return C(n, i - q - 1) - 1 + C(m, i - p - 1);
  // i = p + q + j + 1
  const std::int64_t j = i - p - q - 1;
  return C(n, j + p) - C(n, j) + C(m + n, j) - C(m + n, j - 1) + C(m, j + q) - C(m, j);
}

UnimodalityVerdict classify_theorem(const BroomPair& pair) {
  UnimodalityVerdict verdict;
  const int m = pair.m(), p = pair.p(), n = pair.n(), q = pair.q();
  if (m > q) {
    verdict.matched_condition = Condition::MGreaterQ;
  } else if (n > p) {
    verdict.matched_condition = Condition::NGreaterP;
  } else if (m == 2 && n == 2) {
    verdict.matched_condition = Condition::BothTwo;
  } else if (n == 1) {
    verdict.matched_condition = Condition::NIsOne;
  } else {
    verdict.unimodal = false;
    verdict.matched_condition = Condition::None;
  }
  return verdict;
}

UnimodalityVerdict classify_direct(const BroomPair& pair) {
  return is_unimodal(rank_closed(pair).whitney);
}

}  // namespace broomrank
