#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace broomrank {

using BigInt = boost::multiprecision::cpp_int;

// Finite integer sequence with an explicit index of its first element.
// Reads outside the stored range yield zero.
class IntSeq {
 public:
  IntSeq() = default;
  explicit IntSeq(std::int64_t offset) : offset_(offset) {}
  IntSeq(std::int64_t offset, std::vector<BigInt> values)
      : offset_(offset), values_(std::move(values)) {}
  IntSeq(std::int64_t offset, std::initializer_list<std::int64_t> values);

  std::int64_t offset() const { return offset_; }
  std::int64_t first_index() const { return offset_; }
  // One past the last stored index.
  std::int64_t end_index() const {
    return offset_ + static_cast<std::int64_t>(values_.size());
  }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  const std::vector<BigInt>& values() const { return values_; }
  BigInt at(std::int64_t index) const;
  BigInt sum() const;

  bool operator==(const IntSeq&) const = default;

  std::string to_string(std::string_view separator = " ") const;

 private:
  std::int64_t offset_ = 1;
  std::vector<BigInt> values_;
};

// C(n, k); zero when k < 0 or k > n. Throws std::invalid_argument for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// Source of binomial coefficients for the closed-form routes. Tests swap in a
// faulty one to make sure the verification suites notice.
using BinomialFn = std::function<BigInt(std::int64_t, std::int64_t)>;

// r_i = sum_{j=0}^{i-1} t_{j+1} s_{i-j} over two offset-1 sequences.
IntSeq convolve(const IntSeq& s, const IntSeq& t);

enum class Condition { MGreaterQ, NGreaterP, BothTwo, NIsOne, None };

std::string_view condition_tag(Condition c);

struct UnimodalityVerdict {
  bool unimodal = true;
  // (i, j, l) in the sequence's own indexing with s_i > s_j < s_l.
  std::optional<std::array<std::int64_t, 3>> witness;
  // Set only by the closed-form classifier.
  std::optional<Condition> matched_condition;

  std::string witness_string() const;
};

// Unimodal iff no strict rise follows a strict fall. The witness for a
// non-unimodal sequence is the lexicographically smallest valid triple.
UnimodalityVerdict is_unimodal(const IntSeq& s);

// s_{m,j} = C(m,j) - C(m,j-1) for j = 0..floor(m/2), offset 0.
IntSeq s_diff_seq(std::int64_t m);
IntSeq s_diff_seq(std::int64_t m, const BinomialFn& binom);

// c_{m,n,j} = C(m+n,j) - C(m+n,j-1) + C(m,j+q) - C(m,j) for j = 0..floor((m+n)/2).
IntSeq c_seq(std::int64_t m, std::int64_t n, std::int64_t q);
IntSeq c_seq(std::int64_t m, std::int64_t n, std::int64_t q, const BinomialFn& binom);

}  // namespace broomrank
