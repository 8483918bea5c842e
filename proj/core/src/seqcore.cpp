#include "broomrank/seqcore.hpp"

#include <stdexcept>

namespace broomrank {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

IntSeq::IntSeq(std::int64_t offset, std::initializer_list<std::int64_t> values)
    : offset_(offset) {
  values_.reserve(values.size());
  for (auto v : values) values_.emplace_back(v);
}

BigInt IntSeq::at(std::int64_t index) const {
  if (index < offset_ || index >= end_index()) return 0;
  return values_[static_cast<std::size_t>(index - offset_)];
}

BigInt IntSeq::sum() const {
  BigInt total = 0;
  for (const auto& v : values_) total += v;
  return total;
}

std::string IntSeq::to_string(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += separator;
    out += values_[i].str();
  }
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // C(66, 33) < 2^63, so every partial product below stays inside 128 bits.
  if (n <= 66) {
    u128 acc = 1;
    for (std::int64_t i = 0; i < k; ++i) acc = acc * static_cast<u128>(n - i) / static_cast<u128>(i + 1);
    return BigInt(static_cast<std::uint64_t>(acc));
  }
  BigInt acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;
  }
  return acc;
}

IntSeq convolve(const IntSeq& s, const IntSeq& t) {
  if (s.empty() || t.empty()) return IntSeq(1);
  const auto& a = s.values();
  const auto& b = t.values();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntSeq(1, std::move(out));
}

std::string_view condition_tag(Condition c) {
  switch (c) {
    case Condition::MGreaterQ: return "i";
    case Condition::NGreaterP: return "ii";
    case Condition::BothTwo: return "iii";
    case Condition::NIsOne: return "iv";
    case Condition::None: return "none";
  }
  return "none";
}

std::string UnimodalityVerdict::witness_string() const {
  if (!witness) return {};
  const auto& w = *witness;
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + ")";
}

UnimodalityVerdict is_unimodal(const IntSeq& s) {
  UnimodalityVerdict verdict;
  const auto& v = s.values();
  const std::size_t len = v.size();
  if (len < 3) return verdict;

  // suffix_max[k] = max(v[k..len-1])
  std::vector<BigInt> suffix_max(len);
  suffix_max[len - 1] = v[len - 1];
  for (std::size_t k = len - 1; k-- > 0;) {
    suffix_max[k] = v[k] > suffix_max[k + 1] ? v[k] : suffix_max[k + 1];
  }

  for (std::size_t i = 0; i + 2 < len; ++i) {
    for (std::size_t j = i + 1; j + 1 < len; ++j) {
      if (!(v[j] < v[i]) || !(suffix_max[j + 1] > v[j])) continue;
      std::size_t l = j + 1;
      while (!(v[l] > v[j])) ++l;
      const auto base = s.offset();
      verdict.unimodal = false;
      verdict.witness = {base + static_cast<std::int64_t>(i),
                         base + static_cast<std::int64_t>(j),
                         base + static_cast<std::int64_t>(l)};
      return verdict;
    }
  }
  return verdict;
}

IntSeq s_diff_seq(std::int64_t m) { return s_diff_seq(m, binomial); }

IntSeq s_diff_seq(std::int64_t m, const BinomialFn& binomial) {
  if (m < 0) throw std::invalid_argument("s_diff_seq: negative m");
  std::vector<BigInt> out;
  for (std::int64_t j = 0; j <= m / 2; ++j) {
    out.push_back(binomial(m, j) - binomial(m, j - 1));
  }
  return IntSeq(0, std::move(out));
}

IntSeq c_seq(std::int64_t m, std::int64_t n, std::int64_t q) { return c_seq(m, n, q, binomial); }

IntSeq c_seq(std::int64_t m, std::int64_t n, std::int64_t q, const BinomialFn& binomial) {
  if (m < 0 || n < 0 || q < 0) throw std::invalid_argument("c_seq: negative argument");
  std::vector<BigInt> out;
  for (std::int64_t j = 0; j <= (m + n) / 2; ++j) {
    out.push_back(binomial(m + n, j) - binomial(m + n, j - 1) + binomial(m, j + q) -
                  binomial(m, j));
  }
  return IntSeq(0, std::move(out));
}

}  // namespace broomrank
