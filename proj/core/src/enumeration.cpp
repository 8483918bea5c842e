#include "broomrank/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string_view>

#include "broomrank/oracle.hpp"

namespace broomrank::enumeration {

CostBounds CostBounds::from_environment() {
  CostBounds bounds;
  if (const char* env = std::getenv("BROOMRANK_MAX_I"); env && *env) {
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
      throw std::invalid_argument("BROOMRANK_MAX_I must be a positive integer");
    }
    bounds.max_tree_vertices = value;
  }
  return bounds;
}

BinaryMatrix::BinaryMatrix(std::vector<bool> top, std::vector<bool> bottom)
    : rows_{std::move(top), std::move(bottom)} {
  if (rows_[0].size() != rows_[1].size()) throw std::invalid_argument("BinaryMatrix: ragged rows");
  if (rows_[0].empty()) throw std::invalid_argument("BinaryMatrix: zero width");
}

BinaryMatrix BinaryMatrix::parse(const std::string& top, const std::string& bottom) {
  auto bits = [](const std::string& s) {
    std::vector<bool> out;
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("BinaryMatrix: expected 0/1");
      out.push_back(c == '1');
    }
    return out;
  };
  return BinaryMatrix(bits(top), bits(bottom));
}

bool BinaryMatrix::has_zero_row() const {
  return std::none_of(rows_[0].begin(), rows_[0].end(), [](bool b) { return b; }) ||
         std::none_of(rows_[1].begin(), rows_[1].end(), [](bool b) { return b; });
}

bool BinaryMatrix::has_zero_column() const {
  for (std::size_t c = 0; c < width(); ++c) {
    if (!rows_[0][c] && !rows_[1][c]) return true;
  }
  return false;
}

std::string BinaryMatrix::to_string() const {
  std::string s;
  for (bool b : rows_[0]) s += b ? '1' : '0';
  s += '/';
  for (bool b : rows_[1]) s += b ? '1' : '0';
  return s;
}

namespace {

struct ColumnCounts {
  std::size_t top_only = 0, bottom_only = 0, both = 0;
};

ColumnCounts count_columns(const BinaryMatrix& mat) {
  if (mat.has_zero_row() || mat.has_zero_column()) {
    throw std::invalid_argument("matrix has a zero row or column: " + mat.to_string());
  }
  ColumnCounts counts;
  for (std::size_t c = 0; c < mat.width(); ++c) {
    const bool t = mat.row(0)[c], b = mat.row(1)[c];
    if (t && b) ++counts.both;
    else if (t) ++counts.top_only;
    else ++counts.bottom_only;
  }
  return counts;
}

BinaryMatrix layout(std::size_t x, std::size_t y, std::size_t z) {
  std::vector<bool> top, bottom;
  top.insert(top.end(), x, true);
  top.insert(top.end(), y, false);
  top.insert(top.end(), z, true);
  bottom.insert(bottom.end(), x, false);
  bottom.insert(bottom.end(), y, true);
  bottom.insert(bottom.end(), z, true);
  return BinaryMatrix(std::move(top), std::move(bottom));
}

void check_tree_bound(int i, const CostBounds& bounds) {
  if (i < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (i > bounds.max_tree_vertices) {
    throw std::out_of_range("vertex count " + std::to_string(i) + " exceeds bound " +
                            std::to_string(bounds.max_tree_vertices));
  }
}

}  // namespace

BinaryMatrix canonical_form(const BinaryMatrix& mat) {
  auto counts = count_columns(mat);
  if (counts.top_only < counts.bottom_only) std::swap(counts.top_only, counts.bottom_only);
  return layout(counts.top_only, counts.bottom_only, counts.both);
}

std::int64_t a_of(std::int64_t i) {
  if (i < 0) throw std::invalid_argument("a_of: negative index");
  return i * (i + 4) / 4;
}

std::vector<std::pair<int, int>> bijection_pairs(int i) {
  std::vector<std::pair<int, int>> pairs;
  for (int n = 2; 2 * n <= i + 4; ++n) {
    for (int m = n; m + n <= i + 4; ++m) {
      if (n >= 3 || m > n) pairs.emplace_back(m, n);
    }
  }
  return pairs;
}

BinaryMatrix pair_to_matrix(int m, int n, int i) {
  const bool shape_ok = (m >= n && n >= 3) || (m > n && n == 2);
  if (i < 1 || !shape_ok || m + n > i + 4) {
    throw std::invalid_argument("pair_to_matrix: (" + std::to_string(m) + "," + std::to_string(n) +
                                ") not in the domain for i=" + std::to_string(i));
  }
  const auto width = static_cast<std::size_t>(i);
  if (n > 2) {
    const auto a = static_cast<std::size_t>(m - 2), b = static_cast<std::size_t>(n - 2);
    return layout(a, b, width - a - b);
  }
  const auto a = static_cast<std::size_t>(m - 3);
  return layout(a, 0, width - a);
}

std::pair<int, int> matrix_to_pair(const BinaryMatrix& mat) {
  auto counts = count_columns(mat);
  if (counts.top_only < counts.bottom_only) std::swap(counts.top_only, counts.bottom_only);
  if (counts.bottom_only == 0) return {static_cast<int>(counts.top_only) + 3, 2};
  return {static_cast<int>(counts.top_only) + 2, static_cast<int>(counts.bottom_only) + 2};
}

std::int64_t count_matrices_bruteforce(int i, const CostBounds& bounds) {
  if (i < 1) throw std::invalid_argument("count_matrices_bruteforce: i must be >= 1");
  if (i > bounds.max_matrix_width || i > 15) {
    throw std::out_of_range("count_matrices_bruteforce: i=" + std::to_string(i) +
                            " exceeds bound " + std::to_string(bounds.max_matrix_width));
  }
  const auto width = static_cast<unsigned>(i);
  const std::uint32_t full = (std::uint32_t{1} << width) - 1;
  std::set<std::string> orbits;
  for (std::uint32_t top = 1; top <= full; ++top) {
    for (std::uint32_t bottom = 1; bottom <= full; ++bottom) {
      if ((top | bottom) != full) continue;
      // Orbit key: for each row order, sort the columns; keep the smaller.
      std::string best;
      for (int swap = 0; swap < 2; ++swap) {
        const std::uint32_t r0 = swap ? bottom : top, r1 = swap ? top : bottom;
        std::vector<int> cols;
        for (unsigned c = 0; c < width; ++c) {
          cols.push_back(static_cast<int>(((r0 >> c) & 1u) * 2 + ((r1 >> c) & 1u)));
        }
        std::sort(cols.begin(), cols.end());
        std::string key;
        for (int col : cols) key += static_cast<char>('0' + col);
        if (swap == 0 || key < best) best = key;
      }
      orbits.insert(best);
    }
  }
  return static_cast<std::int64_t>(orbits.size());
}

std::int64_t b_closed(std::int64_t i) {
  if (i < 1) throw std::invalid_argument("b_closed: i must be >= 1");
  if (i <= 9) return 0;
  const bool odd = (i % 2) == 1;
  const std::int64_t k = odd ? (i - 11) / 2 : (i - 10) / 2;
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j <= k; ++j) sum += a_of(j);
  std::int64_t b = 2 * sum - k * k / 4;
  if (odd) b += (k + 1) * (k + 5) / 4;
  return b;
}

std::int64_t b_recursive(std::int64_t i) {
  if (i < 10) throw std::invalid_argument("b_recursive: i must be >= 10");
  std::int64_t b = 0;  // b_10
  for (std::int64_t idx = 11; idx <= i; ++idx) {
    if (idx % 2 == 1) {
      const std::int64_t k = (idx - 11) / 2;
      b += a_of(k + 1);
    } else {
      const std::int64_t k = (idx - 10) / 2;
      b += a_of(k) - k / 2;
    }
  }
  return b;
}

std::vector<BroomPair> enumerate_quadruples(int i, bool non_unimodal_only) {
  std::vector<BroomPair> out;
  const int budget = i - 1;  // m + n + p + q
  for (int m = 1; m <= budget; ++m) {
    for (int n = 1; n <= m && m + n <= budget; ++n) {
      for (int p = 0; m + n + p <= budget; ++p) {
        const int q = budget - m - n - p;
        if (m == n && p > q) continue;
        BroomPair pair(m, p, n, q);
        if (non_unimodal_only && classify_theorem(pair).unimodal) continue;
        out.push_back(pair);
      }
    }
  }
  return out;
}

std::int64_t b_bruteforce(int i, const CostBounds& bounds) {
  check_tree_bound(i, bounds);
  std::set<std::string> trees;
  for (const auto& pair : enumerate_quadruples(i, true)) {
    trees.insert(oracle::ahu_canonical(oracle::merged_brooms(pair)));
  }
  return static_cast<std::int64_t>(trees.size());
}

namespace {

// Calls fn(m, p, n, q) for every ordered quadruple with m, n >= 1 summing to i - 1.
template <typename Fn>
void for_each_ordered_quadruple(int i, Fn&& fn) {
  const int budget = i - 1;
  for (int m = 1; m <= budget; ++m) {
    for (int n = 1; m + n <= budget; ++n) {
      for (int p = 0; m + n + p <= budget; ++p) fn(m, p, n, budget - m - n - p);
    }
  }
}

}  // namespace

std::int64_t t_bruteforce(int i, const CostBounds& bounds) {
  check_tree_bound(i, bounds);
  std::set<std::pair<std::string, std::string>> pairs;
  for_each_ordered_quadruple(i, [&](int m, int p, int n, int q) {
    auto first = oracle::ahu_canonical(oracle::broom_tree(m, p));
    auto second = oracle::ahu_canonical(oracle::broom_tree(n, q));
    if (second < first) std::swap(first, second);
    pairs.emplace(std::move(first), std::move(second));
  });
  return static_cast<std::int64_t>(pairs.size());
}

std::int64_t t_distinct_trees(int i, const CostBounds& bounds) {
  check_tree_bound(i, bounds);
  std::set<std::string> trees;
  for_each_ordered_quadruple(i, [&](int m, int p, int n, int q) {
    trees.insert(oracle::ahu_canonical(oracle::merge(oracle::broom_tree(m, p),
                                                     oracle::broom_tree(n, q))));
  });
  return static_cast<std::int64_t>(trees.size());
}

std::optional<std::int64_t> table_b(int i) {
  const int k = i - kTableFirstIndex;
  if (k < 0 || k >= static_cast<int>(kTableB.size())) return std::nullopt;
  return kTableB[static_cast<std::size_t>(k)];
}

std::optional<std::int64_t> table_t(int i) {
  const int k = i - kTableFirstIndex;
  if (k < 0 || k >= static_cast<int>(kTableT.size())) return std::nullopt;
  return kTableT[static_cast<std::size_t>(k)];
}

std::string_view table_status_name(TableStatus s) {
  switch (s) {
    case TableStatus::NotApplicable: return "n/a";
    case TableStatus::Match: return "match";
    case TableStatus::Mismatch: return "MISMATCH";
    case TableStatus::Flagged: return "flagged";
  }
  return "n/a";
}

bool CountTable::all_b_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.b_agree; });
}

bool CountTable::t_table_ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const CountRow& r) { return r.t_status == TableStatus::Mismatch; });
}

CountTable build_count_table(int max_i, const CostBounds& bounds) {
  check_tree_bound(max_i, bounds);
  CountTable table;
  for (int i = 1; i <= max_i; ++i) {
    CountRow row;
    row.i = i;
    row.a = a_of(i);
    row.b_closed = b_closed(i);
    if (i >= 10) row.b_recursive = b_recursive(i);
    row.b_brute = b_bruteforce(i, bounds);
    row.t_brute = t_bruteforce(i, bounds);
    row.t_trees = t_distinct_trees(i, bounds);
    row.t_table = table_t(i);
    row.b_agree = row.b_brute == row.b_closed &&
                  (!row.b_recursive || *row.b_recursive == row.b_closed) &&
                  (!table_b(i) || *table_b(i) == row.b_closed);
    if (row.t_table) {
      if (*row.t_table == row.t_brute) row.t_status = TableStatus::Match;
      else if (i <= kTableTLastTrusted) row.t_status = TableStatus::Mismatch;
      else row.t_status = TableStatus::Flagged;
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace broomrank::enumeration
