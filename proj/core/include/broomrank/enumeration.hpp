#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "broomrank/broom.hpp"

namespace broomrank::enumeration {

// Limits for the exponential and cubic brute-force counters. Exceeding a
// bound is an error, never a silent truncation.
struct CostBounds {
  int max_matrix_width = 8;
  int max_tree_vertices = 40;

  // Defaults, with max_tree_vertices taken from BROOMRANK_MAX_I when set.
  // Throws std::invalid_argument if the variable is not a positive integer.
  static CostBounds from_environment();
};

// 2 x i 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix(std::vector<bool> top, std::vector<bool> bottom);
  // Rows as '0'/'1' strings, e.g. ("110", "001").
  static BinaryMatrix parse(const std::string& top, const std::string& bottom);

  std::size_t width() const { return rows_[0].size(); }
  const std::vector<bool>& row(std::size_t r) const { return rows_[r]; }

  bool has_zero_row() const;
  bool has_zero_column() const;

  // "110/001"
  std::string to_string() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::array<std::vector<bool>, 2> rows_;
};

// Representative of the orbit under row swap and column permutation:
// columns grouped as (1,0)^x (0,1)^y (1,1)^z with rows ordered so x >= y.
// Throws std::invalid_argument for matrices with a zero row or column.
BinaryMatrix canonical_form(const BinaryMatrix& mat);

std::int64_t a_of(std::int64_t i);

// Pairs (m, n) with (m >= n >= 3 or m > n = 2) and m + n <= i + 4.
std::vector<std::pair<int, int>> bijection_pairs(int i);

BinaryMatrix pair_to_matrix(int m, int n, int i);

// Throws std::invalid_argument for matrices outside the bijection's domain.
std::pair<int, int> matrix_to_pair(const BinaryMatrix& mat);

// Enumerates all 4^i matrices, keeps those with no zero row or column and
// counts orbits.
std::int64_t count_matrices_bruteforce(int i, const CostBounds& bounds = {});

std::int64_t b_closed(std::int64_t i);
std::int64_t b_recursive(std::int64_t i);

// Canonical broom pairs on i vertices in lexicographic (m, n, p, q) order.
std::vector<BroomPair> enumerate_quadruples(int i, bool non_unimodal_only);

// Non-isomorphic merged trees on i vertices that are not rank unimodal.
std::int64_t b_bruteforce(int i, const CostBounds& bounds = {});

// Broom pairs {B_{m,p}, B_{n,q}} on i vertices counted up to swapping the two
// brooms (isomorphism of the broom components). This is the t-row of the
// published table.
std::int64_t t_bruteforce(int i, const CostBounds& bounds = {});

// Non-isomorphic merged trees on i vertices. Unlike t_bruteforce this
// identifies, e.g., B_{3,0}.B_{1,0} with B_{2,0}.B_{2,0} (both are stars).
std::int64_t t_distinct_trees(int i, const CostBounds& bounds = {});

// Reference b- and t-rows for i = 10..22.
inline constexpr int kTableFirstIndex = 10;
inline constexpr std::array<std::int64_t, 13> kTableB{0,  1,  2,  5,  7,  12, 16,
                                                     24, 30, 41, 50, 65, 77};
inline constexpr std::array<std::int64_t, 13> kTableT{60,  85,  110, 146, 182, 231, 280,
                                                     344, 408, 570, 670, 770, 891};
// Beyond this index the published t-row is not compared, only reported.
inline constexpr int kTableTLastTrusted = 18;

std::optional<std::int64_t> table_b(int i);
std::optional<std::int64_t> table_t(int i);

enum class TableStatus { NotApplicable, Match, Mismatch, Flagged };
std::string_view table_status_name(TableStatus s);

struct CountRow {
  int i = 0;
  std::int64_t a = 0;
  std::int64_t b_closed = 0;
  std::optional<std::int64_t> b_recursive;  // i >= 10
  std::int64_t b_brute = 0;
  std::int64_t t_brute = 0;
  std::int64_t t_trees = 0;
  std::optional<std::int64_t> t_table;
  bool b_agree = false;
  TableStatus t_status = TableStatus::NotApplicable;
};

struct CountTable {
  std::vector<CountRow> rows;

  bool all_b_agree() const;
  bool t_table_ok() const;  // no Mismatch rows
};

// Rows for i = 1..max_i. Throws std::out_of_range when max_i exceeds the tree bound.
CountTable build_count_table(int max_i, const CostBounds& bounds = {});

}  // namespace broomrank::enumeration
