#include "broomrank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "broomrank/broom.hpp"
#include "broomrank/enumeration.hpp"
#include "broomrank/oracle.hpp"

namespace broomrank::verify {

bool Report::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Quad {
  int m, p, n, q;
  std::string to_string() const {
    std::ostringstream os;
    os << "(m,p,n,q)=(" << m << "," << p << "," << n << "," << q << ")";
    return os.str();
  }
};

// Sign changes of a sequence, zeros skipped.
int sign_changes(const IntSeq& s) {
  int changes = 0, last = 0;
  for (const auto& v : s.values()) {
    const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

// 1 <= n <= m <= max_m, 0 <= p, q <= max_handle, smallest trees first.
std::vector<Quad> quad_grid(int max_m, int max_handle) {
  std::vector<Quad> grid;
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= m; ++n)
      for (int p = 0; p <= max_handle; ++p)
        for (int q = 0; q <= max_handle; ++q) grid.push_back({m, p, n, q});
  std::stable_sort(grid.begin(), grid.end(), [](const Quad& a, const Quad& b) {
    return a.m + a.n + a.p + a.q < b.m + b.n + b.p + b.q;
  });
  return grid;
}

// Runs check over items on `jobs` threads. Returns the failure message of the
// lowest-indexed failing item, if any.
template <typename Item>
std::optional<std::string> sweep(const std::vector<Item>& items, unsigned jobs,
                                 const std::function<std::optional<std::string>(const Item&)>& check) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::size_t> first_fail(jobs, std::numeric_limits<std::size_t>::max());
  std::vector<std::string> messages(jobs);
  auto worker = [&](unsigned w) {
    for (std::size_t k = w; k < items.size(); k += jobs) {
      std::optional<std::string> failure;
      try {
        failure = check(items[k]);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        first_fail[w] = k;
        messages[w] = std::move(*failure);
        return;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  const auto best = std::min_element(first_fail.begin(), first_fail.end()) - first_fail.begin();
  if (first_fail[static_cast<std::size_t>(best)] == std::numeric_limits<std::size_t>::max()) {
    return std::nullopt;
  }
  return messages[static_cast<std::size_t>(best)];
}

template <typename Body>
SuiteResult timed(std::string name, Body&& body) {
  SuiteResult result;
  result.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.counterexample = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

void record(SuiteResult& result, const std::optional<std::string>& failure) {
  if (failure && result.passed) {
    result.passed = false;
    result.counterexample = *failure;
  }
}

bool full(const Options& opts) { return opts.level == Level::Full; }

}  // namespace

SuiteResult figure_one(const Options& opts) {
  return timed("figure-one", [&](SuiteResult& result) {
    std::vector<BigInt> expected_values(kFigureOneSequence.begin(), kFigureOneSequence.end());
    const RankSequence expected{IntSeq(1, expected_values)};
    const BroomPair pair(3, 2, 2, 3);
    const std::vector<std::pair<std::string, RankSequence>> routes{
        {"rank_closed", rank_closed(pair, opts.binomial)},
        {"rank_convolution", rank_convolution(pair)},
        {"subtree_polynomial", oracle::subtree_polynomial(oracle::merged_brooms(pair))}};
    for (const auto& [route, got] : routes) {
      ++result.cases;
      if (got != expected) {
        record(result, route + " gave (" + got.to_string() + ") for " + pair.to_string());
      }
    }
    ++result.cases;
    const auto verdict = is_unimodal(expected.whitney);
    if (verdict.unimodal || !verdict.witness || (*verdict.witness)[0] < 6 ||
        (*verdict.witness)[2] > 9) {
      record(result, "unexpected verdict on the reference sequence");
    }
  });
}

SuiteResult rank_equivalence(const Options& opts) {
  return timed("rank-equivalence", [&](SuiteResult& result) {
    const auto grid = full(opts) ? quad_grid(6, 6) : quad_grid(4, 4);
    result.cases = grid.size();
    record(result, sweep<Quad>(grid, opts.jobs, [&](const Quad& x) -> std::optional<std::string> {
      const BroomPair pair(x.m, x.p, x.n, x.q);
      const auto closed = rank_closed(pair, opts.binomial);
      const auto conv = rank_convolution(pair);
      const auto tree = oracle::subtree_polynomial(oracle::merged_brooms(pair));
      if (closed != conv || conv != tree) {
        return x.to_string() + ": closed=(" + closed.to_string() + ") conv=(" + conv.to_string() +
               ") oracle=(" + tree.to_string() + ")";
      }
      const BigInt expected_sum = (BigInt(x.p) + (BigInt(1) << x.m)) * (BigInt(x.q) + (BigInt(1) << x.n));
      if (closed.sum() != expected_sum) return x.to_string() + ": sum " + closed.sum().str();
      const std::int64_t last = pair.vertex_count();
      if (static_cast<std::int64_t>(closed.size()) != last || closed.at(1) != 1 || closed.at(last) != 1) {
        return x.to_string() + ": boundary entries wrong";
      }
      const std::int64_t tail = x.p + x.q + 1 + (x.m + x.n) / 2;
      // Strict only when both handles are present: B_{2,0}.B_{1,0} gives 1 3 3 1.
      const bool strict = x.p > 0 && x.q > 0;
      for (std::int64_t i = tail + 1; i <= last; ++i) {
        const bool ok = strict ? closed.at(i) < closed.at(i - 1) : closed.at(i) <= closed.at(i - 1);
        if (!ok) return x.to_string() + ": tail not decreasing at i=" + std::to_string(i);
      }
      return std::nullopt;
    }));
  });
}

SuiteResult difference_consistency(const Options& opts) {
  return timed("difference-consistency", [&](SuiteResult& result) {
    const auto grid = full(opts) ? quad_grid(6, 6) : quad_grid(4, 4);
    result.cases = grid.size();
    record(result, sweep<Quad>(grid, opts.jobs, [&](const Quad& x) -> std::optional<std::string> {
      const BroomPair pair(x.m, x.p, x.n, x.q);
      const auto r = rank_convolution(pair);
      // Two indices past the end cover the zero-extended tail.
      for (std::int64_t i = 2; i <= pair.vertex_count() + 2; ++i) {
        const auto got = diff_closed(pair, i, opts.binomial);
        const BigInt expected = r.at(i) - r.at(i - 1);
        if (got != expected) {
          return x.to_string() + ": d_" + std::to_string(i) + " closed=" + got.str() +
                 " expected=" + expected.str();
        }
      }
      return std::nullopt;
    }));
  });
}

SuiteResult theorem_equivalence(const Options& opts) {
  return timed("theorem-equivalence", [&](SuiteResult& result) {
    const auto grid = full(opts) ? quad_grid(8, 14) : quad_grid(6, 8);
    result.cases = grid.size();
    record(result, sweep<Quad>(grid, opts.jobs, [&](const Quad& x) -> std::optional<std::string> {
      const BroomPair pair(x.m, x.p, x.n, x.q);
      const auto theorem = classify_theorem(pair);
      const auto direct = is_unimodal(rank_closed(pair, opts.binomial).whitney);
      if (theorem.unimodal != direct.unimodal) {
        return x.to_string() + ": theorem says " + (theorem.unimodal ? "unimodal" : "not unimodal") +
               ", sequence says " + (direct.unimodal ? "unimodal" : "not unimodal " + direct.witness_string());
      }
      return std::nullopt;
    }));
  });
}

SuiteResult binomial_sequences(const Options& opts) {
  return timed("binomial-sequences", [&](SuiteResult& result) {
    const auto& C = opts.binomial;
    const int max_s = full(opts) ? 40 : 20;
    const int max_c = full(opts) ? 20 : 10;
    const int max_q = full(opts) ? 10 : 5;
    const int max_mn = full(opts) ? 20 : 10;
    const int max_pq = 6;

    for (int m = 0; m <= max_s && result.passed; ++m) {
      ++result.cases;
      if (!is_unimodal(s_diff_seq(m, C)).unimodal) record(result, "s_diff_seq(" + std::to_string(m) + ") not unimodal");
    }
    for (int m = 0; m <= max_c && result.passed; ++m)
      for (int n = 0; n <= max_c && result.passed; ++n)
        for (int q = 0; q <= max_q && result.passed; ++q) {
          ++result.cases;
          // c_seq itself need not be unimodal, (4,2,3) gives 4 2 3 1, but its
          // sign changes at most once, which is what the classifier relies on.
          const auto c = c_seq(m, n, q, C);
          if (sign_changes(c) > 1) {
            record(result, "c_seq(" + std::to_string(m) + "," + std::to_string(n) + "," +
                               std::to_string(q) + ") = (" + c.to_string() + ") changes sign twice");
          }
        }

    auto tag = [](const char* what, int m, int n, int j, int p = -1, int q = -1) {
      std::string s = std::string(what) + " fails at m=" + std::to_string(m) + " n=" + std::to_string(n);
      if (p >= 0) s += " p=" + std::to_string(p) + " q=" + std::to_string(q);
      return s + " j=" + std::to_string(j);
    };
    for (int m = 1; m <= max_mn && result.passed; ++m)
      for (int n = 1; n <= m && result.passed; ++n)
        for (int j = 1; j <= (m + n) / 2 && result.passed; ++j) {
          ++result.cases;
          const BigInt base = C(m + n, j) - C(m + n, j - 1) - C(m, j);
          if (base <= 0 && j < n) record(result, tag("less-zero implication", m, n, j));
          if (j > 1 && base > 0 && base - C(n, j) < 0) record(result, tag("greater-zero implication", m, n, j));
          for (int p = 0; p <= max_pq && result.passed; ++p)
            for (int q = 0; q <= max_pq && result.passed; ++q) {
              const BigInt with_q = base + C(m, j + q);
              const BigInt with_both = with_q - C(n, j) + C(n, j + p);
              // The two-handle forms as stated: less-zero uses the q handle on both brooms.
              const BigInt less_form = with_q - C(n, j) + C(n, j + q);
              if (with_q <= 0 && less_form > 0) record(result, tag("less-zero corollary", m, n, j, p, q));
              if (j > 1 && with_q > 0 && with_both < 0) record(result, tag("greater-zero corollary", m, n, j, p, q));
            }
        }
  });
}

SuiteResult counting(const Options& opts) {
  return timed("counting", [&](SuiteResult& result) {
    const int max_i = full(opts) ? 40 : 22;
    for (int i = enumeration::kTableFirstIndex; i < enumeration::kTableFirstIndex + 13; ++i) {
      ++result.cases;
      if (enumeration::b_closed(i) != *enumeration::table_b(i)) {
        record(result, "b_closed(" + std::to_string(i) + ") = " + std::to_string(enumeration::b_closed(i)) +
                           ", table says " + std::to_string(*enumeration::table_b(i)));
      }
    }
    enumeration::CostBounds bounds;
    bounds.max_tree_vertices = std::max(bounds.max_tree_vertices, max_i);
    std::vector<int> indices;
    for (int i = 1; i <= max_i; ++i) indices.push_back(i);
    result.cases += indices.size();
    record(result, sweep<int>(indices, opts.jobs, [&](const int& i) -> std::optional<std::string> {
      const auto closed = enumeration::b_closed(i);
      const auto brute = enumeration::b_bruteforce(i, bounds);
      if (closed != brute) {
        return "b_" + std::to_string(i) + ": closed " + std::to_string(closed) + ", brute force " + std::to_string(brute);
      }
      if (i >= 10 && enumeration::b_recursive(i) != closed) {
        return "b_" + std::to_string(i) + ": recursion " + std::to_string(enumeration::b_recursive(i));
      }
      if (i <= enumeration::kTableTLastTrusted && enumeration::table_t(i)) {
        const auto t = enumeration::t_bruteforce(i, bounds);
        if (t != *enumeration::table_t(i)) {
          return "t_" + std::to_string(i) + ": brute force " + std::to_string(t) + ", table " +
                 std::to_string(*enumeration::table_t(i));
        }
      }
      return std::nullopt;
    }));
  });
}

SuiteResult bijection(const Options& opts) {
  return timed("bijection", [&](SuiteResult& result) {
    const int max_width = full(opts) ? 8 : 6;
    for (int i = 1; i <= max_width && result.passed; ++i) {
      ++result.cases;
      const auto brute = enumeration::count_matrices_bruteforce(i);
      const auto pairs = static_cast<std::int64_t>(enumeration::bijection_pairs(i).size());
      if (brute != enumeration::a_of(i) || pairs != enumeration::a_of(i)) {
        record(result, "i=" + std::to_string(i) + ": brute " + std::to_string(brute) + ", pairs " +
                           std::to_string(pairs) + ", a_i " + std::to_string(enumeration::a_of(i)));
      }
    }
    for (int i = 1; i <= 20 && result.passed; ++i) {
      for (const auto& [m, n] : enumeration::bijection_pairs(i)) {
        if (m + n > 24) continue;
        ++result.cases;
        const auto mat = enumeration::pair_to_matrix(m, n, i);
        if (enumeration::matrix_to_pair(mat) != std::pair{m, n}) {
          record(result, "round trip fails for (" + std::to_string(m) + "," + std::to_string(n) +
                             ") at i=" + std::to_string(i));
        }
      }
    }
  });
}

Report run_all(const Options& opts) {
  Report report;
  report.suites.push_back(figure_one(opts));
  report.suites.push_back(rank_equivalence(opts));
  report.suites.push_back(difference_consistency(opts));
  report.suites.push_back(theorem_equivalence(opts));
  report.suites.push_back(binomial_sequences(opts));
  report.suites.push_back(counting(opts));
  report.suites.push_back(bijection(opts));
  return report;
}

}  // namespace broomrank::verify
