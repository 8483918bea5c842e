#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "broomrank/seqcore.hpp"

namespace broomrank::verify {

enum class Level { Quick, Full };

struct Options {
  Level level = Level::Quick;
  unsigned jobs = 1;
  // Feeds every closed-form route under test; the brute-force sides never use it.
  BinomialFn binomial = broomrank::binomial;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  // First failing case in sweep order (smallest trees first).
  std::string counterexample;
  double seconds = 0.0;
};

struct Report {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

// Hand-checked rank sequence of B_{3,2}.B_{2,3}.
inline const std::vector<int> kFigureOneSequence{1, 2, 3, 6, 10, 11, 10, 11, 10, 5, 1};

SuiteResult figure_one(const Options& opts);
// rank_closed = rank_convolution = subtree_polynomial plus the sum, boundary
// and tail invariants. The tail is strict only when both handles are present.
SuiteResult rank_equivalence(const Options& opts);
SuiteResult difference_consistency(const Options& opts);
SuiteResult theorem_equivalence(const Options& opts);
SuiteResult binomial_sequences(const Options& opts);
SuiteResult counting(const Options& opts);
SuiteResult bijection(const Options& opts);

Report run_all(const Options& opts);

}  // namespace broomrank::verify
