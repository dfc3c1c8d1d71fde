#pragma once

// Optimal and greedy k-budgeted subsets under the minimax and maximin regret
// criteria, the budgeted decision rules on top of them, and a brute-force
// oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "budgeted/extended_value.hpp"
#include "budgeted/index_set.hpp"
#include "budgeted/regret.hpp"

namespace budgeted {

enum class Criterion {
  kMinimax,
  kMaximin,
  kGreedyMinimax,
  kGreedyMaximin,
  kOracleMinimax,
  kOracleMaximin,
};

std::string_view criterion_name(Criterion c);

// Equal-value optima are resolved either toward the lexicographically
// smallest index set, or uniformly at random by relabelling the acts with a
// seeded permutation before a lexicographic solve.
struct TieBreak {
  enum class Kind { kLex, kSeeded };
  Kind kind = Kind::kLex;
  std::uint64_t seed = 0;

  static TieBreak lex() { return {}; }
  static TieBreak seeded(std::uint64_t s) { return {Kind::kSeeded, s}; }
};

struct BudgetSolution {
  IndexSet subset;
  ExtendedValue value;
  Criterion criterion = Criterion::kMinimax;
  // Number of optimal subsets; only the oracle enumerates them; everything
  // else reports 1.
  std::size_t tie_count = 1;
  TieBreak tie_break;
};

// C_alpha[i] = { j != i : e(i, j) <= alpha }, stored as bit masks (n <= 64).
struct CoverFamily {
  double alpha = 0.0;
  int n = 0;
  std::vector<std::uint64_t> covers;

  static CoverFamily build(const RegretMatrix& m, double alpha);
  IndexSet at(int i) const { return from_mask(covers[static_cast<std::size_t>(i)]); }
};

struct ReachabilityOptions {
  // Accept the greedy cover as soon as it succeeds instead of returning the
  // lexicographically first one.
  bool greedy_shortcut = false;
};

// Some T with |T| = k and (union of C[i], i in T) + T = {0..n-1}, or nullopt.
// Without the shortcut the returned T is the lexicographically smallest.
std::optional<IndexSet> reachability_check(const CoverFamily& covers, int k, int n,
                                           ReachabilityOptions options = {});

// Repeatedly picks the index whose closed cover hits the most uncovered
// elements (lowest index on ties), padding to k with the lowest unused
// indices. nullopt if k picks do not cover everything.
std::optional<IndexSet> greedy_cover(const CoverFamily& covers, int k, int n);

// Exact minimax-regret subset in O(n^2 log n). k >= n yields (A, -inf).
BudgetSolution solve_minimax(const RegretMatrix& m, int k, TieBreak tie = TieBreak::lex());

// Exact maximin-regret subset: scans candidate levels alpha upward from the
// (n-k)-th smallest regret and stops at the first one admitting a cover.
BudgetSolution solve_maximin(const RegretMatrix& m, int k, TieBreak tie = TieBreak::lex(),
                             ReachabilityOptions options = {});

// k rounds of the single-act solver on the acts not yet chosen. `criterion`
// (kMinimax or kMaximin) only selects which evaluator scores the result
// against the full act set.
BudgetSolution solve_greedy(const RegretMatrix& m, int k, Criterion criterion,
                            TieBreak tie = TieBreak::lex());

inline constexpr double kOracleMaxSubsets = 1e6;

struct OracleReport {
  BudgetSolution best;
  std::vector<IndexSet> optimal_subsets;  // lexicographic order
};

// Enumerates every subset of size min(k, n). `criterion` is kMinimax or
// kMaximin (or their oracle aliases).
OracleReport oracle_enumerate(const RegretMatrix& m, int k, Criterion criterion);
BudgetSolution oracle_solve(const RegretMatrix& m, int k, Criterion criterion);

// Dispatch on any Criterion.
BudgetSolution solve(const RegretMatrix& m, int k, Criterion criterion,
                     TieBreak tie = TieBreak::lex());

// The maximality set when the criterion's optimum is negative or n <= k,
// otherwise the optimal subset.
IndexSet budgeted_rule(const RegretMatrix& m, int k, Criterion criterion,
                       TieBreak tie = TieBreak::lex());

// Domination graph at level alpha in Graphviz DOT: edge i -> j iff j in C_alpha[i].
std::string domination_dot(const RegretMatrix& m, double alpha,
                           const std::vector<std::string>& names);

}  // namespace budgeted
