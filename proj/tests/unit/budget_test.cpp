#include <gtest/gtest.h>

#include <set>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "fixtures.hpp"

using namespace budgeted;

namespace {

RegretMatrix example1() { return RegretMatrix::from_row_j_col_i(fixtures::kExample1Printed); }
RegretMatrix example3() { return RegretMatrix::from_row_j_col_i(fixtures::kExample3Printed); }

}  // namespace

TEST(Minimax, FirstExample) {
  const RegretMatrix m = example1();
  const double want[] = {3.0, 1.4, 1.0, -1.1};
  for (int k = 1; k <= 4; ++k) EXPECT_DOUBLE_EQ(solve_minimax(m, k).value.value(), want[k - 1]);
  EXPECT_EQ(solve_minimax(m, 1).subset, (IndexSet{3}));
  EXPECT_EQ(solve_minimax(m, 2).subset, (IndexSet{0, 1}));
  // Two optima at k = 3; LEX keeps the smaller one.
  EXPECT_EQ(solve_minimax(m, 3).subset, (IndexSet{0, 1, 2}));
  EXPECT_EQ(solve_minimax(m, 4).subset, (IndexSet{0, 1, 2, 3}));
}

TEST(Minimax, SecondExample) {
  const RegretMatrix m = example3();
  const double want[] = {3.9, 2.1, 0.0, -1.8, -3.0};
  for (int k = 1; k <= 5; ++k) EXPECT_DOUBLE_EQ(solve_minimax(m, k).value.value(), want[k - 1]);
  EXPECT_EQ(solve_minimax(m, 3).subset, (IndexSet{2, 3, 5}));
}

TEST(Minimax, WholeSetAndBadBudget) {
  const RegretMatrix m = example1();
  for (int k : {5, 9}) {
    const BudgetSolution s = solve_minimax(m, k);
    EXPECT_EQ(s.subset, full_set(5));
    EXPECT_TRUE(s.value.is_neg_infinity());
  }
  EXPECT_THROW(solve_minimax(m, 0), Error);
  EXPECT_THROW(solve_maximin(m, -1), Error);
}

TEST(Maximin, Examples) {
  const double want1[] = {3.0, 1.4, 1.0, -1.1};
  for (int k = 1; k <= 4; ++k) {
    EXPECT_DOUBLE_EQ(solve_maximin(example1(), k).value.value(), want1[k - 1]);
  }
  const double want3[] = {3.9, -0.7, -1.0, -1.8, -3.0};
  for (int k = 1; k <= 5; ++k) {
    EXPECT_DOUBLE_EQ(solve_maximin(example3(), k).value.value(), want3[k - 1]);
  }
  EXPECT_EQ(solve_maximin(example3(), 2).subset, (IndexSet{2, 5}));
  EXPECT_EQ(solve_maximin(example3(), 3).subset, (IndexSet{0, 2, 5}));
  EXPECT_TRUE(solve_maximin(example3(), 6).value.is_neg_infinity());
}

TEST(Reachability, CoverLevelsFromTheSecondExample) {
  const RegretMatrix m = example3();
  const CoverFamily at_minus_one = CoverFamily::build(m, -1.0);
  EXPECT_EQ(at_minus_one.at(2), (IndexSet{1, 4}));
  EXPECT_EQ(at_minus_one.at(5), (IndexSet{3}));
  for (int i : {0, 1, 3, 4}) EXPECT_TRUE(at_minus_one.at(i).empty());
  EXPECT_FALSE(reachability_check(at_minus_one, 2, 6).has_value());

  const CoverFamily at_minus_07 = CoverFamily::build(m, -0.7);
  EXPECT_EQ(at_minus_07.at(5), (IndexSet{0, 3}));
  EXPECT_EQ(reachability_check(at_minus_07, 2, 6), (IndexSet{2, 5}));
  EXPECT_EQ(greedy_cover(at_minus_07, 2, 6), (IndexSet{2, 5}));
  ReachabilityOptions quick;
  quick.greedy_shortcut = true;
  EXPECT_EQ(reachability_check(at_minus_07, 2, 6, quick), (IndexSet{2, 5}));
}

TEST(Reachability, LexFirstCoverAndPadding) {
  // Nobody covers anybody: only T = everything works.
  RegretMatrix m(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) m.set(i, j, 1.0);
    }
  }
  const CoverFamily none = CoverFamily::build(m, 0.0);
  EXPECT_FALSE(reachability_check(none, 2, 3).has_value());
  EXPECT_EQ(reachability_check(none, 3, 3), (IndexSet{0, 1, 2}));
  // Everyone covers everyone: {0} then padding.
  const CoverFamily all = CoverFamily::build(m, 1.0);
  EXPECT_EQ(reachability_check(all, 2, 3), (IndexSet{0, 1}));
}

TEST(Greedy, FirstExampleBudgetTwo) {
  // Hand derivation, re-checked by brute force below: round one keeps a4
  // (worst regret 3.0); on {a1, a2, a3, a5} both a1 and a2 have worst regret
  // 4.0 and the lexicographic tie-break keeps a1. mML({a1, a4}) = 3.0 and
  // MmL({a1, a4}) = 3.0.
  const RegretMatrix m = example1();
  const auto e = fixtures::raw(m);
  std::uint64_t chosen = 0;
  for (int round = 0; round < 2; ++round) {
    int best = -1;
    double best_v = 0.0;
    for (int i = 0; i < 5; ++i) {
      if (chosen >> i & 1) continue;
      double worst = fixtures::kNegInf;
      for (int j = 0; j < 5; ++j) {
        if (j != i && !(chosen >> j & 1)) worst = std::max(worst, e[i][j]);
      }
      if (best < 0 || worst < best_v) {
        best = i;
        best_v = worst;
      }
    }
    chosen |= std::uint64_t{1} << best;
  }
  EXPECT_EQ(fixtures::bits(chosen), (std::vector<int>{0, 3}));
  EXPECT_DOUBLE_EQ(fixtures::bf_mml(e, chosen), 3.0);
  EXPECT_DOUBLE_EQ(fixtures::bf_mmL(e, chosen), 3.0);

  const BudgetSolution gmm = solve_greedy(m, 2, Criterion::kMinimax);
  const BudgetSolution gml = solve_greedy(m, 2, Criterion::kMaximin);
  EXPECT_EQ(gmm.subset, (IndexSet{0, 3}));
  EXPECT_EQ(gml.subset, (IndexSet{0, 3}));
  EXPECT_DOUBLE_EQ(gmm.value.value(), 3.0);
  EXPECT_DOUBLE_EQ(gml.value.value(), 3.0);
  EXPECT_EQ(gmm.criterion, Criterion::kGreedyMinimax);
  // Greedy is not optimal here.
  EXPECT_LT(solve_minimax(m, 2).value, gmm.value);
}

TEST(Greedy, TwoCriteriaShareSubsets) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto inst = fixtures::random_instance(seed, 8, 3, 4);
    const RegretMatrix m = fixtures::matrix_of(inst.e);
    for (int k = 1; k <= 8; ++k) {
      const auto a = solve_greedy(m, k, Criterion::kMinimax);
      const auto b = solve_greedy(m, k, Criterion::kMaximin);
      EXPECT_EQ(a.subset, b.subset);
      EXPECT_EQ(static_cast<int>(a.subset.size()), k);
      EXPECT_EQ(a.value, minimax_regret(m, a.subset));
      EXPECT_EQ(b.value, maximin_regret(m, b.subset));
    }
  }
}

TEST(Oracle, TiesInTheFirstExample) {
  for (Criterion c : {Criterion::kOracleMinimax, Criterion::kOracleMaximin}) {
    const OracleReport r = oracle_enumerate(example1(), 3, c);
    EXPECT_EQ(r.best.tie_count, 2u);
    EXPECT_DOUBLE_EQ(r.best.value.value(), 1.0);
    EXPECT_EQ(r.optimal_subsets, (std::vector<IndexSet>{{0, 1, 2}, {1, 2, 3}}));
    EXPECT_EQ(r.best.subset, (IndexSet{0, 1, 2}));
  }
}

TEST(Oracle, Guard) {
  RegretMatrix big(40);
  EXPECT_THROW(
      {
        try {
          oracle_solve(big, 20, Criterion::kMinimax);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::kGuardExceeded);
          throw;
        }
      },
      Error);
}

TEST(Oracle, ExactSolversAgreeOnRandomInstances) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto inst = fixtures::random_instance(seed, 7, 3, 3);
    const RegretMatrix m = fixtures::matrix_of(inst.e);
    for (int k = 1; k <= 7; ++k) {
      const auto bf_min = fixtures::bf_best(inst.e, k, true);
      const auto bf_max = fixtures::bf_best(inst.e, k, false);
      const auto mm = solve_minimax(m, k);
      const auto ml = solve_maximin(m, k);
      EXPECT_EQ(mm.value.value(), bf_min.value) << seed << " k=" << k;
      EXPECT_EQ(ml.value.value(), bf_max.value) << seed << " k=" << k;
      // LEX picks the lexicographically smallest optimum.
      EXPECT_EQ(mm.subset, bf_min.optima.front());
      EXPECT_EQ(ml.subset, bf_max.optima.front());
      const auto om = oracle_enumerate(m, k, Criterion::kMinimax);
      EXPECT_EQ(om.optimal_subsets, bf_min.optima);
      EXPECT_EQ(om.best.tie_count, bf_min.optima.size());
    }
  }
}

TEST(TieBreak, SeededChoosesAmongOptima) {
  const RegretMatrix m = example1();
  std::set<IndexSet> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const BudgetSolution s = solve_minimax(m, 3, TieBreak::seeded(seed));
    EXPECT_DOUBLE_EQ(s.value.value(), 1.0);
    EXPECT_TRUE(s.subset == (IndexSet{0, 1, 2}) || s.subset == (IndexSet{1, 2, 3}));
    EXPECT_EQ(s.subset, solve_minimax(m, 3, TieBreak::seeded(seed)).subset);
    seen.insert(s.subset);
    const BudgetSolution t = solve_maximin(m, 3, TieBreak::seeded(seed));
    EXPECT_DOUBLE_EQ(t.value.value(), 1.0);
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(TieBreak, SeededValuesMatchLex) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = fixtures::random_instance(seed, 7, 3, 3, 4);
    const RegretMatrix m = fixtures::matrix_of(inst.e);
    for (int k = 1; k < 7; ++k) {
      for (Criterion c : {Criterion::kMinimax, Criterion::kMaximin}) {
        const auto lex = solve(m, k, c);
        const auto rnd = solve(m, k, c, TieBreak::seeded(seed * 31));
        EXPECT_EQ(lex.value, rnd.value);
        const auto check = c == Criterion::kMinimax ? minimax_regret(m, rnd.subset)
                                                    : maximin_regret(m, rnd.subset);
        EXPECT_EQ(check, rnd.value);
      }
    }
  }
}

TEST(Rules, BudgetedRuleBranches) {
  // Negative optimum -> the maximality set.
  EXPECT_EQ(budgeted_rule(example1(), 4, Criterion::kMinimax), (IndexSet{0, 1, 2, 3}));
  EXPECT_EQ(budgeted_rule(example3(), 2, Criterion::kMaximin), (IndexSet{2, 5}));
  // Nonnegative optimum -> the optimal subset.
  EXPECT_EQ(budgeted_rule(example1(), 2, Criterion::kMinimax), (IndexSet{0, 1}));
  EXPECT_EQ(budgeted_rule(example3(), 9, Criterion::kMinimax), (IndexSet{2, 5}));
}

TEST(Rules, DominationGraph) {
  const std::string dot = domination_dot(example3(), -0.7, {"a1", "a2", "a3", "a4", "a5", "a6"});
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  for (const char* edge : {"\"a3\" -> \"a2\"", "\"a3\" -> \"a5\"", "\"a6\" -> \"a1\"",
                           "\"a6\" -> \"a4\""}) {
    EXPECT_NE(dot.find(edge), std::string::npos) << edge;
  }
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(edges, 4u);
}
