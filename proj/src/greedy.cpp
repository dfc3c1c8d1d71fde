#include <limits>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "relabel.hpp"

namespace budgeted {
namespace {

// Chooser and adversary both range over the acts not yet selected.
IndexSet greedy_subset_lex(const RegretMatrix& m, int k) {
  const int n = m.size();
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  IndexSet chosen;
  for (int round = 0; round < std::min(k, n); ++round) {
    int best = -1;
    double best_loss = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      double loss = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        if (j != i && !taken[static_cast<std::size_t>(j)]) loss = std::max(loss, m(i, j));
      }
      if (best < 0 || loss < best_loss) {
        best = i;
        best_loss = loss;
      }
    }
    taken[static_cast<std::size_t>(best)] = 1;
    chosen.push_back(best);
  }
  return normalize(std::move(chosen));
}

}  // namespace

BudgetSolution solve_greedy(const RegretMatrix& m, int k, Criterion criterion, TieBreak tie) {
  detail::require_budget(k);
  bool minimax = false;
  switch (criterion) {
    case Criterion::kMinimax:
    case Criterion::kGreedyMinimax:
      minimax = true;
      break;
    case Criterion::kMaximin:
    case Criterion::kGreedyMaximin:
      break;
    default:
      fail(ErrorKind::kMalformedInput, "greedy: criterion must be minimax or maximin");
  }
  BudgetSolution sol = detail::with_tie_break(m, tie, [k](const RegretMatrix& mm) {
    BudgetSolution s;
    s.subset = greedy_subset_lex(mm, k);
    return s;
  });
  // Scored against the full act set.
  sol.value = minimax ? minimax_regret(m, sol.subset) : maximin_regret(m, sol.subset);
  sol.criterion = minimax ? Criterion::kGreedyMinimax : Criterion::kGreedyMaximin;
  return sol;
}

}  // namespace budgeted
