#include <algorithm>
#include <functional>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "relabel.hpp"

namespace budgeted {
namespace {

BudgetSolution solve_minimax_lex(const RegretMatrix& m, int k) {
  const int n = m.size();
  BudgetSolution sol;
  sol.criterion = Criterion::kMinimax;
  if (k >= n) {
    sol.subset = full_set(n);
    sol.value = ExtendedValue::neg_infinity();
    return sol;
  }

  // M[i]: k-th largest e(i, j) over j != i. Keeping i plus the k-1 acts that
  // beat it worst leaves M[i] as i's loss.
  std::vector<double> kth(static_cast<std::size_t>(n));
  std::vector<double> row;
  for (int i = 0; i < n; ++i) {
    row.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i) row.push_back(m(i, j));
    }
    std::nth_element(row.begin(), row.begin() + (k - 1), row.end(), std::greater<>());
    kth[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(k - 1)];
  }
  const double best = *std::min_element(kth.begin(), kth.end());

  // Among all i attaining the minimum, the smallest subset keeps i and every
  // j with e(i, j) > best, then fills up with the lowest free indices.
  std::optional<IndexSet> winner;
  for (int i = 0; i < n; ++i) {
    if (kth[static_cast<std::size_t>(i)] != best) continue;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    in[static_cast<std::size_t>(i)] = 1;
    int size = 1;
    for (int j = 0; j < n; ++j) {
      if (j != i && m(i, j) > best) {
        in[static_cast<std::size_t>(j)] = 1;
        ++size;
      }
    }
    for (int j = 0; j < n && size < k; ++j) {
      if (!in[static_cast<std::size_t>(j)]) {
        in[static_cast<std::size_t>(j)] = 1;
        ++size;
      }
    }
    IndexSet candidate;
    for (int j = 0; j < n; ++j) {
      if (in[static_cast<std::size_t>(j)]) candidate.push_back(j);
    }
    if (!winner || candidate < *winner) winner = std::move(candidate);
  }
  sol.subset = std::move(*winner);
  sol.value = ExtendedValue(best);
  return sol;
}

}  // namespace

BudgetSolution solve_minimax(const RegretMatrix& m, int k, TieBreak tie) {
  detail::require_budget(k);
  return detail::with_tie_break(m, tie,
                                [k](const RegretMatrix& mm) { return solve_minimax_lex(mm, k); });
}

}  // namespace budgeted
