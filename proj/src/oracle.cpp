#include <cmath>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "relabel.hpp"

namespace budgeted {

OracleReport oracle_enumerate(const RegretMatrix& m, int k, Criterion criterion) {
  detail::require_budget(k);
  bool minimax = false;
  switch (criterion) {
    case Criterion::kMinimax:
    case Criterion::kOracleMinimax:
      minimax = true;
      break;
    case Criterion::kMaximin:
    case Criterion::kOracleMaximin:
      break;
    default:
      fail(ErrorKind::kMalformedInput, "oracle: criterion must be minimax or maximin");
  }
  const int n = m.size();
  const int size = std::min(k, n);
  double count = 1.0;
  for (int t = 1; t <= size; ++t) count = count * (n - size + t) / t;
  if (count > kOracleMaxSubsets) {
    fail(ErrorKind::kGuardExceeded, "oracle: C(" + std::to_string(n) + ", " +
                                        std::to_string(size) + ") exceeds 10^6 subsets");
  }

  OracleReport report;
  report.best.criterion = minimax ? Criterion::kOracleMinimax : Criterion::kOracleMaximin;
  bool have = false;
  IndexSet s(static_cast<std::size_t>(size));
  for (int t = 0; t < size; ++t) s[static_cast<std::size_t>(t)] = t;
  while (true) {
    const ExtendedValue v = minimax ? minimax_regret(m, s) : maximin_regret(m, s);
    if (!have || v < report.best.value) {
      have = true;
      report.best.value = v;
      report.optimal_subsets.assign(1, s);
    } else if (v == report.best.value) {
      report.optimal_subsets.push_back(s);
    }
    int t = size;
    while (t > 0 && s[static_cast<std::size_t>(t - 1)] == n - size + t - 1) --t;
    if (t == 0) break;
    ++s[static_cast<std::size_t>(t - 1)];
    for (int u = t; u < size; ++u) s[static_cast<std::size_t>(u)] = s[static_cast<std::size_t>(u - 1)] + 1;
  }
  report.best.subset = report.optimal_subsets.front();
  report.best.tie_count = report.optimal_subsets.size();
  return report;
}

BudgetSolution oracle_solve(const RegretMatrix& m, int k, Criterion criterion) {
  return oracle_enumerate(m, k, criterion).best;
}

}  // namespace budgeted
