#include <cstdio>
#include <sstream>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"

namespace budgeted {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kMinimax:
      return "minimax";
    case Criterion::kMaximin:
      return "maximin";
    case Criterion::kGreedyMinimax:
      return "greedy-minimax";
    case Criterion::kGreedyMaximin:
      return "greedy-maximin";
    case Criterion::kOracleMinimax:
      return "oracle-minimax";
    case Criterion::kOracleMaximin:
      return "oracle-maximin";
  }
  return "unknown";
}

BudgetSolution solve(const RegretMatrix& m, int k, Criterion criterion, TieBreak tie) {
  switch (criterion) {
    case Criterion::kMinimax:
      return solve_minimax(m, k, tie);
    case Criterion::kMaximin:
      return solve_maximin(m, k, tie);
    case Criterion::kGreedyMinimax:
    case Criterion::kGreedyMaximin:
      return solve_greedy(m, k, criterion, tie);
    case Criterion::kOracleMinimax:
    case Criterion::kOracleMaximin:
      return oracle_solve(m, k, criterion);
  }
  fail(ErrorKind::kInternal, "unknown criterion");
}

IndexSet budgeted_rule(const RegretMatrix& m, int k, Criterion criterion, TieBreak tie) {
  const BudgetSolution sol = solve(m, k, criterion, tie);
  if (m.size() <= k || sol.value.is_negative()) return maximality(m);
  return sol.subset;
}

std::string domination_dot(const RegretMatrix& m, double alpha,
                           const std::vector<std::string>& names) {
  const CoverFamily covers = CoverFamily::build(m, alpha);
  auto name = [&](int i) {
    return static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                       : "a" + std::to_string(i + 1);
  };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", alpha);
  std::ostringstream out;
  out << "digraph domination {\n";
  out << "  label=\"alpha = " << buf << "\";\n";
  for (int i = 0; i < m.size(); ++i) out << "  \"" << name(i) << "\";\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j : covers.at(i)) out << "  \"" << name(i) << "\" -> \"" << name(j) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace budgeted
