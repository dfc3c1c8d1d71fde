#pragma once

#include <vector>

#include "budgeted/budget.hpp"
#include "budgeted/rng.hpp"

namespace budgeted::detail {

// perm[p] = original index of relabelled act p.
inline std::vector<int> seeded_permutation(int n, std::uint64_t seed) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Xoshiro256 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, i));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

inline RegretMatrix permute(const RegretMatrix& m, const std::vector<int>& perm) {
  const int n = m.size();
  RegretMatrix out(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p != q) {
        out.set(p, q, m(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)]));
      }
    }
  }
  return out;
}

inline IndexSet unpermute(const IndexSet& s, const std::vector<int>& perm) {
  IndexSet out;
  for (int p : s) out.push_back(perm[static_cast<std::size_t>(p)]);
  return normalize(std::move(out));
}

// Runs `lex_solve` directly, or on a randomly relabelled copy of the matrix
// for seeded tie-breaking, and maps the subset back.
template <typename LexSolve>
BudgetSolution with_tie_break(const RegretMatrix& m, TieBreak tie, LexSolve lex_solve) {
  if (tie.kind == TieBreak::Kind::kLex) {
    BudgetSolution s = lex_solve(m);
    s.tie_break = tie;
    return s;
  }
  const auto perm = seeded_permutation(m.size(), tie.seed);
  BudgetSolution s = lex_solve(permute(m, perm));
  s.subset = unpermute(s.subset, perm);
  s.tie_break = tie;
  return s;
}

inline void require_budget(int k) {
  if (k < 1) fail(ErrorKind::kMalformedInput, "k must be >= 1, got " + std::to_string(k));
}

}  // namespace budgeted::detail
