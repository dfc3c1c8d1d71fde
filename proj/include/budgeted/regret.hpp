#pragma once

// Pairwise regret table and the set evaluators built on it.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "budgeted/credal.hpp"
#include "budgeted/extended_value.hpp"
#include "budgeted/index_set.hpp"

namespace budgeted {

inline constexpr double kMaximalityTol = 1e-9;

// e(i, j) = upper expectation of (a_j - a_i): the worst expected loss of
// keeping a_i when a_j was available. The diagonal is stored as 0 and never
// read by any evaluator.
class RegretMatrix {
 public:
  RegretMatrix() = default;
  explicit RegretMatrix(int n);

  // From a table laid out like the printed ones: row = j, column = i.
  // Diagonal cells are ignored.
  static RegretMatrix from_row_j_col_i(const std::vector<std::vector<double>>& table);

  int size() const { return n_; }
  double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, double v) { e_[static_cast<std::size_t>(i * n_ + j)] = v; }

  // Restriction to `keep` (sorted), re-indexed 0..|keep|-1.
  RegretMatrix submatrix(const IndexSet& keep) const;

  // Off-diagonal entries in ascending order.
  std::vector<double> sorted_entries() const;

  friend bool operator==(const RegretMatrix&, const RegretMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> e_;
};

// Fills every off-diagonal cell. Vertex-form credal sets go through the SIMD
// expectation kernels; constraint form solves n(n-1) LPs, rows in parallel on
// `threads` workers (0 = default). The result does not depend on `threads`.
RegretMatrix regret_matrix(std::span<const Act> acts, const CredalSet& credal, int threads = 0);

// max over j in `others` of e(i, j); -inf for an empty set.
ExtendedValue worst_regret(const RegretMatrix& m, int i, const IndexSet& others);

// mML(S, A) = min_{i in S} max_{j not in S} e(i, j).
ExtendedValue minimax_regret(const RegretMatrix& m, const IndexSet& s);

// MmL(S, A) = max_{j not in S} min_{i in S} e(i, j).
ExtendedValue maximin_regret(const RegretMatrix& m, const IndexSet& s);

// Acts no other act dominates: m is kept iff e(i, m) >= -kMaximalityTol for
// every i != m. Never empty.
IndexSet maximality(const RegretMatrix& m);

// CSV in printed orientation (row = j, column = i), header row of names,
// empty diagonal cells, 6 decimals.
std::string to_csv(const RegretMatrix& m, const std::vector<std::string>& names);

// Inverse of to_csv. Names from the header are written to `names` if given.
RegretMatrix parse_matrix_csv(std::string_view text, std::vector<std::string>* names = nullptr);

}  // namespace budgeted
