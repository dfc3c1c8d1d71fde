#pragma once

// Dense two-phase simplex for small problems:
//
//   maximize c.x  subject to  L x <= l,  E x = e,  x >= 0.
//
// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
// basic variable on ratio ties), so it cannot cycle.

#include <cstddef>
#include <span>
#include <vector>

namespace budgeted::lp {

inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kOptimalityTol = 1e-9;

struct Row {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;  // structural variables only
};

// A nonempty polyhedron with a feasible basis already found by phase one.
// Immutable once built; maximize() works on a private copy of the tableau.
class FeasibleRegion {
 public:
  // Runs phase one. Throws Error(kInfeasible) when the region is empty and
  // Error(kMalformedInput) on ragged rows.
  FeasibleRegion(std::size_t n_vars, std::span<const Row> le_rows,
                 std::span<const Row> eq_rows);

  std::size_t n_vars() const { return n_vars_; }

  // Phase two from the stored basis. An unbounded objective raises
  // Error(kInternal): callers only pose bounded problems.
  LpSolution maximize(std::span<const double> objective) const;

 private:
  std::size_t n_vars_ = 0;   // structural
  std::size_t n_cols_ = 0;   // structural + slack/surplus
  std::size_t n_rows_ = 0;
  std::vector<double> tableau_;  // n_rows_ x (n_cols_ + 1), rhs last
  std::vector<std::size_t> basis_;
};

}  // namespace budgeted::lp
