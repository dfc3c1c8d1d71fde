#include "budgeted/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "budgeted/error.hpp"
#include "budgeted/simd.hpp"

namespace budgeted::lp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Working tableau: rows x (cols + 1), the last column holds the rhs.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> cells;
  std::vector<std::size_t> basis;

  double* row(std::size_t r) { return cells.data() + r * (cols + 1); }
  const double* row(std::size_t r) const { return cells.data() + r * (cols + 1); }
  double& at(std::size_t r, std::size_t c) { return cells[r * (cols + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return cells[r * (cols + 1) + c]; }
  double rhs(std::size_t r) const { return at(r, cols); }
};

void pivot(Tableau& t, std::vector<double>& reduced, std::size_t pr, std::size_t pc) {
  const auto& k = simd::active_kernels();
  const std::size_t width = t.cols + 1;
  double* prow = t.row(pr);
  const double inv = 1.0 / prow[pc];
  for (std::size_t c = 0; c < width; ++c) prow[c] *= inv;
  prow[pc] = 1.0;
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (r == pr) continue;
    double* row = t.row(r);
    const double f = row[pc];
    if (f != 0.0) {
      k.sub_scaled(row, prow, f, width);
      row[pc] = 0.0;
    }
  }
  const double f = reduced[pc];
  if (f != 0.0) {
    k.sub_scaled(reduced.data(), prow, f, width);
    reduced[pc] = 0.0;
  }
  t.basis[pr] = pc;
}

// reduced[j] = c_j - sum_r c_{basis[r]} T[r][j]; reduced[cols] = -objective.
std::vector<double> reduced_costs(const Tableau& t, std::span<const double> cost) {
  std::vector<double> reduced(t.cols + 1, 0.0);
  for (std::size_t c = 0; c < t.cols; ++c) reduced[c] = cost[c];
  const auto& k = simd::active_kernels();
  for (std::size_t r = 0; r < t.rows; ++r) {
    const double cb = cost[t.basis[r]];
    if (cb != 0.0) k.sub_scaled(reduced.data(), t.row(r), cb, t.cols + 1);
  }
  return reduced;
}

enum class Outcome { kOptimal, kUnbounded };

// Maximizes over columns [0, usable_cols). Bland's rule throughout.
Outcome run_simplex(Tableau& t, std::vector<double>& reduced, std::size_t usable_cols) {
  const std::size_t max_iters = 50000;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::size_t enter = kNone;
    for (std::size_t c = 0; c < usable_cols; ++c) {
      if (reduced[c] > kOptimalityTol) {
        enter = c;
        break;
      }
    }
    if (enter == kNone) return Outcome::kOptimal;

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows; ++r) {
      const double a = t.at(r, enter);
      if (a > kFeasibilityTol) best = std::min(best, t.rhs(r) / a);
    }
    std::size_t leave = kNone;
    for (std::size_t r = 0; r < t.rows; ++r) {
      const double a = t.at(r, enter);
      if (a <= kFeasibilityTol || t.rhs(r) / a > best + 1e-12) continue;
      if (leave == kNone || t.basis[r] < t.basis[leave]) leave = r;
    }
    if (leave == kNone) return Outcome::kUnbounded;
    pivot(t, reduced, leave, enter);
  }
  fail(ErrorKind::kInternal, "simplex iteration limit reached");
}

}  // namespace

FeasibleRegion::FeasibleRegion(std::size_t n_vars, std::span<const Row> le_rows,
                               std::span<const Row> eq_rows)
    : n_vars_(n_vars) {
  for (const auto* rows : {&le_rows, &eq_rows}) {
    for (const Row& r : *rows) {
      if (r.coeffs.size() != n_vars) {
        fail(ErrorKind::kMalformedInput, "constraint row has " +
                                             std::to_string(r.coeffs.size()) +
                                             " coefficients, expected " +
                                             std::to_string(n_vars));
      }
      if (!std::isfinite(r.rhs)) fail(ErrorKind::kMalformedInput, "non-finite rhs");
    }
  }

  // Columns: structural | one slack per <= row | one artificial per row that
  // cannot start with its slack basic (negative rhs or equality).
  const std::size_t n_le = le_rows.size();
  const std::size_t m = n_le + eq_rows.size();
  std::size_t n_art = 0;
  for (const Row& r : le_rows) n_art += r.rhs < 0.0 ? 1 : 0;
  n_art += eq_rows.size();
  const std::size_t n_real = n_vars + n_le;

  Tableau t;
  t.rows = m;
  t.cols = n_real + n_art;
  t.cells.assign(m * (t.cols + 1), 0.0);
  t.basis.assign(m, kNone);

  std::size_t art = n_real;
  for (std::size_t r = 0; r < m; ++r) {
    const bool is_le = r < n_le;
    const Row& src = is_le ? le_rows[r] : eq_rows[r - n_le];
    const double sign = src.rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n_vars; ++c) t.at(r, c) = sign * src.coeffs[c];
    t.at(r, t.cols) = sign * src.rhs;
    if (is_le) t.at(r, n_vars + r) = sign;
    if (is_le && sign > 0.0) {
      t.basis[r] = n_vars + r;
    } else {
      t.at(r, art) = 1.0;
      t.basis[r] = art++;
    }
  }

  // Phase one: maximize -sum(artificials).
  std::vector<double> cost(t.cols, 0.0);
  for (std::size_t c = n_real; c < t.cols; ++c) cost[c] = -1.0;
  std::vector<double> reduced = reduced_costs(t, cost);
  if (run_simplex(t, reduced, t.cols) != Outcome::kOptimal) {
    fail(ErrorKind::kInternal, "phase one reported unbounded");
  }
  double infeasibility = 0.0;
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (t.basis[r] >= n_real) infeasibility += t.rhs(r);
  }
  if (infeasibility > kFeasibilityTol) {
    fail(ErrorKind::kInfeasible, "constraint set has no feasible point");
  }

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are linearly dependent and get dropped.
  std::vector<bool> keep(t.rows, true);
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (t.basis[r] < n_real) continue;
    std::size_t col = kNone;
    for (std::size_t c = 0; c < n_real; ++c) {
      if (std::fabs(t.at(r, c)) > kFeasibilityTol) {
        col = c;
        break;
      }
    }
    if (col == kNone) {
      keep[r] = false;
    } else {
      pivot(t, reduced, r, col);
    }
  }

  n_cols_ = n_real;
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (!keep[r]) continue;
    const double* row = t.row(r);
    tableau_.insert(tableau_.end(), row, row + n_real);
    // Clamp tiny negative rhs left by rounding.
    tableau_.push_back(std::max(0.0, row[t.cols]));
    basis_.push_back(t.basis[r]);
  }
  n_rows_ = basis_.size();
}

LpSolution FeasibleRegion::maximize(std::span<const double> objective) const {
  if (objective.size() != n_vars_) {
    fail(ErrorKind::kMalformedInput, "objective has " + std::to_string(objective.size()) +
                                         " entries, expected " + std::to_string(n_vars_));
  }
  Tableau t;
  t.rows = n_rows_;
  t.cols = n_cols_;
  t.cells = tableau_;
  t.basis = basis_;

  std::vector<double> cost(n_cols_, 0.0);
  for (std::size_t c = 0; c < n_vars_; ++c) cost[c] = objective[c];
  std::vector<double> reduced = reduced_costs(t, cost);
  if (run_simplex(t, reduced, t.cols) == Outcome::kUnbounded) {
    fail(ErrorKind::kInternal, "LP unbounded over a compact credal set");
  }

  LpSolution sol;
  sol.x.assign(n_vars_, 0.0);
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (t.basis[r] < n_vars_) sol.x[t.basis[r]] = t.rhs(r);
  }
  // Objective evaluated at the optimal vertex.
  double value = 0.0;
  for (std::size_t c = 0; c < n_vars_; ++c) value += objective[c] * sol.x[c];
  sol.value = value;
  return sol;
}

}  // namespace budgeted::lp
