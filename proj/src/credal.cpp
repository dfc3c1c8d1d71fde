#include "budgeted/credal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "budgeted/error.hpp"
#include "budgeted/simd.hpp"

namespace budgeted {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(ErrorKind::kMalformedInput, "states: need at least one state");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail(ErrorKind::kMalformedInput, "states: empty state label");
    if (!seen.insert(l).second) {
      fail(ErrorKind::kMalformedInput, "states: duplicate label '" + l + "'");
    }
  }
}

StateSpace StateSpace::anonymous(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < size; ++s) labels.push_back("w" + std::to_string(s + 1));
  return StateSpace(std::move(labels));
}

void validate_acts(std::span<const Act> acts, std::size_t n_states) {
  if (acts.empty()) fail(ErrorKind::kMalformedInput, "acts: need at least one act");
  for (const Act& a : acts) {
    if (a.payoffs.size() != n_states) {
      fail(ErrorKind::kMalformedInput, "acts: '" + a.name + "' has " +
                                           std::to_string(a.payoffs.size()) +
                                           " payoffs, expected " + std::to_string(n_states));
    }
    for (double x : a.payoffs) {
      if (!std::isfinite(x)) {
        fail(ErrorKind::kMalformedInput, "acts: '" + a.name + "' has a non-finite payoff");
      }
    }
  }
}

CredalSet CredalSet::from_vertices(std::vector<Pmf> vertices) {
  if (vertices.empty()) fail(ErrorKind::kMalformedInput, "credal.vertices: empty list");
  const std::size_t d = vertices.front().size();
  if (d == 0) fail(ErrorKind::kMalformedInput, "credal.vertices: zero-length vertex");
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    Pmf& p = vertices[v];
    const std::string where = "credal.vertices[" + std::to_string(v) + "]";
    if (p.size() != d) fail(ErrorKind::kMalformedInput, where + ": ragged dimension");
    double sum = 0.0;
    for (double& x : p) {
      if (!std::isfinite(x) || x < -kPmfTol) {
        fail(ErrorKind::kMalformedInput, where + ": negative or non-finite mass");
      }
      x = std::max(0.0, x);
      sum += x;
    }
    if (std::fabs(sum - 1.0) > kPmfTol) {
      fail(ErrorKind::kMalformedInput, where + ": masses sum to " + std::to_string(sum));
    }
    // Rescaling leaves a few ulps of error in the sum; skipping sums already
    // that close keeps reloading a serialized set exact.
    if (std::fabs(sum - 1.0) > 1e-14) {
      for (double& x : p) x /= sum;
    }
  }

  CredalSet c;
  c.form_ = Form::kVertices;
  c.dimension_ = d;
  c.vertices_ = std::move(vertices);
  const std::size_t nv = c.vertices_.size();
  c.vertices_t_.assign(d * nv, 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t s = 0; s < d; ++s) c.vertices_t_[s * nv + v] = c.vertices_[v][s];
  }
  return c;
}

CredalSet CredalSet::from_constraints(std::size_t dimension,
                                      std::vector<LinearConstraint> constraints) {
  if (dimension == 0) fail(ErrorKind::kMalformedInput, "credal: zero-dimensional state space");
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto& con = constraints[r];
    if (con.coeffs.size() != dimension) {
      fail(ErrorKind::kMalformedInput, "credal.constraints[" + std::to_string(r) +
                                           "].coeffs: expected " + std::to_string(dimension) +
                                           " entries");
    }
    for (double x : con.coeffs) {
      if (!std::isfinite(x)) {
        fail(ErrorKind::kMalformedInput,
             "credal.constraints[" + std::to_string(r) + "].coeffs: non-finite");
      }
    }
  }
  CredalSet c;
  c.form_ = Form::kConstraints;
  c.dimension_ = dimension;
  c.constraints_ = std::move(constraints);
  const std::vector<lp::Row> le = c.normalized_rows(false);
  const lp::Row simplex_row{std::vector<double>(dimension, 1.0), 1.0};
  c.region_.emplace(dimension, le, std::span<const lp::Row>(&simplex_row, 1));
  return c;
}

std::vector<lp::Row> CredalSet::normalized_rows(bool with_nonnegativity) const {
  std::vector<lp::Row> rows;
  for (const auto& con : constraints_) {
    std::vector<double> neg(con.coeffs.size());
    std::transform(con.coeffs.begin(), con.coeffs.end(), neg.begin(),
                   [](double x) { return -x; });
    switch (con.relation) {
      case Relation::kLessEqual:
        rows.push_back({con.coeffs, con.rhs});
        break;
      case Relation::kGreaterEqual:
        rows.push_back({neg, -con.rhs});
        break;
      case Relation::kEqual:
        rows.push_back({con.coeffs, con.rhs});
        rows.push_back({neg, -con.rhs});
        break;
    }
  }
  if (with_nonnegativity) {
    for (std::size_t s = 0; s < dimension_; ++s) {
      lp::Row r{std::vector<double>(dimension_, 0.0), 0.0};
      r.coeffs[s] = -1.0;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

double CredalSet::upper_expectation(std::span<const double> gamble) const {
  if (gamble.size() != dimension_) {
    fail(ErrorKind::kMalformedInput, "gamble has " + std::to_string(gamble.size()) +
                                         " entries, credal set has dimension " +
                                         std::to_string(dimension_));
  }
  if (form_ == Form::kVertices) {
    return simd::active_kernels().max_dot(vertices_t_.data(), vertices_.size(), dimension_,
                                          gamble.data());
  }
  return region_->maximize(gamble).value;
}

double upper_expectation(const CredalSet& credal, std::span<const double> gamble) {
  return credal.upper_expectation(gamble);
}

double lower_expectation(const CredalSet& credal, std::span<const double> gamble) {
  std::vector<double> neg(gamble.begin(), gamble.end());
  for (double& x : neg) x = -x;
  return -credal.upper_expectation(neg);
}

namespace {

// Solves the square system in place by Gaussian elimination with partial
// pivoting. Returns false when (numerically) singular.
bool solve_square(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
    }
    if (std::fabs(a[piv * n + col]) < 1e-12) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i * n + c] * b[c];
    b[i] = acc / a[i * n + i];
  }
  return true;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Pmf> vertices_of(const CredalSet& credal) {
  if (credal.form() == CredalSet::Form::kVertices) return credal.vertices();

  const std::size_t d = credal.dimension();
  if (d > kVertexEnumMaxStates) {
    fail(ErrorKind::kGuardExceeded, "vertex enumeration limited to " +
                                        std::to_string(kVertexEnumMaxStates) + " states");
  }
  const std::vector<lp::Row> rows = credal.normalized_rows(true);
  const std::size_t q = rows.size();
  const std::size_t pick = d - 1;  // plus the implicit sum-to-one row
  if (binomial(q, pick) > 5e6) {
    fail(ErrorKind::kGuardExceeded, "vertex enumeration: too many constraint subsets");
  }

  std::vector<Pmf> out;
  auto accept = [&](const Pmf& p) {
    for (const auto& r : rows) {
      double lhs = 0.0;
      for (std::size_t s = 0; s < d; ++s) lhs += r.coeffs[s] * p[s];
      if (lhs > r.rhs + kPmfTol) return;
    }
    for (const Pmf& seen : out) {
      bool same = true;
      for (std::size_t s = 0; s < d && same; ++s) same = std::fabs(seen[s] - p[s]) <= kPmfTol;
      if (same) return;
    }
    out.push_back(p);
  };

  // Walk all combinations of `pick` active rows in lexicographic order.
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    std::vector<double> a(d * d, 0.0);
    std::vector<double> b(d, 0.0);
    for (std::size_t i = 0; i < pick; ++i) {
      for (std::size_t s = 0; s < d; ++s) a[i * d + s] = rows[idx[i]].coeffs[s];
      b[i] = rows[idx[i]].rhs;
    }
    for (std::size_t s = 0; s < d; ++s) a[pick * d + s] = 1.0;
    b[pick] = 1.0;
    if (solve_square(a, b, d)) {
      for (double& x : b) {
        if (std::fabs(x) < 1e-13) x = 0.0;
      }
      accept(b);
    }
    if (pick == 0) break;
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == q - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (out.empty()) fail(ErrorKind::kInfeasible, "constraint set has no vertex");
  return out;
}

CredalSet product_of_intervals(std::span<const LabelInterval> labels) {
  const std::size_t m = labels.size();
  if (m == 0 || m > 16) fail(ErrorKind::kMalformedInput, "product model: need 1..16 labels");
  for (std::size_t l = 0; l < m; ++l) {
    const auto& iv = labels[l];
    if (!(iv.lower >= 0.0 && iv.lower <= iv.upper && iv.upper <= 1.0)) {
      fail(ErrorKind::kMalformedInput, "product model: bad interval for label " +
                                           std::to_string(l + 1));
    }
  }
  const std::size_t n_states = std::size_t{1} << m;
  std::vector<Pmf> vertices;
  for (std::size_t combo = 0; combo < n_states; ++combo) {
    // Bit (m-1-l) of combo selects the upper bound for label l.
    std::vector<double> present(m);
    for (std::size_t l = 0; l < m; ++l) {
      const bool upper = (combo >> (m - 1 - l)) & 1U;
      present[l] = upper ? labels[l].upper : labels[l].lower;
    }
    Pmf p(n_states, 1.0);
    for (std::size_t state = 0; state < n_states; ++state) {
      double mass = 1.0;
      for (std::size_t l = 0; l < m; ++l) {
        const bool on = (state >> (m - 1 - l)) & 1U;
        mass *= on ? present[l] : 1.0 - present[l];
      }
      p[state] = mass;
    }
    vertices.push_back(std::move(p));
  }
  return CredalSet::from_vertices(std::move(vertices));
}

}  // namespace budgeted
