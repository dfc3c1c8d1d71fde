#pragma once

// Worked instances and brute-force helpers shared by the unit and acceptance
// tests. The brute-force code below reads raw tables only and deliberately
// avoids the library's evaluators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "budgeted/credal.hpp"
#include "budgeted/regret.hpp"
#include "budgeted/rng.hpp"

namespace fixtures {

using budgeted::Act;
using budgeted::CredalSet;
using budgeted::LinearConstraint;
using budgeted::Relation;

using Table = std::vector<std::vector<double>>;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// p3 <= p1, p3 <= 0.3 on three states.
inline CredalSet three_state_credal() {
  return CredalSet::from_constraints(3, {{{-1, 0, 1}, Relation::kLessEqual, 0.0},
                                         {{0, 0, 1}, Relation::kLessEqual, 0.3}});
}

inline std::vector<Act> example1_acts() {
  return {{"a1", {6, 3, 1}}, {"a2", {2, 7, 4}}, {"a3", {5, 1, 8}}, {"a4", {5, 4, 3}},
          {"a5", {1, 2, 6}}};
}

inline std::vector<Act> example3_acts() {
  return {{"a1", {6, 4, 2}},  {"a2", {7, 1, 4}}, {"a3", {10, 4, 8}},
          {"a4", {2, 7, 2}},  {"a5", {7, 1, 9}}, {"a6", {7, 8, 2}}};
}

// Row j, column i, diagonal unused.
inline const Table kExample1Printed = {{0, 4.0, 2.0, 1.0, 5.0},
                                       {4.0, 0, 6.0, 3.0, 5.0},
                                       {1.4, 3.3, 0, 1.5, 4.0},
                                       {1.0, 3.0, 3.0, 0, 4.0},
                                       {-0.4, -0.1, 1.0, -1.1, 0}};

inline const Table kExample3Printed = {{0, 3.0, 0.0, 4.0, 3.0, -0.7},
                                       {1.3, 0, -3.0, 5.0, 0.0, 0.6},
                                       {4.6, 3.3, 0, 8.0, 3.0, 3.9},
                                       {3.0, 6.0, 3.0, 0, 6.0, -1.0},
                                       {2.8, 1.5, -1.8, 5.6, 0, 2.1},
                                       {4.0, 7.0, 4.0, 5.0, 7.0, 0}};

inline std::vector<Act> financial_acts() {
  const Table p = {{37, 25, 23, 73, 91}, {50, 67, 2, 44, 94}, {60, 4, 96, 1, 83},
                   {16, 24, 31, 26, 100}, {3, 86, 76, 85, 11}, {12, 49, 66, 56, 14},
                   {39, 10, 92, 88, 57}, {62, 52, 80, 71, 42}, {90, 8, 74, 70, 38},
                   {63, 68, 36, 69, 9}};
  std::vector<Act> acts;
  for (std::size_t i = 0; i < p.size(); ++i) acts.push_back({"a" + std::to_string(i + 1), p[i]});
  return acts;
}

inline CredalSet financial_credal() {
  const double lo[] = {0.1, 0.05, 0.1, 0.2, 0.1};
  const double hi[] = {0.3, 0.2, 0.2, 0.4, 0.3};
  std::vector<LinearConstraint> cs;
  for (int s = 0; s < 5; ++s) {
    std::vector<double> e(5, 0.0);
    e[static_cast<std::size_t>(s)] = 1.0;
    cs.push_back({e, Relation::kGreaterEqual, lo[s]});
    cs.push_back({e, Relation::kLessEqual, hi[s]});
  }
  return CredalSet::from_constraints(5, cs);
}

// e[i][j] from a row-j/column-i printed table.
inline Table transpose(const Table& printed) {
  Table e(printed.size(), std::vector<double>(printed.size()));
  for (std::size_t j = 0; j < printed.size(); ++j) {
    for (std::size_t i = 0; i < printed.size(); ++i) e[i][j] = printed[j][i];
  }
  return e;
}

inline Table raw(const budgeted::RegretMatrix& m) {
  const int n = m.size();
  Table e(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return e;
}

// min_{i in S} max_{j notin S} e[i][j] on a bit mask.
inline double bf_mml(const Table& e, std::uint64_t s) {
  const int n = static_cast<int>(e.size());
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (!(s >> i & 1)) continue;
    double worst = kNegInf;
    for (int j = 0; j < n; ++j) {
      if (!(s >> j & 1)) worst = std::max(worst, e[i][j]);
    }
    best = std::min(best, worst);
  }
  return best;
}

// max_{j notin S} min_{i in S} e[i][j] on a bit mask.
inline double bf_mmL(const Table& e, std::uint64_t s) {
  const int n = static_cast<int>(e.size());
  double worst = kNegInf;
  for (int j = 0; j < n; ++j) {
    if (s >> j & 1) continue;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) best = std::min(best, e[i][j]);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

struct BruteForce {
  double value = 0.0;
  std::vector<std::vector<int>> optima;  // sorted index lists, lexicographic
};

inline std::vector<int> bits(std::uint64_t s) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if (s >> i & 1) out.push_back(i);
  }
  return out;
}

inline BruteForce bf_best(const Table& e, int k, bool minimax) {
  const int n = static_cast<int>(e.size());
  k = std::min(k, n);
  BruteForce r;
  r.value = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) != k) continue;
    const double v = minimax ? bf_mml(e, s) : bf_mmL(e, s);
    if (v < r.value) {
      r.value = v;
      r.optima.clear();
    }
    if (v == r.value) r.optima.push_back(bits(s));
  }
  std::sort(r.optima.begin(), r.optima.end());
  return r;
}

// Acts m with e[i][m] >= -1e-9 for every other i.
inline std::vector<int> bf_maximal(const Table& e) {
  std::vector<int> out;
  for (std::size_t m = 0; m < e.size(); ++m) {
    bool keep = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != m && e[i][m] < -1e-9) keep = false;
    }
    if (keep) out.push_back(static_cast<int>(m));
  }
  return out;
}

struct RandomInstance {
  std::vector<Act> acts;
  std::vector<budgeted::Pmf> vertices;
  Table e;  // computed directly as max_v sum_s p_v(s) (a_j(s) - a_i(s))
};

// Small instance with integer payoffs in [0, span] and Dirichlet(1) vertices.
inline RandomInstance random_instance(std::uint64_t seed, int n_acts, int n_states, int n_vertices,
                                      int span = 10) {
  budgeted::Xoshiro256 rng(seed);
  RandomInstance r;
  for (int v = 0; v < n_vertices; ++v) {
    budgeted::Pmf p(static_cast<std::size_t>(n_states));
    double sum = 0.0;
    for (double& x : p) {
      x = -std::log(rng.uniform_open());
      sum += x;
    }
    for (double& x : p) x /= sum;
    r.vertices.push_back(p);
  }
  for (int a = 0; a < n_acts; ++a) {
    Act act{"a" + std::to_string(a + 1), {}};
    for (int s = 0; s < n_states; ++s) act.payoffs.push_back(static_cast<double>(rng.uniform_int(0, span)));
    r.acts.push_back(act);
  }
  const auto n = static_cast<std::size_t>(n_acts);
  r.e.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double best = kNegInf;
      for (const auto& p : r.vertices) {
        double s = 0.0;
        for (std::size_t w = 0; w < p.size(); ++w) {
          s += p[w] * (r.acts[j].payoffs[w] - r.acts[i].payoffs[w]);
        }
        best = std::max(best, s);
      }
      r.e[i][j] = best;
    }
  }
  return r;
}

// A RegretMatrix holding exactly the given e[i][j].
inline budgeted::RegretMatrix matrix_of(const Table& e) {
  budgeted::RegretMatrix m(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i != j) m.set(static_cast<int>(i), static_cast<int>(j), e[i][j]);
    }
  }
  return m;
}

}  // namespace fixtures
