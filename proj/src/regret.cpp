#include "budgeted/regret.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "budgeted/error.hpp"
#include "budgeted/parallel.hpp"
#include "budgeted/simd.hpp"

namespace budgeted {

RegretMatrix::RegretMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {
  if (n < 1) fail(ErrorKind::kMalformedInput, "regret matrix: need at least one act");
}

RegretMatrix RegretMatrix::from_row_j_col_i(const std::vector<std::vector<double>>& table) {
  const int n = static_cast<int>(table.size());
  RegretMatrix m(n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(table[j].size()) != n) {
      fail(ErrorKind::kMalformedInput, "regret matrix: row " + std::to_string(j + 1) +
                                           " has " + std::to_string(table[j].size()) +
                                           " cells, expected " + std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const double v = table[j][i];
      if (!std::isfinite(v)) fail(ErrorKind::kMalformedInput, "regret matrix: non-finite cell");
      m.set(i, j, v);
    }
  }
  return m;
}

RegretMatrix RegretMatrix::submatrix(const IndexSet& keep) const {
  RegretMatrix out(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a != b) out.set(static_cast<int>(a), static_cast<int>(b), (*this)(keep[a], keep[b]));
    }
  }
  return out;
}

std::vector<double> RegretMatrix::sorted_entries() const {
  std::vector<double> out;
  out.reserve(e_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) out.push_back((*this)(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RegretMatrix regret_matrix(std::span<const Act> acts, const CredalSet& credal, int threads) {
  validate_acts(acts, credal.dimension());
  const int n = static_cast<int>(acts.size());
  const std::size_t d = credal.dimension();
  RegretMatrix m(n);

  if (credal.form() == CredalSet::Form::kVertices) {
    const auto& k = simd::active_kernels();
    const std::size_t nv = credal.vertices().size();
    std::vector<double> flat(nv * d);
    for (std::size_t v = 0; v < nv; ++v) {
      std::copy(credal.vertices()[v].begin(), credal.vertices()[v].end(), flat.begin() + v * d);
    }
    std::vector<double> payoffs_t(d * acts.size());
    for (std::size_t a = 0; a < acts.size(); ++a) {
      for (std::size_t s = 0; s < d; ++s) payoffs_t[s * acts.size() + a] = acts[a].payoffs[s];
    }
    // expect[v * n + a] = E_{p_v}(a)
    std::vector<double> expect(nv * acts.size());
    k.expectation_matrix(flat.data(), nv, d, payoffs_t.data(), acts.size(), expect.data());
    std::vector<double> row(acts.size());
    for (int i = 0; i < n; ++i) {
      k.max_difference_row(expect.data(), nv, acts.size(), static_cast<std::size_t>(i),
                           row.data());
      for (int j = 0; j < n; ++j) {
        if (j != i) m.set(i, j, row[static_cast<std::size_t>(j)]);
      }
    }
    return m;
  }

  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t ui) {
    const int i = static_cast<int>(ui);
    std::vector<double> gamble(d);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t s = 0; s < d; ++s) {
        gamble[s] = acts[static_cast<std::size_t>(j)].payoffs[s] - acts[ui].payoffs[s];
      }
      m.set(i, j, credal.upper_expectation(gamble));
    }
  });
  return m;
}

ExtendedValue worst_regret(const RegretMatrix& m, int i, const IndexSet& others) {
  const int n = m.size();
  if (i < 0 || i >= n) fail(ErrorKind::kMalformedInput, "worst_regret: act index out of range");
  ExtendedValue best = ExtendedValue::neg_infinity();
  for (int j : others) {
    if (j < 0 || j >= n) fail(ErrorKind::kMalformedInput, "worst_regret: index out of range");
    if (j == i) fail(ErrorKind::kMalformedInput, "worst_regret: act is among its adversaries");
    best = std::max(best, ExtendedValue(m(i, j)));
  }
  return best;
}

namespace {

std::vector<char> membership(const RegretMatrix& m, const IndexSet& s, const char* who) {
  if (s.empty()) fail(ErrorKind::kMalformedInput, std::string(who) + ": empty subset");
  std::vector<char> in(static_cast<std::size_t>(m.size()), 0);
  for (int i : s) {
    if (i < 0 || i >= m.size()) {
      fail(ErrorKind::kMalformedInput, std::string(who) + ": index out of range");
    }
    in[static_cast<std::size_t>(i)] = 1;
  }
  return in;
}

}  // namespace

ExtendedValue minimax_regret(const RegretMatrix& m, const IndexSet& s) {
  const auto in = membership(m, s, "minimax_regret");
  const int n = m.size();
  ExtendedValue best{std::numeric_limits<double>::infinity()};
  for (int i = 0; i < n; ++i) {
    if (!in[static_cast<std::size_t>(i)]) continue;
    ExtendedValue worst = ExtendedValue::neg_infinity();
    for (int j = 0; j < n; ++j) {
      if (!in[static_cast<std::size_t>(j)]) worst = std::max(worst, ExtendedValue(m(i, j)));
    }
    best = std::min(best, worst);
  }
  return best;
}

ExtendedValue maximin_regret(const RegretMatrix& m, const IndexSet& s) {
  const auto in = membership(m, s, "maximin_regret");
  const int n = m.size();
  ExtendedValue worst = ExtendedValue::neg_infinity();
  for (int j = 0; j < n; ++j) {
    if (in[static_cast<std::size_t>(j)]) continue;
    double reply = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (in[static_cast<std::size_t>(i)]) reply = std::min(reply, m(i, j));
    }
    worst = std::max(worst, ExtendedValue(reply));
  }
  return worst;
}

IndexSet maximality(const RegretMatrix& m) {
  IndexSet out;
  const int n = m.size();
  for (int a = 0; a < n; ++a) {
    bool dominated = false;
    for (int i = 0; i < n && !dominated; ++i) {
      dominated = i != a && m(i, a) < -kMaximalityTol;
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::string to_csv(const RegretMatrix& m, const std::vector<std::string>& names) {
  const int n = m.size();
  auto name = [&](int i) {
    return static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                       : "a" + std::to_string(i + 1);
  };
  std::ostringstream out;
  out << "j\\i";
  for (int i = 0; i < n; ++i) out << ',' << name(i);
  out << '\n';
  char buf[64];
  for (int j = 0; j < n; ++j) {
    out << name(j);
    for (int i = 0; i < n; ++i) {
      out << ',';
      if (i != j) {
        std::snprintf(buf, sizeof buf, "%.6f", m(i, j));
        out << buf;
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

RegretMatrix parse_matrix_csv(std::string_view text, std::vector<std::string>* names) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(split_csv_line(line));
  }
  if (rows.size() < 2) fail(ErrorKind::kMalformedInput, "matrix csv: need header and rows");
  const std::size_t n = rows.size() - 1;
  if (rows[0].size() != n + 1) fail(ErrorKind::kMalformedInput, "matrix csv: header width");
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& r = rows[j + 1];
    if (r.size() != n + 1) {
      fail(ErrorKind::kMalformedInput, "matrix csv: row " + std::to_string(j + 1) + " width");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      try {
        std::size_t used = 0;
        table[j][i] = std::stod(r[i + 1], &used);
        if (used != r[i + 1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(ErrorKind::kMalformedInput, "matrix csv: bad number in row " +
                                             std::to_string(j + 1) + ", column " +
                                             std::to_string(i + 1));
      }
    }
  }
  if (names) names->assign(rows[0].begin() + 1, rows[0].end());
  return RegretMatrix::from_row_j_col_i(table);
}

}  // namespace budgeted
