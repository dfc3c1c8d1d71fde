#include "budgeted/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "budgeted/problem.hpp"

#ifndef BUDGETED_DATA_DIR
#define BUDGETED_DATA_DIR "data/examples"
#endif

namespace budgeted {
namespace {

using nlohmann::json;

ExtendedValue expected_value(const json& v) {
  if (v.is_string() && v.get<std::string>() == "-inf") return ExtendedValue::neg_infinity();
  return ExtendedValue(v.get<double>());
}

bool close(ExtendedValue a, ExtendedValue b, double tol) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return a.is_neg_infinity() && b.is_neg_infinity();
  }
  return std::fabs(a.value() - b.value()) <= tol;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

IndexSet by_names(const json& names, const std::vector<std::string>& all) {
  IndexSet s;
  for (const auto& n : names) {
    auto it = std::find(all.begin(), all.end(), n.get<std::string>());
    if (it == all.end()) fail(ErrorKind::kMalformedInput, "expected: unknown act " + n.dump());
    s.push_back(static_cast<int>(it - all.begin()));
  }
  return normalize(std::move(s));
}

Criterion criterion_from(const std::string& name) {
  for (Criterion c : {Criterion::kMinimax, Criterion::kMaximin, Criterion::kGreedyMinimax,
                      Criterion::kGreedyMaximin, Criterion::kOracleMinimax,
                      Criterion::kOracleMaximin}) {
    if (criterion_name(c) == name) return c;
  }
  fail(ErrorKind::kMalformedInput, "expected: unknown criterion " + name);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kMalformedInput, "cannot open " + path.string());
  return json::parse(in);
}

class Checker {
 public:
  Checker(std::string instance, GoldenReport& report)
      : instance_(std::move(instance)), report_(report) {}

  void add(std::string item, bool pass, std::string detail = {}) {
    report_.checks.push_back({instance_, std::move(item), pass, std::move(detail)});
  }

 private:
  std::string instance_;
  GoldenReport& report_;
};

void check_instance(const std::filesystem::path& dir, const std::string& name,
                    GoldenReport& report) {
  Checker check(name, report);
  const Problem problem = load_problem(dir / (name + ".json"));
  const json expected = read_json(dir / (name + ".expected.json"));
  const RegretMatrix m = problem.regret();
  const auto& names = problem.names;

  if (expected.contains("matrix")) {
    const double tol = expected["matrix"]["tolerance"].get<double>();
    const auto& rows = expected["matrix"]["rows"];
    double worst = 0.0;
    bool shape = static_cast<int>(rows.size()) == m.size();
    for (int j = 0; shape && j < m.size(); ++j) {
      for (int i = 0; i < m.size(); ++i) {
        if (i == j) continue;
        worst = std::max(worst, std::fabs(m(i, j) - rows[j][i].get<double>()));
      }
    }
    check.add("regret matrix", shape && worst <= tol,
              "max deviation " + fmt(worst) + " (tol " + fmt(tol) + ")");
  }

  if (expected.contains("vertices") && problem.credal) {
    const double tol = expected["vertices"]["tolerance"].get<double>();
    const auto& rows = expected["vertices"]["rows"];
    const std::vector<Pmf> got = vertices_of(*problem.credal);
    bool shape = got.size() == rows.size();
    double worst = 0.0;
    for (std::size_t v = 0; shape && v < got.size(); ++v) {
      shape = rows[v].size() == got[v].size();
      for (std::size_t s = 0; shape && s < got[v].size(); ++s) {
        worst = std::max(worst, std::fabs(got[v][s] - rows[v][s].get<double>()));
      }
    }
    check.add("extreme points", shape && worst <= tol,
              std::to_string(got.size()) + " vertices, max deviation " + fmt(worst));
  }

  if (expected.contains("maximal")) {
    const IndexSet want = by_names(expected["maximal"], names);
    const IndexSet got = maximality(m);
    check.add("maximality", got == want, format_set(got, names));
  }

  const double vtol = expected.value("value_tolerance", 1e-9);
  for (const auto& s : expected.value("solutions", json::array())) {
    const Criterion c = criterion_from(s["criterion"].get<std::string>());
    const int k = s["k"].get<int>();
    const std::string item = std::string(criterion_name(c)) + " k=" + std::to_string(k);
    const ExtendedValue want = expected_value(s["value"]);
    const bool oracle = c == Criterion::kOracleMinimax || c == Criterion::kOracleMaximin;
    if (oracle) {
      const OracleReport r = oracle_enumerate(m, k, c);
      bool ok = close(r.best.value, want, vtol);
      std::string detail = "value " + r.best.value.to_string() + ", " +
                           std::to_string(r.best.tie_count) + " optima";
      if (s.contains("tie_count")) ok = ok && r.best.tie_count == s["tie_count"].get<std::size_t>();
      if (s.contains("optima")) {
        std::vector<IndexSet> want_sets;
        for (const auto& o : s["optima"]) want_sets.push_back(by_names(o, names));
        std::sort(want_sets.begin(), want_sets.end());
        ok = ok && want_sets == r.optimal_subsets;
      }
      check.add(item, ok, detail);
      continue;
    }
    const BudgetSolution sol = solve(m, k, c);
    bool ok = close(sol.value, want, vtol);
    if (s.contains("subset")) ok = ok && sol.subset == by_names(s["subset"], names);
    check.add(item, ok, format_set(sol.subset, names) + " value " + sol.value.to_string());
  }
}

}  // namespace

bool GoldenReport::all_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.pass; });
}

std::filesystem::path default_data_dir() { return BUDGETED_DATA_DIR; }

GoldenReport run_golden(const std::filesystem::path& dir,
                        const std::vector<std::string>& instances) {
  GoldenReport report;
  for (const auto& name : instances) {
    try {
      check_instance(dir, name, report);
    } catch (const std::exception& e) {
      report.checks.push_back({name, "load", false, e.what()});
    }
  }
  return report;
}

}  // namespace budgeted
