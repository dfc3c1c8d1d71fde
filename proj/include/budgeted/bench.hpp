#pragma once

// Experiment protocols comparing exact and greedy budgeted subsets against
// the maximality set, with per-trial and aggregate CSV output.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "budgeted/budget.hpp"
#include "budgeted/gen.hpp"

namespace budgeted {

enum class Rule { kExactMinimax, kGreedyMinimax, kExactMaximin, kGreedyMaximin };
inline constexpr std::array<Rule, 4> kAllRules = {Rule::kExactMinimax, Rule::kGreedyMinimax,
                                                   Rule::kExactMaximin, Rule::kGreedyMaximin};
std::string_view rule_name(Rule r);  // "S*", "Sg*", "S+", "Sg+"

struct RuleOutcome {
  IndexSet subset;
  ExtendedValue value;
  int dm_hits = 0;       // |subset ∩ D_M|
  int exact_hits = -1;   // greedy rules: |subset ∩ exact subset|; -1 otherwise
  bool exact_equal = false;

  bool weak() const { return dm_hits > 0; }
  bool strong() const { return dm_hits == static_cast<int>(subset.size()); }
  double dm_overlap() const;
  double exact_overlap() const;
};

struct Table1Record {
  int trial = 0;
  std::uint64_t seed = 0;
  int k = 0;
  std::array<RuleOutcome, 4> rules;  // indexed like kAllRules
  ExtendedValue mml_value;           // optimum of the minimax criterion
  ExtendedValue mmL_value;           // optimum of the maximin criterion
};

struct Table1Row {
  Rule rule = Rule::kExactMinimax;
  int k = 0;
  int trials = 0;
  double weak_pct = 0.0;
  double strong_pct = 0.0;
  double dm_overlap_pct = 0.0;
  double exact_equal_pct = 0.0;    // greedy rules only
  double exact_overlap_pct = 0.0;  // greedy rules only
};

struct Table1Options {
  int trials = 100;
  GenConfig config = [] {
    GenConfig c;
    c.target_dm = 6;
    return c;
  }();
  int k_min = 2;
  int k_max = 6;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct Table1Result {
  std::vector<Table1Record> records;
  std::vector<Table1Row> rows;
};

Table1Result run_table1(const Table1Options& options);
std::vector<Table1Row> aggregate_table1(const std::vector<Table1Record>& records);
std::string table1_trials_csv(const std::vector<Table1Record>& records);
std::vector<Table1Record> parse_table1_trials_csv(std::string_view text);
std::string table1_aggregate_csv(const std::vector<Table1Row>& rows);

struct Table2Record {
  int dm = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  int k = 0;
  ExtendedValue mml_value;
  ExtendedValue mmL_value;

  bool mml_negative() const { return mml_value.is_negative(); }
  bool mmL_negative() const { return mmL_value.is_negative(); }
  bool values_equal() const;  // within 1e-9, -inf equal to itself
};

struct Table2Row {
  int dm = 0;
  int k = 0;
  int trials = 0;
  double mml_negative_pct = 0.0;
  double mmL_negative_pct = 0.0;
  double equal_pct = 0.0;
};

struct Table2Options {
  int trials = 50;
  GenConfig config;  // target_dm is overridden per size
  std::vector<int> dm_sizes = {2, 5, 10};
  std::vector<int> offsets = {0, 1, 2, 3};
  std::uint64_t seed = 1;
  int threads = 0;
};

struct Table2Result {
  std::vector<Table2Record> records;
  std::vector<Table2Row> rows;
};

Table2Result run_table2(const Table2Options& options);
std::vector<Table2Row> aggregate_table2(const std::vector<Table2Record>& records);
std::string table2_trials_csv(const std::vector<Table2Record>& records);
std::vector<Table2Record> parse_table2_trials_csv(std::string_view text);
std::string table2_aggregate_csv(const std::vector<Table2Row>& rows);

}  // namespace budgeted
