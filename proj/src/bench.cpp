#include "budgeted/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "budgeted/error.hpp"
#include "budgeted/parallel.hpp"

namespace budgeted {
namespace {

std::string lossless(ExtendedValue v) {
  if (v.is_neg_infinity()) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.value());
  return buf;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

ExtendedValue parse_value(const std::string& s) {
  if (s == "-inf") return ExtendedValue::neg_infinity();
  return ExtendedValue(std::stod(s));
}

// Space-separated, 1-based.
std::string encode_subset(const IndexSet& s) {
  std::string out;
  for (int i : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

IndexSet decode_subset(const std::string& text) {
  IndexSet s;
  std::istringstream in(text);
  int i = 0;
  while (in >> i) s.push_back(i - 1);
  return normalize(std::move(s));
}

std::vector<std::vector<std::string>> read_csv(std::string_view text, std::size_t width) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != width) fail(ErrorKind::kMalformedInput, "trial csv: bad row width");
    rows.push_back(std::move(cells));
  }
  return rows;
}

RuleOutcome score(const IndexSet& subset, ExtendedValue value, const IndexSet& maximal) {
  RuleOutcome o;
  o.subset = subset;
  o.value = value;
  o.dm_hits = static_cast<int>(intersection(subset, maximal).size());
  return o;
}

void compare_to_exact(RuleOutcome& greedy, const RuleOutcome& exact) {
  greedy.exact_hits = static_cast<int>(intersection(greedy.subset, exact.subset).size());
  greedy.exact_equal = greedy.subset == exact.subset;
}

double pct(int hits, int total) { return total == 0 ? 0.0 : 100.0 * hits / total; }

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kExactMinimax:
      return "S*";
    case Rule::kGreedyMinimax:
      return "Sg*";
    case Rule::kExactMaximin:
      return "S+";
    case Rule::kGreedyMaximin:
      return "Sg+";
  }
  return "?";
}

double RuleOutcome::dm_overlap() const {
  return subset.empty() ? 0.0 : static_cast<double>(dm_hits) / static_cast<double>(subset.size());
}

double RuleOutcome::exact_overlap() const {
  if (exact_hits < 0 || subset.empty()) return 0.0;
  return static_cast<double>(exact_hits) / static_cast<double>(subset.size());
}

bool Table2Record::values_equal() const {
  if (mml_value.is_neg_infinity() || mmL_value.is_neg_infinity()) {
    return mml_value.is_neg_infinity() && mmL_value.is_neg_infinity();
  }
  return std::fabs(mml_value.value() - mmL_value.value()) <= 1e-9;
}

Table1Result run_table1(const Table1Options& options) {
  if (options.trials < 1) fail(ErrorKind::kMalformedInput, "trials must be >= 1");
  if (options.k_min < 1 || options.k_max < options.k_min) {
    fail(ErrorKind::kMalformedInput, "k range must satisfy 1 <= k_min <= k_max");
  }
  options.config.validate();
  const int n_k = options.k_max - options.k_min + 1;
  std::vector<Table1Record> records(static_cast<std::size_t>(options.trials * n_k));

  parallel_for(static_cast<std::size_t>(options.trials), options.threads, [&](std::size_t t) {
    GenConfig cfg = options.config;
    cfg.seed = derive_seed(options.seed, t);
    const GeneratedInstance inst = generate_instance(cfg);
    for (int k = options.k_min; k <= options.k_max; ++k) {
      Table1Record& rec = records[t * static_cast<std::size_t>(n_k) +
                                  static_cast<std::size_t>(k - options.k_min)];
      rec.trial = static_cast<int>(t);
      rec.seed = cfg.seed;
      rec.k = k;
      const BudgetSolution star = solve_minimax(inst.matrix, k);
      const BudgetSolution plus = solve_maximin(inst.matrix, k);
      const BudgetSolution g_star = solve_greedy(inst.matrix, k, Criterion::kMinimax);
      const BudgetSolution g_plus = solve_greedy(inst.matrix, k, Criterion::kMaximin);
      rec.rules[0] = score(star.subset, star.value, inst.maximal);
      rec.rules[1] = score(g_star.subset, g_star.value, inst.maximal);
      rec.rules[2] = score(plus.subset, plus.value, inst.maximal);
      rec.rules[3] = score(g_plus.subset, g_plus.value, inst.maximal);
      compare_to_exact(rec.rules[1], rec.rules[0]);
      compare_to_exact(rec.rules[3], rec.rules[2]);
      rec.mml_value = star.value;
      rec.mmL_value = plus.value;
    }
  });
  Table1Result result;
  result.rows = aggregate_table1(records);
  result.records = std::move(records);
  return result;
}

std::vector<Table1Row> aggregate_table1(const std::vector<Table1Record>& records) {
  struct Acc {
    int trials = 0, weak = 0, strong = 0, equal = 0;
    double overlap = 0.0, exact_overlap = 0.0;
  };
  std::map<std::pair<int, int>, Acc> acc;  // (rule, k)
  for (const auto& rec : records) {
    for (std::size_t r = 0; r < kAllRules.size(); ++r) {
      Acc& a = acc[{static_cast<int>(r), rec.k}];
      const RuleOutcome& o = rec.rules[r];
      ++a.trials;
      a.weak += o.weak();
      a.strong += o.strong();
      a.equal += o.exact_equal;
      a.overlap += o.dm_overlap();
      a.exact_overlap += o.exact_overlap();
    }
  }
  std::vector<Table1Row> rows;
  for (const auto& [key, a] : acc) {
    Table1Row row;
    row.rule = kAllRules[static_cast<std::size_t>(key.first)];
    row.k = key.second;
    row.trials = a.trials;
    row.weak_pct = pct(a.weak, a.trials);
    row.strong_pct = pct(a.strong, a.trials);
    row.dm_overlap_pct = 100.0 * a.overlap / a.trials;
    row.exact_equal_pct = pct(a.equal, a.trials);
    row.exact_overlap_pct = 100.0 * a.exact_overlap / a.trials;
    rows.push_back(row);
  }
  return rows;
}

std::string table1_trials_csv(const std::vector<Table1Record>& records) {
  std::ostringstream out;
  out << "trial,seed,k,rule,subset,value,weak,strong,dm_hits,exact_equal,exact_hits,"
         "mml_value,mmL_value\n";
  for (const auto& rec : records) {
    for (std::size_t r = 0; r < kAllRules.size(); ++r) {
      const RuleOutcome& o = rec.rules[r];
      out << rec.trial << ',' << rec.seed << ',' << rec.k << ',' << rule_name(kAllRules[r]) << ','
          << encode_subset(o.subset) << ',' << lossless(o.value) << ',' << o.weak() << ','
          << o.strong() << ',' << o.dm_hits << ',';
      if (o.exact_hits >= 0) out << o.exact_equal << ',' << o.exact_hits;
      else out << ',';
      out << ',' << lossless(rec.mml_value) << ',' << lossless(rec.mmL_value) << '\n';
    }
  }
  return out.str();
}

std::vector<Table1Record> parse_table1_trials_csv(std::string_view text) {
  std::vector<Table1Record> records;
  std::map<std::pair<int, int>, std::size_t> where;
  for (const auto& c : read_csv(text, 13)) {
    const int trial = std::stoi(c[0]);
    const int k = std::stoi(c[2]);
    auto [it, fresh] = where.try_emplace({trial, k}, records.size());
    if (fresh) {
      Table1Record rec;
      rec.trial = trial;
      rec.seed = std::stoull(c[1]);
      rec.k = k;
      rec.mml_value = parse_value(c[11]);
      rec.mmL_value = parse_value(c[12]);
      records.push_back(rec);
    }
    std::size_t r = 0;
    while (r < kAllRules.size() && rule_name(kAllRules[r]) != c[3]) ++r;
    if (r == kAllRules.size()) fail(ErrorKind::kMalformedInput, "trial csv: unknown rule " + c[3]);
    RuleOutcome& o = records[it->second].rules[r];
    o.subset = decode_subset(c[4]);
    o.value = parse_value(c[5]);
    o.dm_hits = std::stoi(c[8]);
    if (!c[10].empty()) {
      o.exact_equal = c[9] == "1";
      o.exact_hits = std::stoi(c[10]);
    }
  }
  return records;
}

std::string table1_aggregate_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "rule,k,trials,weak_pct,strong_pct,dm_overlap_pct,exact_equal_pct,exact_overlap_pct\n";
  for (const auto& r : rows) {
    const bool greedy = r.rule == Rule::kGreedyMinimax || r.rule == Rule::kGreedyMaximin;
    out << rule_name(r.rule) << ',' << r.k << ',' << r.trials << ',' << fixed6(r.weak_pct) << ','
        << fixed6(r.strong_pct) << ',' << fixed6(r.dm_overlap_pct) << ',';
    if (greedy) out << fixed6(r.exact_equal_pct) << ',' << fixed6(r.exact_overlap_pct);
    else out << ',';
    out << '\n';
  }
  return out.str();
}

Table2Result run_table2(const Table2Options& options) {
  if (options.trials < 1) fail(ErrorKind::kMalformedInput, "trials must be >= 1");
  options.config.validate();
  for (int dm : options.dm_sizes) {
    if (dm < 1 || dm > options.config.n_acts) {
      fail(ErrorKind::kMalformedInput, "dm size " + std::to_string(dm) + " outside [1, n_acts]");
    }
  }
  for (int off : options.offsets) {
    if (off < 0) fail(ErrorKind::kMalformedInput, "offsets must be >= 0");
  }
  const std::size_t per_trial = options.offsets.size();
  const std::size_t n_jobs = options.dm_sizes.size() * static_cast<std::size_t>(options.trials);
  std::vector<Table2Record> records(n_jobs * per_trial);

  parallel_for(n_jobs, options.threads, [&](std::size_t job) {
    const std::size_t d = job / static_cast<std::size_t>(options.trials);
    const std::size_t t = job % static_cast<std::size_t>(options.trials);
    const int dm = options.dm_sizes[d];
    GenConfig cfg = options.config;
    cfg.target_dm = dm;
    cfg.seed = derive_seed(derive_seed(options.seed, static_cast<std::uint64_t>(dm)), t);
    const GeneratedInstance inst = generate_instance(cfg);
    for (std::size_t o = 0; o < per_trial; ++o) {
      Table2Record& rec = records[job * per_trial + o];
      rec.dm = dm;
      rec.trial = static_cast<int>(t);
      rec.seed = cfg.seed;
      rec.k = dm + options.offsets[o];
      rec.mml_value = solve_minimax(inst.matrix, rec.k).value;
      rec.mmL_value = solve_maximin(inst.matrix, rec.k).value;
    }
  });
  Table2Result result;
  result.rows = aggregate_table2(records);
  result.records = std::move(records);
  return result;
}

std::vector<Table2Row> aggregate_table2(const std::vector<Table2Record>& records) {
  struct Acc {
    int trials = 0, mml_neg = 0, mmL_neg = 0, equal = 0;
  };
  std::vector<std::pair<int, int>> order;
  std::map<std::pair<int, int>, Acc> acc;
  for (const auto& rec : records) {
    auto [it, fresh] = acc.try_emplace({rec.dm, rec.k});
    if (fresh) order.emplace_back(rec.dm, rec.k);
    Acc& a = it->second;
    ++a.trials;
    a.mml_neg += rec.mml_negative();
    a.mmL_neg += rec.mmL_negative();
    a.equal += rec.values_equal();
  }
  std::vector<Table2Row> rows;
  for (const auto& key : order) {
    const Acc& a = acc.at(key);
    rows.push_back({key.first, key.second, a.trials, pct(a.mml_neg, a.trials),
                    pct(a.mmL_neg, a.trials), pct(a.equal, a.trials)});
  }
  std::sort(rows.begin(), rows.end(), [](const Table2Row& x, const Table2Row& y) {
    return std::pair(x.dm, x.k) < std::pair(y.dm, y.k);
  });
  return rows;
}

std::string table2_trials_csv(const std::vector<Table2Record>& records) {
  std::ostringstream out;
  out << "dm,trial,seed,k,mml_value,mmL_value,mml_negative,mmL_negative,equal\n";
  for (const auto& r : records) {
    out << r.dm << ',' << r.trial << ',' << r.seed << ',' << r.k << ',' << lossless(r.mml_value)
        << ',' << lossless(r.mmL_value) << ',' << r.mml_negative() << ',' << r.mmL_negative()
        << ',' << r.values_equal() << '\n';
  }
  return out.str();
}

std::vector<Table2Record> parse_table2_trials_csv(std::string_view text) {
  std::vector<Table2Record> records;
  for (const auto& c : read_csv(text, 9)) {
    Table2Record r;
    r.dm = std::stoi(c[0]);
    r.trial = std::stoi(c[1]);
    r.seed = std::stoull(c[2]);
    r.k = std::stoi(c[3]);
    r.mml_value = parse_value(c[4]);
    r.mmL_value = parse_value(c[5]);
    records.push_back(r);
  }
  return records;
}

std::string table2_aggregate_csv(const std::vector<Table2Row>& rows) {
  std::ostringstream out;
  out << "dm,k,trials,mml_negative_pct,mmL_negative_pct,equal_pct\n";
  for (const auto& r : rows) {
    out << r.dm << ',' << r.k << ',' << r.trials << ',' << fixed6(r.mml_negative_pct) << ','
        << fixed6(r.mmL_negative_pct) << ',' << fixed6(r.equal_pct) << '\n';
  }
  return out.str();
}

}  // namespace budgeted
