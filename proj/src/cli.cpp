#include "budgeted/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "budgeted/bench.hpp"
#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "budgeted/golden.hpp"
#include "budgeted/parallel.hpp"
#include "budgeted/problem.hpp"

namespace budgeted {
namespace {

using nlohmann::json;

enum class Format { kTable, kCsv, kJson };

struct Config {
  std::string command;
  std::string problem;
  int k = 0;
  std::string criterion = "minimax";
  std::string tie_break = "lex";
  std::uint64_t seed = 1;
  std::optional<double> alpha;
  Format format = Format::kTable;
  std::string protocol = "table1";
  std::optional<int> trials;
  std::string out_dir;
  std::string data_dir;
  int threads = 0;
};

// Table mode: at most two decimals, at least one.
std::string short_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  if (s.back() == '0') s.pop_back();
  return s;
}

std::string short_value(ExtendedValue v) {
  return v.is_neg_infinity() ? "-inf" : short_number(v.value());
}

std::string csv_value(ExtendedValue v) { return v.to_string(6); }

json json_value(ExtendedValue v) {
  if (v.is_neg_infinity()) return "-inf";
  return json::parse(v.to_string(6));
}

json json_names(const IndexSet& s, const std::vector<std::string>& names) {
  json a = json::array();
  for (int i : s) a.push_back(names[static_cast<std::size_t>(i)]);
  return a;
}

std::string csv_names(const IndexSet& s, const std::vector<std::string>& names) {
  std::string out;
  for (int i : s) {
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(i)];
  }
  return out;
}

Criterion parse_criterion(const std::string& name) {
  static const std::map<std::string, Criterion> table = {
      {"minimax", Criterion::kMinimax},
      {"maximin", Criterion::kMaximin},
      {"greedy-minimax", Criterion::kGreedyMinimax},
      {"greedy-maximin", Criterion::kGreedyMaximin},
      {"oracle-minimax", Criterion::kOracleMinimax},
      {"oracle-maximin", Criterion::kOracleMaximin},
  };
  auto it = table.find(name);
  if (it == table.end()) fail(ErrorKind::kMalformedInput, "--criterion: unknown value '" + name + "'");
  return it->second;
}

TieBreak parse_tie_break(const Config& c) {
  if (c.tie_break == "lex") return TieBreak::lex();
  if (c.tie_break == "seeded") return TieBreak::seeded(c.seed);
  fail(ErrorKind::kMalformedInput, "--tie-break: expected lex or seeded");
}

struct Loaded {
  Problem problem;
  RegretMatrix matrix;
};

Loaded load(const Config& c) {
  if (c.problem.empty()) fail(ErrorKind::kMalformedInput, "--problem: required");
  Loaded l{load_problem(c.problem), {}};
  l.matrix = l.problem.regret(c.threads);
  return l;
}

void require_k(const Config& c) {
  if (c.k < 1) fail(ErrorKind::kMalformedInput, "--k: must be >= 1");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::kMalformedInput, "--out-dir: cannot write " + path.string());
  f << content;
}

int cmd_matrix(const Config& c, std::ostream& out) {
  const Loaded l = load(c);
  const auto& names = l.problem.names;
  const int n = l.matrix.size();
  switch (c.format) {
    case Format::kCsv:
      out << to_csv(l.matrix, names);
      break;
    case Format::kJson: {
      json rows = json::array();
      for (int j = 0; j < n; ++j) {
        json row = json::array();
        for (int i = 0; i < n; ++i) {
          row.push_back(i == j ? json(nullptr) : json_value(ExtendedValue(l.matrix(i, j))));
        }
        rows.push_back(row);
      }
      out << json{{"acts", names}, {"regret_matrix", rows}}.dump(2) << "\n";
      break;
    }
    case Format::kTable: {
      std::size_t w = 4;
      for (const auto& nm : names) w = std::max(w, nm.size());
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) w = std::max(w, short_number(l.matrix(i, j)).size());
      }
      auto cell = [&](const std::string& s) { out << std::string(w + 2 - s.size(), ' ') << s; };
      cell("j\\i");
      for (const auto& nm : names) cell(nm);
      out << "\n";
      for (int j = 0; j < n; ++j) {
        cell(names[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i) cell(i == j ? "-" : short_number(l.matrix(i, j)));
        out << "\n";
      }
      break;
    }
  }
  return 0;
}

int cmd_maximality(const Config& c, std::ostream& out) {
  const Loaded l = load(c);
  const IndexSet d = maximality(l.matrix);
  switch (c.format) {
    case Format::kTable:
      out << format_set(d, l.problem.names) << "\n";
      break;
    case Format::kCsv:
      out << "act\n";
      for (int i : d) out << l.problem.names[static_cast<std::size_t>(i)] << "\n";
      break;
    case Format::kJson:
      out << json{{"maximal", json_names(d, l.problem.names)}}.dump(2) << "\n";
      break;
  }
  return 0;
}

void print_solution(const Config& c, const BudgetSolution& s, const std::vector<std::string>& names,
                    std::ostream& out) {
  switch (c.format) {
    case Format::kTable:
      out << format_set(s.subset, names) << "  value " << short_value(s.value) << "\n";
      break;
    case Format::kCsv:
      out << "criterion,k,subset,value,tie_count\n"
          << criterion_name(s.criterion) << ',' << c.k << ',' << csv_names(s.subset, names) << ','
          << csv_value(s.value) << ',' << s.tie_count << "\n";
      break;
    case Format::kJson:
      out << json{{"criterion", criterion_name(s.criterion)},
                  {"k", c.k},
                  {"subset", json_names(s.subset, names)},
                  {"value", json_value(s.value)},
                  {"tie_count", s.tie_count}}
                 .dump(2)
          << "\n";
      break;
  }
}

int cmd_solve(const Config& c, std::ostream& out) {
  require_k(c);
  const Criterion crit = parse_criterion(c.criterion);
  const TieBreak tie = parse_tie_break(c);
  const Loaded l = load(c);
  print_solution(c, solve(l.matrix, c.k, crit, tie), l.problem.names, out);
  return 0;
}

int cmd_decide(const Config& c, std::ostream& out) {
  require_k(c);
  const Criterion crit = parse_criterion(c.criterion);
  const TieBreak tie = parse_tie_break(c);
  const Loaded l = load(c);
  const BudgetSolution s = solve(l.matrix, c.k, crit, tie);
  const bool via_dm = l.matrix.size() <= c.k || s.value.is_negative();
  const IndexSet chosen = via_dm ? maximality(l.matrix) : s.subset;
  const char* branch = via_dm ? "maximality" : "subset";
  const auto& names = l.problem.names;
  switch (c.format) {
    case Format::kTable:
      out << format_set(chosen, names) << "\n";
      break;
    case Format::kCsv:
      out << "criterion,k,decision,branch,value\n"
          << criterion_name(crit) << ',' << c.k << ',' << csv_names(chosen, names) << ','
          << branch << ',' << csv_value(s.value) << "\n";
      break;
    case Format::kJson:
      out << json{{"criterion", criterion_name(crit)},
                  {"k", c.k},
                  {"decision", json_names(chosen, names)},
                  {"branch", branch},
                  {"value", json_value(s.value)}}
                 .dump(2)
          << "\n";
      break;
  }
  return 0;
}

int cmd_oracle(const Config& c, std::ostream& out) {
  require_k(c);
  Criterion crit = parse_criterion(c.criterion);
  if (crit == Criterion::kMinimax) crit = Criterion::kOracleMinimax;
  if (crit == Criterion::kMaximin) crit = Criterion::kOracleMaximin;
  if (crit != Criterion::kOracleMinimax && crit != Criterion::kOracleMaximin) {
    fail(ErrorKind::kMalformedInput, "--criterion: oracle takes minimax or maximin");
  }
  const Loaded l = load(c);
  const OracleReport r = oracle_enumerate(l.matrix, c.k, crit);
  const auto& names = l.problem.names;
  if (c.format == Format::kJson) {
    json optima = json::array();
    for (const auto& s : r.optimal_subsets) optima.push_back(json_names(s, names));
    out << json{{"criterion", criterion_name(crit)},
                {"k", c.k},
                {"subset", json_names(r.best.subset, names)},
                {"value", json_value(r.best.value)},
                {"tie_count", r.best.tie_count},
                {"optima", optima}}
               .dump(2)
        << "\n";
    return 0;
  }
  print_solution(c, r.best, names, out);
  if (c.format == Format::kTable) {
    for (const auto& s : r.optimal_subsets) out << "  optimal " << format_set(s, names) << "\n";
  }
  return 0;
}

int cmd_graph(const Config& c, std::ostream& out) {
  if (!c.alpha) fail(ErrorKind::kMalformedInput, "--alpha: required for graph");
  const Loaded l = load(c);
  out << domination_dot(l.matrix, *c.alpha, l.problem.names);
  return 0;
}

int cmd_experiment(const Config& c, std::ostream& out) {
  const std::filesystem::path dir = c.out_dir.empty() ? "." : c.out_dir;
  if (!c.out_dir.empty()) std::filesystem::create_directories(dir);
  if (c.protocol == "table1") {
    Table1Options o;
    if (c.trials) o.trials = *c.trials;
    o.seed = c.seed;
    o.threads = c.threads;
    const Table1Result r = run_table1(o);
    const std::string agg = table1_aggregate_csv(r.rows);
    write_file(dir / "table1_trials.csv", table1_trials_csv(r.records));
    write_file(dir / "table1.csv", agg);
    out << agg;
    return 0;
  }
  if (c.protocol == "table2") {
    Table2Options o;
    if (c.trials) o.trials = *c.trials;
    o.seed = c.seed;
    o.threads = c.threads;
    const Table2Result r = run_table2(o);
    const std::string agg = table2_aggregate_csv(r.rows);
    write_file(dir / "table2_trials.csv", table2_trials_csv(r.records));
    write_file(dir / "table2.csv", agg);
    out << agg;
    return 0;
  }
  fail(ErrorKind::kMalformedInput, "--protocol: expected table1 or table2");
}

int cmd_examples(const Config& c, std::ostream& out) {
  const std::filesystem::path dir = c.data_dir.empty() ? default_data_dir() : std::filesystem::path(c.data_dir);
  const GoldenReport r = run_golden(dir);
  for (const auto& ch : r.checks) {
    out << (ch.pass ? "PASS " : "FAIL ") << ch.instance << ": " << ch.item;
    if (!ch.detail.empty()) out << " -- " << ch.detail;
    out << "\n";
  }
  return r.all_pass() ? 0 : 4;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kMalformedInput:
      return 1;
    case ErrorKind::kInfeasible:
      return 2;
    case ErrorKind::kGuardExceeded:
      return 3;
    case ErrorKind::kInternal:
      break;
  }
  return 5;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Budgeted decisions under imprecise probabilities", "budgeted"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats = {
      {"table", Format::kTable}, {"csv", Format::kCsv}, {"json", Format::kJson}};

  auto with_problem = [&](CLI::App* sub) {
    sub->add_option("--problem", c.problem, "Problem file (.json, or .csv regret table)")
        ->required();
    sub->add_option("--format", c.format, "table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--threads", c.threads, "Worker threads (0 = BUDGETED_THREADS or all cores)");
  };
  auto with_rule = [&](CLI::App* sub) {
    with_problem(sub);
    sub->add_option("--k", c.k, "Budget")->required();
    sub->add_option("--criterion", c.criterion,
                    "minimax, maximin, greedy-minimax, greedy-maximin, oracle-minimax, "
                    "oracle-maximin");
    sub->add_option("--tie-break", c.tie_break, "lex or seeded");
    sub->add_option("--seed", c.seed, "Seed for --tie-break seeded");
  };

  with_problem(app.add_subcommand("matrix", "Print the regret table (row j, column i)"));
  with_problem(app.add_subcommand("maximality", "Print the maximal acts"));
  with_rule(app.add_subcommand("solve", "Optimal or greedy k-subset"));
  with_rule(app.add_subcommand("decide", "Budgeted decision rule"));
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force optimum with all ties");
  with_rule(oracle);
  CLI::App* graph = app.add_subcommand("graph", "Domination graph at --alpha as DOT");
  with_problem(graph);
  graph->add_option("--alpha", c.alpha, "Regret level")->required();

  CLI::App* exp = app.add_subcommand("experiment", "Run a random-instance protocol");
  exp->add_option("--protocol", c.protocol, "table1 or table2");
  exp->add_option("--trials", c.trials, "Trials (default 100 for table1, 50 for table2)");
  exp->add_option("--seed", c.seed, "Master seed");
  exp->add_option("--out-dir", c.out_dir, "Directory for the CSV files");
  exp->add_option("--threads", c.threads, "Worker threads");

  CLI::App* ex = app.add_subcommand("examples", "Check the bundled worked examples");
  ex->add_option("--data-dir", c.data_dir, "Directory holding the example files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (c.threads < 0) {
    err << "error: --threads: must be >= 0\n";
    return 1;
  }
  try {
    if (c.command == "matrix") return cmd_matrix(c, out);
    if (c.command == "maximality") return cmd_maximality(c, out);
    if (c.command == "solve") return cmd_solve(c, out);
    if (c.command == "decide") return cmd_decide(c, out);
    if (c.command == "oracle") return cmd_oracle(c, out);
    if (c.command == "graph") return cmd_graph(c, out);
    if (c.command == "experiment") return cmd_experiment(c, out);
    if (c.command == "examples") return cmd_examples(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  }
  return 5;
}

}  // namespace budgeted
