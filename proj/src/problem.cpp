#include "budgeted/problem.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "budgeted/error.hpp"

namespace budgeted {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  fail(ErrorKind::kMalformedInput, field + ": " + why);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) bad(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(field, "not finite");
  return x;
}

std::vector<double> numbers(const json& v, const std::string& field) {
  if (!v.is_array()) bad(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string text(const json& v, const std::string& field) {
  if (!v.is_string()) bad(field, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> act_names(const json& acts) {
  if (!acts.is_array() || acts.empty()) bad("acts", "expected a nonempty array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    const std::string where = "acts[" + std::to_string(i) + "]";
    if (acts[i].is_string()) names.push_back(acts[i].get<std::string>());
    else if (acts[i].is_object()) names.push_back(text(require(acts[i], "name", where), where + ".name"));
    else bad(where, "expected an object or a name");
  }
  return names;
}

// Sum p = 1 and p >= 0 are implicit; restating them is an error rather than
// a silently redundant row.
bool restates_simplex(const LinearConstraint& c) {
  const double eps = 1e-12;
  const auto& a = c.coeffs;
  if (c.relation == Relation::kEqual && a.front() != 0.0) {
    const double s = a.front();
    bool all = true;
    for (double x : a) all = all && std::fabs(x - s) <= eps;
    if (all && std::fabs(c.rhs - s) <= eps) return true;
  }
  int nonzero = 0;
  double v = 0.0;
  for (double x : a) {
    if (x != 0.0) {
      ++nonzero;
      v = x;
    }
  }
  if (nonzero != 1 || std::fabs(c.rhs) > eps) return false;
  return (c.relation == Relation::kGreaterEqual && v > 0) ||
         (c.relation == Relation::kLessEqual && v < 0);
}

CredalSet parse_credal(const json& credal, std::size_t n_states) {
  if (!credal.is_object()) bad("credal", "expected an object");
  const int forms = static_cast<int>(credal.contains("vertices")) +
                    static_cast<int>(credal.contains("constraints")) +
                    static_cast<int>(credal.contains("label_intervals"));
  if (forms != 1) bad("credal", "give exactly one of vertices, constraints, label_intervals");

  if (credal.contains("vertices")) {
    const json& vs = credal["vertices"];
    if (!vs.is_array() || vs.empty()) bad("credal.vertices", "expected a nonempty array");
    std::vector<Pmf> vertices;
    for (std::size_t v = 0; v < vs.size(); ++v) {
      const std::string where = "credal.vertices[" + std::to_string(v) + "]";
      Pmf p = numbers(vs[v], where);
      if (p.size() != n_states) bad(where, "expected " + std::to_string(n_states) + " masses");
      vertices.push_back(std::move(p));
    }
    return CredalSet::from_vertices(std::move(vertices));
  }

  if (credal.contains("label_intervals")) {
    const json& ls = credal["label_intervals"];
    if (!ls.is_array() || ls.empty()) bad("credal.label_intervals", "expected a nonempty array");
    std::vector<LabelInterval> labels;
    for (std::size_t l = 0; l < ls.size(); ++l) {
      const std::string where = "credal.label_intervals[" + std::to_string(l) + "]";
      const std::vector<double> b = numbers(ls[l], where);
      if (b.size() != 2) bad(where, "expected [lower, upper]");
      labels.push_back({b[0], b[1]});
    }
    if (ls.size() >= 16 || (std::size_t{1} << ls.size()) != n_states) {
      bad("credal.label_intervals", "needs 2^labels states");
    }
    return product_of_intervals(labels);
  }

  const json& cs = credal["constraints"];
  if (!cs.is_array()) bad("credal.constraints", "expected an array");
  std::vector<LinearConstraint> constraints;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const std::string where = "credal.constraints[" + std::to_string(c) + "]";
    if (!cs[c].is_object()) bad(where, "expected an object");
    LinearConstraint lc;
    lc.coeffs = numbers(require(cs[c], "coeffs", where), where + ".coeffs");
    if (lc.coeffs.size() != n_states) {
      bad(where + ".coeffs", "expected " + std::to_string(n_states) + " coefficients");
    }
    const std::string rel = text(require(cs[c], "relation", where), where + ".relation");
    if (rel == "<=") lc.relation = Relation::kLessEqual;
    else if (rel == ">=") lc.relation = Relation::kGreaterEqual;
    else if (rel == "=") lc.relation = Relation::kEqual;
    else bad(where + ".relation", "expected \"<=\", \">=\" or \"=\"");
    lc.rhs = number(require(cs[c], "rhs", where), where + ".rhs");
    if (restates_simplex(lc)) bad(where, "restates the implicit simplex constraints");
    constraints.push_back(std::move(lc));
  }
  return CredalSet::from_constraints(n_states, std::move(constraints));
}

Problem parse_matrix_form(const json& doc) {
  Problem p;
  p.names = act_names(require(doc, "acts", ""));
  const std::size_t n = p.names.size();
  const json& rows = doc["regret_matrix"];
  if (!rows.is_array() || rows.size() != n) {
    bad("regret_matrix", "expected " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    const std::string where = "regret_matrix[" + std::to_string(j) + "]";
    if (!rows[j].is_array() || rows[j].size() != n) {
      bad(where, "expected " + std::to_string(n) + " cells");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      table[j][i] = number(rows[j][i], where + "[" + std::to_string(i) + "]");
    }
  }
  p.precomputed = RegretMatrix::from_row_j_col_i(table);
  return p;
}

}  // namespace

RegretMatrix Problem::regret(int threads) const {
  if (precomputed) return *precomputed;
  return regret_matrix(acts, *credal, threads);
}

Problem parse_problem_json(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kMalformedInput, std::string("problem: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("problem", "expected a JSON object");
  if (doc.contains("regret_matrix")) return parse_matrix_form(doc);

  const json& states = require(doc, "states", "");
  if (!states.is_array()) bad("states", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < states.size(); ++s) {
    labels.push_back(text(states[s], "states[" + std::to_string(s) + "]"));
  }

  Problem p;
  p.states.emplace(std::move(labels));
  const std::size_t d = p.states->size();
  const json& acts = require(doc, "acts", "");
  p.names = act_names(acts);
  for (std::size_t i = 0; i < acts.size(); ++i) {
    const std::string where = "acts[" + std::to_string(i) + "]";
    if (!acts[i].is_object()) bad(where, "expected an object with name and payoffs");
    Act a{p.names[i], numbers(require(acts[i], "payoffs", where), where + ".payoffs")};
    if (a.payoffs.size() != d) bad(where + ".payoffs", "expected " + std::to_string(d) + " values");
    p.acts.push_back(std::move(a));
  }
  validate_acts(p.acts, d);
  p.credal = parse_credal(require(doc, "credal", ""), d);
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kMalformedInput, "problem: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".csv") {
    Problem p;
    p.precomputed = parse_matrix_csv(buf.str(), &p.names);
    return p;
  }
  return parse_problem_json(buf.str());
}

std::string problem_to_json(const StateSpace& states, const std::vector<Act>& acts,
                            const CredalSet& credal) {
  json doc;
  doc["states"] = states.labels();
  doc["acts"] = json::array();
  for (const Act& a : acts) doc["acts"].push_back({{"name", a.name}, {"payoffs", a.payoffs}});
  if (credal.form() == CredalSet::Form::kVertices) {
    doc["credal"]["vertices"] = credal.vertices();
  } else {
    json cs = json::array();
    for (const auto& c : credal.constraints()) {
      const char* rel = c.relation == Relation::kLessEqual      ? "<="
                        : c.relation == Relation::kGreaterEqual ? ">="
                                                                : "=";
      cs.push_back({{"coeffs", c.coeffs}, {"relation", rel}, {"rhs", c.rhs}});
    }
    doc["credal"]["constraints"] = cs;
  }
  return doc.dump(2) + "\n";
}

}  // namespace budgeted
