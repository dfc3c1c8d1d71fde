#pragma once

// Problem files: acts + credal set as JSON, or a precomputed regret table
// (JSON "regret_matrix" or the CSV written by to_csv).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "budgeted/credal.hpp"
#include "budgeted/regret.hpp"

namespace budgeted {

struct Problem {
  std::vector<std::string> names;  // act names, in file order
  std::optional<StateSpace> states;
  std::vector<Act> acts;           // empty for the precomputed form
  std::optional<CredalSet> credal;  // empty for the precomputed form
  std::optional<RegretMatrix> precomputed;

  bool has_model() const { return credal.has_value(); }

  // The stored table, or one computed from acts and credal set.
  RegretMatrix regret(int threads = 0) const;
};

// Throws Error(kMalformedInput) naming the offending field, or
// Error(kInfeasible) for an empty constraint-form credal set.
Problem parse_problem_json(std::string_view text);

// `.csv` files are read as precomputed matrices, anything else as JSON.
Problem load_problem(const std::filesystem::path& path);

std::string problem_to_json(const StateSpace& states, const std::vector<Act>& acts,
                            const CredalSet& credal);

}  // namespace budgeted
