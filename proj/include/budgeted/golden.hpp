#pragma once

// Bundled worked instances and their expected outputs.

#include <filesystem>
#include <string>
#include <vector>

namespace budgeted {

inline const std::vector<std::string> kGoldenInstances = {"example1", "example3", "financial",
                                                          "multilabel"};

struct GoldenCheck {
  std::string instance;
  std::string item;
  bool pass = false;
  std::string detail;
};

struct GoldenReport {
  std::vector<GoldenCheck> checks;
  bool all_pass() const;
};

// The data/examples directory of the source tree.
std::filesystem::path default_data_dir();

// Loads <dir>/<name>.json and compares against <dir>/<name>.expected.json.
// A missing or unreadable file is reported as a failed check.
GoldenReport run_golden(const std::filesystem::path& dir,
                        const std::vector<std::string>& instances = kGoldenInstances);

}  // namespace budgeted
