#pragma once

// Random decision problems for the experiment harness.

#include <cstdint>
#include <optional>
#include <vector>

#include "budgeted/credal.hpp"
#include "budgeted/regret.hpp"
#include "budgeted/rng.hpp"

namespace budgeted {

inline constexpr int kGenMaxAttempts = 10000;

struct GenConfig {
  int n_acts = 20;
  int n_states = 5;
  int n_vertices = 20;
  std::optional<int> target_dm;  // required size of the maximality set
  double payoff_lo = 0.0;
  double payoff_hi = 100.0;
  bool integer_payoffs = true;  // draw integers in [lo, hi] instead of reals
  std::uint64_t seed = 1;

  // Throws Error(kMalformedInput) naming the offending field.
  void validate() const;
};

// `count` pmfs uniform on the simplex: p(w) = ln q(w) / sum ln q, q ~ U(0,1).
std::vector<Pmf> sample_simplex(int n_states, int count, Xoshiro256& rng);
std::vector<Pmf> sample_simplex(int n_states, int count, std::uint64_t seed);

struct GeneratedInstance {
  std::vector<Act> acts;
  CredalSet credal;
  RegretMatrix matrix;
  IndexSet maximal;
  int attempts = 0;
};

// Vertex-form credal set plus uniform payoffs. With target_dm set, whole
// instances are redrawn until the maximality set has exactly that size;
// Error(kGuardExceeded) after kGenMaxAttempts draws.
GeneratedInstance generate_instance(const GenConfig& config);

}  // namespace budgeted
