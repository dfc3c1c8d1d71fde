#include "budgeted/gen.hpp"

#include <cmath>

#include "budgeted/error.hpp"

namespace budgeted {

void GenConfig::validate() const {
  if (n_acts < 1) fail(ErrorKind::kMalformedInput, "n_acts must be >= 1");
  if (n_states < 1) fail(ErrorKind::kMalformedInput, "n_states must be >= 1");
  if (n_vertices < 1) fail(ErrorKind::kMalformedInput, "n_vertices must be >= 1");
  if (target_dm && (*target_dm < 1 || *target_dm > n_acts)) {
    fail(ErrorKind::kMalformedInput, "target_dm must lie in [1, n_acts]");
  }
  if (!(payoff_lo <= payoff_hi) || !std::isfinite(payoff_lo) || !std::isfinite(payoff_hi)) {
    fail(ErrorKind::kMalformedInput, "payoff range is empty");
  }
  if (integer_payoffs && std::ceil(payoff_lo) > std::floor(payoff_hi)) {
    fail(ErrorKind::kMalformedInput, "payoff range holds no integer");
  }
}

std::vector<Pmf> sample_simplex(int n_states, int count, Xoshiro256& rng) {
  if (n_states < 1 || count < 1) {
    fail(ErrorKind::kMalformedInput, "sample_simplex: need n_states >= 1 and count >= 1");
  }
  std::vector<Pmf> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    Pmf p(static_cast<std::size_t>(n_states));
    double total = 0.0;
    for (double& x : p) {
      x = std::log(rng.uniform_open());
      total += x;
    }
    for (double& x : p) x /= total;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pmf> sample_simplex(int n_states, int count, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return sample_simplex(n_states, count, rng);
}

GeneratedInstance generate_instance(const GenConfig& config) {
  config.validate();
  Xoshiro256 rng(config.seed);
  const auto lo = static_cast<std::int64_t>(std::ceil(config.payoff_lo));
  const auto hi = static_cast<std::int64_t>(std::floor(config.payoff_hi));

  for (int attempt = 1; attempt <= kGenMaxAttempts; ++attempt) {
    CredalSet credal =
        CredalSet::from_vertices(sample_simplex(config.n_states, config.n_vertices, rng));
    std::vector<Act> acts;
    for (int a = 0; a < config.n_acts; ++a) {
      Act act{"a" + std::to_string(a + 1), std::vector<double>(static_cast<std::size_t>(config.n_states))};
      for (double& x : act.payoffs) {
        x = config.integer_payoffs
                ? static_cast<double>(rng.uniform_int(lo, hi))
                : config.payoff_lo + (config.payoff_hi - config.payoff_lo) * rng.uniform_open();
      }
      acts.push_back(std::move(act));
    }
    RegretMatrix matrix = regret_matrix(acts, credal, 1);
    IndexSet maximal = maximality(matrix);
    if (!config.target_dm || static_cast<int>(maximal.size()) == *config.target_dm) {
      return {std::move(acts), std::move(credal), std::move(matrix), std::move(maximal), attempt};
    }
  }
  fail(ErrorKind::kGuardExceeded, "generate_instance: no instance with |D_M| = " +
                                      std::to_string(*config.target_dm) + " after " +
                                      std::to_string(kGenMaxAttempts) + " attempts");
}

}  // namespace budgeted
