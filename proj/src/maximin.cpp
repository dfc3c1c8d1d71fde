#include <algorithm>
#include <bit>
#include <functional>

#include "budgeted/budget.hpp"
#include "budgeted/error.hpp"
#include "relabel.hpp"

namespace budgeted {
namespace {

constexpr int kMaxCoverActs = 64;

std::uint64_t all_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Depth-first walk over k-combinations in lexicographic order. A node is cut
// when some uncovered element cannot be reached by any remaining candidate,
// or when the r best remaining candidates together cover too few.
class CoverSearch {
 public:
  CoverSearch(const CoverFamily& f, int k, int n) : k_(k), n_(n), full_(all_mask(n)) {
    closed_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      closed_[static_cast<std::size_t>(i)] = (f.covers[static_cast<std::size_t>(i)] | bit(i)) & full_;
    }
    suffix_reach_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      suffix_reach_[static_cast<std::size_t>(i)] =
          suffix_reach_[static_cast<std::size_t>(i) + 1] | closed_[static_cast<std::size_t>(i)];
    }
  }

  std::optional<IndexSet> run() {
    chosen_.clear();
    if (dfs(0, k_, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(int start, int remaining, std::uint64_t covered) {
    if (n_ - start < remaining) return false;
    if (covered == full_) {
      for (int c = start; remaining > 0; ++c, --remaining) chosen_.push_back(c);
      return true;
    }
    if (remaining == 0) return false;
    const std::uint64_t uncovered = full_ & ~covered;
    if (uncovered & ~suffix_reach_[static_cast<std::size_t>(start)]) return false;
    if (!count_bound_ok(start, remaining, uncovered)) return false;

    for (int c = start; n_ - c >= remaining; ++c) {
      chosen_.push_back(c);
      if (dfs(c + 1, remaining - 1, covered | closed_[static_cast<std::size_t>(c)])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool count_bound_ok(int start, int remaining, std::uint64_t uncovered) {
    gains_.clear();
    for (int c = start; c < n_; ++c) {
      gains_.push_back(std::popcount(closed_[static_cast<std::size_t>(c)] & uncovered));
    }
    const auto r = std::min<std::size_t>(static_cast<std::size_t>(remaining), gains_.size());
    std::partial_sort(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(r),
                      gains_.end(), std::greater<>());
    int total = 0;
    for (std::size_t t = 0; t < r; ++t) total += gains_[t];
    return total >= std::popcount(uncovered);
  }

  int k_;
  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> closed_;
  std::vector<std::uint64_t> suffix_reach_;
  std::vector<int> gains_;
  IndexSet chosen_;
};

BudgetSolution solve_maximin_lex(const RegretMatrix& m, int k, ReachabilityOptions options) {
  const int n = m.size();
  BudgetSolution sol;
  sol.criterion = Criterion::kMaximin;
  if (k >= n) {
    sol.subset = full_set(n);
    sol.value = ExtendedValue::neg_infinity();
    return sol;
  }
  if (n > kMaxCoverActs) {
    fail(ErrorKind::kGuardExceeded, "maximin search supports at most 64 acts");
  }

  // A cover needs at least n-k pairs (i, j) with e(i, j) <= alpha, so levels
  // below the (n-k)-th smallest entry are skipped outright.
  const std::vector<double> levels = m.sorted_entries();
  for (std::size_t pos = static_cast<std::size_t>(n - k - 1); pos < levels.size(); ++pos) {
    if (pos > static_cast<std::size_t>(n - k - 1) && levels[pos] == levels[pos - 1]) continue;
    const CoverFamily covers = CoverFamily::build(m, levels[pos]);
    if (auto t = reachability_check(covers, k, n, options)) {
      sol.subset = std::move(*t);
      sol.value = ExtendedValue(levels[pos]);
      return sol;
    }
  }
  // The largest entry always admits a cover.
  fail(ErrorKind::kInternal, "maximin search exhausted all levels");
}

}  // namespace

CoverFamily CoverFamily::build(const RegretMatrix& m, double alpha) {
  const int n = m.size();
  if (n > kMaxCoverActs) fail(ErrorKind::kGuardExceeded, "cover family supports at most 64 acts");
  CoverFamily f;
  f.alpha = alpha;
  f.n = n;
  f.covers.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && m(i, j) <= alpha) f.covers[static_cast<std::size_t>(i)] |= bit(j);
    }
  }
  return f;
}

std::optional<IndexSet> greedy_cover(const CoverFamily& covers, int k, int n) {
  const std::uint64_t full = all_mask(n);
  std::uint64_t covered = 0;
  std::uint64_t picked = 0;
  for (int round = 0; round < k && covered != full; ++round) {
    int best = -1;
    int best_gain = -1;
    for (int i = 0; i < n; ++i) {
      if (picked & bit(i)) continue;
      const std::uint64_t closed = (covers.covers[static_cast<std::size_t>(i)] | bit(i)) & full;
      const int gain = std::popcount(closed & ~covered);
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    picked |= bit(best);
    covered |= (covers.covers[static_cast<std::size_t>(best)] | bit(best)) & full;
  }
  if (covered != full) return std::nullopt;
  for (int i = 0; std::popcount(picked) < k && i < n; ++i) picked |= bit(i);
  return from_mask(picked);
}

std::optional<IndexSet> reachability_check(const CoverFamily& covers, int k, int n,
                                           ReachabilityOptions options) {
  if (n < 1 || n > kMaxCoverActs || covers.covers.size() != static_cast<std::size_t>(n)) {
    fail(ErrorKind::kMalformedInput, "reachability: cover family does not match n");
  }
  if (k < 0 || k > n) fail(ErrorKind::kMalformedInput, "reachability: need 0 <= k <= n");
  if (k == n) return full_set(n);

  // Size bound: k picks cover at most k + (sum of the k largest |C[i]|).
  std::vector<int> sizes;
  for (auto c : covers.covers) sizes.push_back(std::popcount(c & all_mask(n)));
  std::partial_sort(sizes.begin(), sizes.begin() + k, sizes.end(), std::greater<>());
  long reach = k;
  for (int t = 0; t < k; ++t) reach += sizes[static_cast<std::size_t>(t)];
  if (reach < n) return std::nullopt;

  if (options.greedy_shortcut) {
    if (auto g = greedy_cover(covers, k, n)) return g;
  }
  return CoverSearch(covers, k, n).run();
}

BudgetSolution solve_maximin(const RegretMatrix& m, int k, TieBreak tie,
                             ReachabilityOptions options) {
  detail::require_budget(k);
  return detail::with_tie_break(m, tie, [k, options](const RegretMatrix& mm) {
    return solve_maximin_lex(mm, k, options);
  });
}

}  // namespace budgeted
