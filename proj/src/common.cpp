#include <algorithm>
#include <cmath>
#include <cstdio>

#include "budgeted/error.hpp"
#include "budgeted/extended_value.hpp"
#include "budgeted/index_set.hpp"

namespace budgeted {

std::string ExtendedValue::to_string(int decimals) const {
  if (is_neg_infinity()) return "-inf";
  char buf[64];
  // Avoid printing "-0.000000".
  double v = v_;
  if (std::fabs(v) < 0.5 * std::pow(10.0, -decimals)) v = 0.0;
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

IndexSet normalize(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

IndexSet full_set(int n) {
  IndexSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < s.size() && s[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

bool contains(const IndexSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

bool is_subset(const IndexSet& s, const IndexSet& t) {
  return std::includes(t.begin(), t.end(), s.begin(), s.end());
}

IndexSet intersection(const IndexSet& s, const IndexSet& t) {
  IndexSet out;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
  return out;
}

std::uint64_t to_mask(const IndexSet& s) {
  std::uint64_t m = 0;
  for (int i : s) {
    if (i < 0 || i >= 64) fail(ErrorKind::kGuardExceeded, "bit mask limited to 64 acts");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

IndexSet from_mask(std::uint64_t mask) {
  IndexSet s;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) s.push_back(i);
  }
  return s;
}

std::string format_set(const IndexSet& s, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p) out += ", ";
    const auto i = static_cast<std::size_t>(s[p]);
    out += i < names.size() ? names[i] : "a" + std::to_string(i + 1);
  }
  return out + "}";
}

}  // namespace budgeted
