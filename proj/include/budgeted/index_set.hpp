#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace budgeted {

// Zero-based act indices, kept sorted ascending and free of duplicates.
using IndexSet = std::vector<int>;

IndexSet normalize(IndexSet s);
IndexSet full_set(int n);
IndexSet complement(const IndexSet& s, int n);
bool contains(const IndexSet& s, int i);
bool is_subset(const IndexSet& s, const IndexSet& t);
IndexSet intersection(const IndexSet& s, const IndexSet& t);

// Bit i set iff act i is in the set. Requires every index < 64.
std::uint64_t to_mask(const IndexSet& s);
IndexSet from_mask(std::uint64_t mask);

// "{a1, a3}" style rendering; falls back to "a<i+1>" when names are empty.
std::string format_set(const IndexSet& s, const std::vector<std::string>& names);

}  // namespace budgeted
