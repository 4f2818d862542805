#pragma once

#include <cstdint>
#include <vector>

namespace recnodes {

// A barycentric multi-index: a tuple of nonnegative integers of length d+1.
// Kept as a plain vector; all manipulation goes through the free functions
// below.
using MultiIndex = std::vector<int>;

// |alpha|, the sum of the entries.
int total(const MultiIndex& alpha);

// Tuple with the i-th entry removed.  The tuple must keep length >= 1.
MultiIndex remove_entry(const MultiIndex& alpha, int i);

// Tuple augmented by inserting a zero at position i (0 <= i <= #alpha).
MultiIndex insert_zero(const MultiIndex& alpha, int i);

// All multi-indices of length d+1 with |alpha| = n, in lexicographically
// decreasing order (first entry varies slowest).  Size is binomial(n+d, d).
std::vector<MultiIndex> enumerate_indices(int d, int n);

// binomial(n, k) as a 64-bit integer, exact for the sizes used here.
std::int64_t binomial(int n, int k);

} // namespace recnodes
