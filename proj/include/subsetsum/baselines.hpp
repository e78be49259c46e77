#pragma once

#include <cstdint>
#include <vector>

#include "subsetsum/core.hpp"

namespace subsetsum {

/// Bellman reachability DP, word-packed shift-or variant.
SumSet bellman_all_sums(const Instance& inst);

/// Bellman DP, plain scalar table walk: the literal O(n*u) competitor.
SumSet bellman_all_sums_scalar(const Instance& inst);

// Hard guard on the 2^n enumeration.
inline constexpr std::size_t kBruteForceMaxElements = 24;

/// Exhaustive 2^n enumeration of (sum, cardinality) pairs with sum <= u.
/// Elements must be distinct; zero is permitted. Throws LimitError when
/// |elements| > 24.
CardSumSet brute_force_all_sums_with_cardinality(
    const std::vector<std::uint64_t>& elements, std::uint64_t u);

/// Sum-only projection of the brute-force enumeration.
SumSet brute_force_all_sums(const std::vector<std::uint64_t>& elements,
                            std::uint64_t u);

}  // namespace subsetsum
