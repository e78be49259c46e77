#pragma once

#include <cstdint>
#include <span>

#include "subsetsum/core.hpp"

namespace subsetsum {

/// Pairwise sums {x + y | x in a, y in b} truncated to [0, u].
SumSet oplus(const SumSet& a, const SumSet& b, std::uint64_t u);

/// Left fold of oplus over a non-empty sequence, truncating at u each step.
SumSet oplus_many(std::span<const SumSet> sets, std::uint64_t u);

/// Componentwise pairwise sums of (sum, cardinality) pairs, truncated to
/// sum <= u and cardinality <= c.
CardSumSet oplus_2d(const CardSumSet& a, const CardSumSet& b, std::uint64_t u,
                    std::uint64_t c);

}  // namespace subsetsum
