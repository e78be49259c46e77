#pragma once

#include <cstdint>

#include "subsetsum/boolvec.hpp"
#include "subsetsum/core.hpp"

namespace subsetsum {

/// A CardSumSet embedded into one characteristic-polynomial vector by
/// Kronecker index packing: cell (s, j) sits at index j * width_stride + s.
/// For a pair entering one convolution, width_stride must exceed the largest
/// reachable row sum so carries cannot cross rows.
struct PackedGrid {
  std::uint64_t width_stride = 1;  // W
  std::uint64_t sum_extent = 0;    // max s carried by any set bit
  std::uint64_t card_extent = 0;   // max j row present
  BoolVec underlying;

  PackedGrid() : underlying(1) {}
};

// Dispatch threshold: when |support(a)| * |support(b)| is at or below this,
// the convolution runs as a direct double loop over set bits instead of a
// transform. Overridable via the SUMSET_NAIVE_CUTOFF environment variable
// (read once at first use) and programmatically via set_naive_cutoff.
inline constexpr std::uint64_t kDefaultNaiveCutoff = std::uint64_t{1} << 21;

std::uint64_t naive_cutoff();
void set_naive_cutoff(std::uint64_t cutoff);

/// Support of the product of two characteristic polynomials, truncated to
/// degree out_limit: bit i of the result (length out_limit + 1) is set iff
/// some i1 + i2 = i with a[i1] and b[i2] set. Exact; throws LimitError if the
/// required transform would exceed 2^27 coefficients.
BoolVec conv_support(const BoolVec& a, const BoolVec& b,
                     std::uint64_t out_limit);

/// 2D analogue on index-packed grids: cell (s, j) of the result is set iff
/// s1 + s2 = s <= sum_limit and j1 + j2 = j <= card_limit for set cells of a
/// and b. Requires matching strides and an aliasing-safe stride
/// W >= 2 * max(sum extents) + 1, with sum_limit < W.
PackedGrid conv_support_2d(const PackedGrid& a, const PackedGrid& b,
                           std::uint64_t sum_limit, std::uint64_t card_limit);

/// Packs a CardSumSet into a grid with the given stride (W > max sum present).
PackedGrid pack_grid(const CardSumSet& s, std::uint64_t width_stride);

/// Reads a grid back out, keeping cells with s <= u and j <= c.
CardSumSet unpack_grid(const PackedGrid& g, std::uint64_t u, std::uint64_t c);

}  // namespace subsetsum
