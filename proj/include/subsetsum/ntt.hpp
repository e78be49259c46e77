#pragma once

#include <cstdint>
#include <vector>

namespace subsetsum::ntt {

// 15 * 2^27 + 1; supports power-of-two transforms up to 2^27.
inline constexpr std::uint32_t kMod = 2013265921;
inline constexpr std::uint32_t kPrimitiveRoot = 31;
inline constexpr std::size_t kMaxTransform = std::size_t{1} << 27;

// In-place forward transform; a.size() must be a power of two <= kMaxTransform.
// Data is in the plain residue domain, twiddles internally in Montgomery form.
// Output is the DFT in bit-reversed order, up to a unit factor — fine for
// pointwise products feeding inverse_transform_unscaled, and for zero testing.
void transform(std::vector<std::uint32_t>& a);

// In-place inverse of `transform` (bit-reversed input, natural-order output)
// up to a scalar factor of n: a coefficient of the underlying product is zero
// iff the corresponding output entry is zero.
void inverse_transform_unscaled(std::vector<std::uint32_t>& a);

std::uint32_t mul(std::uint32_t a_mont, std::uint32_t b);

}  // namespace subsetsum::ntt
