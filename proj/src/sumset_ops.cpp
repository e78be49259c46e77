#include "subsetsum/sumset_ops.hpp"

#include <algorithm>
#include <bit>

#include "subsetsum/convolution.hpp"
#include "subsetsum/errors.hpp"

namespace subsetsum {

SumSet oplus(const SumSet& a, const SumSet& b, std::uint64_t u) {
  SumSet out(u);
  out.bits = conv_support(a.bits, b.bits, u);
  return out;
}

SumSet oplus_many(std::span<const SumSet> sets, std::uint64_t u) {
  if (sets.empty()) throw InputError("oplus_many needs at least one set");
  SumSet acc(u);
  sets[0].bits.for_each_set([&acc, u](std::size_t i) {
    if (i <= u) acc.add(i);
  });
  // Carry the accumulator's member list across sparse folds so each one only
  // scans the incoming operand, not the (dense, u-sized) running result.
  // Dense folds dispatch on popcounts alone and never materialize the lists.
  std::vector<std::uint64_t> acc_members;
  bool have_members = false;
  for (std::size_t k = 1; k < sets.size(); ++k) {
    const SumSet& part = sets[k];
    if (static_cast<unsigned __int128>(acc.count()) * part.count() >
        naive_cutoff()) {
      acc = oplus(acc, part, u);
      have_members = false;
      continue;
    }
    if (!have_members) acc_members = acc.members();
    std::vector<std::uint64_t> part_members;
    part.bits.for_each_set(
        [&part_members](std::size_t i) { part_members.push_back(i); });
    SumSet next(u);
    std::vector<std::uint64_t> next_members;
    for (std::uint64_t s1 : acc_members) {
      for (std::uint64_t s2 : part_members) {
        const std::uint64_t s = s1 + s2;
        if (s > u) break;
        if (!next.contains(s)) {
          next.add(s);
          next_members.push_back(s);
        }
      }
    }
    acc = std::move(next);
    acc_members = std::move(next_members);
    have_members = true;
  }
  return acc;
}

CardSumSet oplus_2d(const CardSumSet& a, const CardSumSet& b, std::uint64_t u,
                    std::uint64_t c) {
  if (!a.bits.any() || !b.bits.any()) return CardSumSet(u, c);

  // Small supports skip the grid packing entirely: the double loop over
  // members is cheaper than touching W*(c+1)-sized scratch vectors.
  const std::uint64_t ca = a.count(), cb = b.count();
  if (static_cast<unsigned __int128>(ca) * cb <= naive_cutoff()) {
    CardSumSet out(u, c);
    const CardSumSet& small = ca <= cb ? a : b;
    const CardSumSet& large = ca <= cb ? b : a;
    const auto sm = small.members();
    large.for_each([&](std::uint64_t s1, std::uint64_t j1) {
      for (const auto& [s2, j2] : sm)
        if (s1 + s2 <= u && j1 + j2 <= c) out.add(s1 + s2, j1 + j2);
    });
    return out;
  }

  const std::uint64_t ext_a = a.max_sum(), ext_b = b.max_sum();
  const std::uint64_t w = std::bit_ceil(2 * std::max(ext_a, ext_b) + 1);
  const std::uint64_t sum_limit = std::min(u, ext_a + ext_b);

  const PackedGrid ga = pack_grid(a, w);
  const PackedGrid gb = pack_grid(b, w);
  const PackedGrid gc = conv_support_2d(ga, gb, sum_limit, c);
  return unpack_grid(gc, u, c);
}

}  // namespace subsetsum
