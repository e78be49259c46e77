#include "subsetsum/baselines.hpp"

#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum {

SumSet bellman_all_sums(const Instance& inst) {
  SumSet acc(inst.bound);
  acc.add(0);
  for (std::uint64_t x : inst.elements) {
    if (x > inst.bound) continue;
    acc.bits.or_shifted(acc.bits, x);
  }
  return acc;
}

SumSet bellman_all_sums_scalar(const Instance& inst) {
  const std::uint64_t u = inst.bound;
  std::vector<std::uint8_t> dp(u + 1, 0);
  dp[0] = 1;
  for (std::uint64_t x : inst.elements) {
    if (x > u) continue;
    for (std::uint64_t i = u; i >= x; --i) dp[i] |= dp[i - x];
  }
  SumSet out(u);
  for (std::uint64_t i = 0; i <= u; ++i)
    if (dp[i]) out.add(i);
  return out;
}

namespace {

void enumerate(const std::vector<std::uint64_t>& elements, std::size_t idx,
               std::uint64_t sum, std::uint64_t card, std::uint64_t u,
               CardSumSet& out) {
  if (idx == elements.size()) {
    out.add(sum, card);
    return;
  }
  enumerate(elements, idx + 1, sum, card, u, out);
  const std::uint64_t next = sum + elements[idx];
  if (next <= u) enumerate(elements, idx + 1, next, card + 1, u, out);
}

}  // namespace

CardSumSet brute_force_all_sums_with_cardinality(
    const std::vector<std::uint64_t>& elements, std::uint64_t u) {
  if (elements.size() > kBruteForceMaxElements)
    throw LimitError("brute force guard: " + std::to_string(elements.size()) +
                     " elements exceeds the limit of " +
                     std::to_string(kBruteForceMaxElements));
  CardSumSet out(u, elements.size());
  enumerate(elements, 0, 0, 0, u, out);
  return out;
}

SumSet brute_force_all_sums(const std::vector<std::uint64_t>& elements,
                            std::uint64_t u) {
  return brute_force_all_sums_with_cardinality(elements, u).project_sums();
}

}  // namespace subsetsum
