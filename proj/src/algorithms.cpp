#include "subsetsum/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <string>

#include "subsetsum/errors.hpp"
#include "subsetsum/sumset_ops.hpp"

namespace subsetsum {
namespace {

CardSumSet solve_with_cardinality(std::span<const std::uint64_t> elements,
                                  std::uint64_t u) {
  const std::size_t n = elements.size();
  if (n <= 1) {
    CardSumSet out(u, n);
    out.add(0, 0);
    if (n == 1 && elements[0] <= u) out.add(elements[0], 1);
    return out;
  }
  const std::size_t half = n / 2;
  const CardSumSet lhs = solve_with_cardinality(elements.first(half), u);
  const CardSumSet rhs = solve_with_cardinality(elements.subspan(half), u);
  // Cardinality cap is the exact subtree size, keeping the 2D extent tight.
  return oplus_2d(lhs, rhs, u, n);
}

}  // namespace

std::uint64_t default_modulus(std::size_t n) {
  if (n < 2) return 1;
  const double v = std::sqrt(static_cast<double>(n) *
                             std::log2(static_cast<double>(n)));
  const auto b = static_cast<std::uint64_t>(std::floor(v));
  return b == 0 ? 1 : b;
}

CardSumSet all_subset_sums_with_cardinality(std::vector<std::uint64_t> elements,
                                            std::uint64_t u,
                                            const SolveOptions& opts) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw InputError("elements must be distinct");
  if (opts.split == SolveOptions::Split::kSeededShuffle) {
    std::mt19937_64 rng(opts.split_seed);
    std::shuffle(elements.begin(), elements.end(), rng);
  }
  return solve_with_cardinality(elements, u);
}

SumSet subset_sums_of_congruence_class(const std::vector<std::uint64_t>& s_ell,
                                       std::uint64_t l, std::uint64_t b,
                                       std::uint64_t u,
                                       const SolveOptions& opts) {
  if (b == 0 || l >= b)
    throw InputError("congruence class needs 0 <= l < b");
  std::vector<std::uint64_t> quotients;
  quotients.reserve(s_ell.size());
  for (std::uint64_t x : s_ell) {
    if (x % b != l)
      throw InputError("element " + std::to_string(x) + " is not " +
                       std::to_string(l) + " mod " + std::to_string(b));
    quotients.push_back((x - l) / b);
  }
  const CardSumSet pairs =
      all_subset_sums_with_cardinality(std::move(quotients), u / b, opts);

  SumSet out(u);
  pairs.for_each([&out, l, b, u](std::uint64_t z, std::uint64_t j) {
    const std::uint64_t lifted = z * b + j * l;
    if (lifted <= u) out.add(lifted);
  });
  return out;
}

SumSet all_subset_sums(const Instance& inst, const SolveOptions& opts) {
  const std::uint64_t u = inst.bound;
  SumSet trivial(u);
  trivial.add(0);
  if (inst.n() == 0) return trivial;

  const std::uint64_t b =
      opts.forced_modulus ? *opts.forced_modulus : default_modulus(inst.n());
  if (b == 0) throw InputError("residue modulus b must be >= 1");

  const ResidueDecomposition dec = decompose_by_residue(inst, b);
  std::vector<SumSet> class_sums;
  for (std::uint64_t l = 0; l < b; ++l) {
    if (dec.classes[l].elements.empty()) continue;  // contributes {0} only
    class_sums.push_back(
        subset_sums_of_congruence_class(dec.classes[l].elements, l, b, u,
                                        opts));
  }
  if (class_sums.empty()) return trivial;
  return oplus_many(class_sums, u);
}

bool decide_subset_sum(const Instance& inst, const SolveOptions& opts) {
  if (!inst.target)
    throw InputError("instance has no target; nothing to decide");
  return all_subset_sums(inst, opts).contains(*inst.target);
}

}  // namespace subsetsum
