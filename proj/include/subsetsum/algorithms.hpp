#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subsetsum/core.hpp"

namespace subsetsum {

/// Knobs for the divide-and-conquer solver. Defaults reproduce the published
/// algorithm; the overrides exist for tests (correctness must not depend on
/// either choice).
struct SolveOptions {
  // Forces the residue modulus b instead of floor(sqrt(n log2 n)).
  std::optional<std::uint64_t> forced_modulus;

  enum class Split { kFirstHalf, kSeededShuffle };
  Split split = Split::kFirstHalf;
  std::uint64_t split_seed = 0;
};

/// The default residue modulus: max(1, floor(sqrt(n * log2(max(n, 2))))).
std::uint64_t default_modulus(std::size_t n);

/// All (sum, cardinality) pairs over subsets of `elements` with sum <= u,
/// by halving recursion and 2D sumset combines. Elements must be distinct
/// non-negative integers; zero is permitted (quotient sets contain it).
CardSumSet all_subset_sums_with_cardinality(std::vector<std::uint64_t> elements,
                                            std::uint64_t u,
                                            const SolveOptions& opts = {});

/// SS_u of a single congruence class: elements all equal to l mod b, solved on
/// the quotients with cardinality information and lifted back via z*b + j*l.
SumSet subset_sums_of_congruence_class(const std::vector<std::uint64_t>& s_ell,
                                       std::uint64_t l, std::uint64_t b,
                                       std::uint64_t u,
                                       const SolveOptions& opts = {});

/// All subset sums of the instance up to its bound: residue decomposition,
/// per-class congruence solve, final sequential combine.
SumSet all_subset_sums(const Instance& inst, const SolveOptions& opts = {});

/// SubsetSum decision: is inst.target a realizable subset sum?
bool decide_subset_sum(const Instance& inst, const SolveOptions& opts = {});

}  // namespace subsetsum
