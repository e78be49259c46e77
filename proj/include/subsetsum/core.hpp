#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subsetsum/boolvec.hpp"

namespace subsetsum {

/// A validated problem instance: a set of positive integers (sorted, distinct,
/// all <= bound), an upper bound, and an optional decision target.
struct Instance {
  std::vector<std::uint64_t> elements;  // strictly increasing, all in [1, bound]
  std::uint64_t bound = 0;              // u
  std::optional<std::uint64_t> target;  // t, if the decision problem is asked

  // Construction diagnostics.
  std::size_t duplicates_removed = 0;
  std::size_t dropped_over_bound = 0;

  std::size_t n() const { return elements.size(); }
};

/// Dense subset of {0,...,bound}: the value of SS_u(X).
struct SumSet {
  std::uint64_t bound = 0;
  BoolVec bits;

  SumSet() : bits(1) {}
  explicit SumSet(std::uint64_t u) : bound(u), bits(u + 1) {}

  bool contains(std::uint64_t v) const { return bits.test(v); }
  void add(std::uint64_t v) { bits.set(v); }
  std::size_t count() const { return bits.count(); }

  std::vector<std::uint64_t> members() const {
    std::vector<std::uint64_t> out;
    out.reserve(bits.count());
    bits.for_each_set([&out](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::uint64_t checksum() const { return bits.fingerprint(); }

  bool operator==(const SumSet& o) const {
    return bound == o.bound && bits == o.bits;
  }
};

/// Dense subset of {0,...,sum_bound} x {0,...,card_bound}: the value of
/// SS#_u(X), i.e. (sum, cardinality) pairs.
struct CardSumSet {
  std::uint64_t sum_bound = 0;
  std::uint64_t card_bound = 0;
  BoolVec bits;

  CardSumSet() : bits(1) {}
  CardSumSet(std::uint64_t u, std::uint64_t c)
      : sum_bound(u), card_bound(c), bits((u + 1) * (c + 1)) {}

  std::size_t index(std::uint64_t s, std::uint64_t j) const {
    return j * (sum_bound + 1) + s;
  }

  bool contains(std::uint64_t s, std::uint64_t j) const {
    return s <= sum_bound && j <= card_bound && bits.test(index(s, j));
  }
  void add(std::uint64_t s, std::uint64_t j) { bits.set(index(s, j)); }
  std::size_t count() const { return bits.count(); }

  template <typename F>
  void for_each(F&& f) const {
    const std::uint64_t stride = sum_bound + 1;
    bits.for_each_set(
        [&](std::size_t i) { f(i % stride, i / stride); });
  }

  std::uint64_t max_sum() const {
    std::uint64_t m = 0;
    for_each([&m](std::uint64_t s, std::uint64_t) { if (s > m) m = s; });
    return m;
  }

  std::uint64_t max_card() const {
    std::uint64_t m = 0;
    for_each([&m](std::uint64_t, std::uint64_t j) { if (j > m) m = j; });
    return m;
  }

  SumSet project_sums() const {
    SumSet out(sum_bound);
    for_each([&out](std::uint64_t s, std::uint64_t) { out.add(s); });
    return out;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> members() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for_each([&out](std::uint64_t s, std::uint64_t j) {
      out.emplace_back(s, j);
    });
    return out;
  }

  bool operator==(const CardSumSet& o) const {
    return sum_bound == o.sum_bound && card_bound == o.card_bound &&
           bits == o.bits;
  }
};

/// Partition of an instance's elements by residue mod b, with the quotient
/// sets (x - l)/b attached per class.
struct ResidueDecomposition {
  struct Class {
    std::vector<std::uint64_t> elements;   // the x with x mod b == l
    std::vector<std::uint64_t> quotients;  // (x - l)/b, same order
  };

  std::uint64_t modulus = 1;    // b
  std::vector<Class> classes;   // indexed by residue l in [0, b)
};

/// Validates, deduplicates, sorts, and prunes raw input into an Instance.
/// Elements > u are dropped (they cannot appear in any sum <= u); duplicates
/// are removed with a count kept for diagnostics. Throws InputError on
/// non-positive elements or a target outside [0, u].
Instance make_instance(const std::vector<std::int64_t>& raw_elements,
                       std::uint64_t u,
                       std::optional<std::uint64_t> t = std::nullopt);

/// Splits inst.elements into the b residue classes of Fig-style congruence
/// decomposition. Throws InputError if b == 0.
ResidueDecomposition decompose_by_residue(const Instance& inst,
                                          std::uint64_t b);

}  // namespace subsetsum
