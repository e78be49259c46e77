// Test-only oracles, kept independent of the convolution backend: plain
// double/quadruple loops over raw bits.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subsetsum/boolvec.hpp"
#include "subsetsum/core.hpp"

namespace test_oracle {

inline subsetsum::BoolVec conv_slow(const subsetsum::BoolVec& a,
                                    const subsetsum::BoolVec& b,
                                    std::uint64_t out_limit) {
  subsetsum::BoolVec out(out_limit + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.test(i)) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.test(j) && i + j <= out_limit) out.set(i + j);
  }
  return out;
}

inline subsetsum::CardSumSet conv2d_slow(const subsetsum::CardSumSet& a,
                                         const subsetsum::CardSumSet& b,
                                         std::uint64_t u, std::uint64_t c) {
  subsetsum::CardSumSet out(u, c);
  for (std::uint64_t s1 = 0; s1 <= a.sum_bound; ++s1)
    for (std::uint64_t j1 = 0; j1 <= a.card_bound; ++j1) {
      if (!a.contains(s1, j1)) continue;
      for (std::uint64_t s2 = 0; s2 <= b.sum_bound; ++s2)
        for (std::uint64_t j2 = 0; j2 <= b.card_bound; ++j2)
          if (b.contains(s2, j2) && s1 + s2 <= u && j1 + j2 <= c)
            out.add(s1 + s2, j1 + j2);
    }
  return out;
}

inline std::vector<std::uint64_t> random_distinct(std::mt19937_64& rng,
                                                  std::size_t n,
                                                  std::uint64_t lo,
                                                  std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  std::uniform_int_distribution<std::uint64_t> d(lo, hi);
  while (out.size() < n) {
    const std::uint64_t v = d(rng);
    bool dup = false;
    for (std::uint64_t x : out) dup |= (x == v);
    if (!dup) out.push_back(v);
  }
  return out;
}

}  // namespace test_oracle
