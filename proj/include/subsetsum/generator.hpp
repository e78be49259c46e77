#pragma once

#include <cstdint>
#include <string>

#include "subsetsum/core.hpp"

namespace subsetsum {

enum class GenProfile {
  kUniform,        // n distinct values from [1, u]
  kSmallElements,  // n distinct values from [1, min(u, ceil(u/n)*4)]
  kSingleResidue,  // n distinct values all congruent mod floor(sqrt(n)) + 1
};

GenProfile profile_from_name(const std::string& name);
std::string profile_name(GenProfile p);

/// Deterministic seeded instance generator; the same (n, u, seed, profile)
/// always yields the same instance, independent of platform. Throws
/// InputError when the profile cannot supply n distinct values.
Instance generate_instance(std::uint64_t n, std::uint64_t u,
                           std::uint64_t seed, GenProfile profile);

}  // namespace subsetsum
