#include "subsetsum/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "subsetsum/errors.hpp"

namespace subsetsum {
namespace {

// splitmix64: fixed, platform-independent stream.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, k) by rejection.
  std::uint64_t bounded(std::uint64_t k) {
    const std::uint64_t reject_from = UINT64_MAX / k * k;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= reject_from);
    return r % k;
  }
};

// Floyd's sampling: n distinct values from [1, m].
std::set<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t n,
                                        std::uint64_t m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t j = m - n + 1; j <= m; ++j) {
    const std::uint64_t t = 1 + rng.bounded(j);
    if (!out.insert(t).second) out.insert(j);
  }
  return out;
}

}  // namespace

GenProfile profile_from_name(const std::string& name) {
  if (name == "uniform") return GenProfile::kUniform;
  if (name == "small-elements") return GenProfile::kSmallElements;
  if (name == "single-residue") return GenProfile::kSingleResidue;
  throw InputError("unknown generator profile '" + name +
                   "' (expected uniform | small-elements | single-residue)");
}

std::string profile_name(GenProfile p) {
  switch (p) {
    case GenProfile::kUniform: return "uniform";
    case GenProfile::kSmallElements: return "small-elements";
    case GenProfile::kSingleResidue: return "single-residue";
  }
  return "?";
}

Instance generate_instance(std::uint64_t n, std::uint64_t u,
                           std::uint64_t seed, GenProfile profile) {
  if (u < 1) throw InputError("generator needs u >= 1");
  Rng rng{seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(profile)};

  std::vector<std::int64_t> vals;
  if (n > 0) {
    switch (profile) {
      case GenProfile::kUniform: {
        if (n > u)
          throw InputError("uniform profile has only " + std::to_string(u) +
                           " distinct values, asked for " + std::to_string(n));
        for (std::uint64_t v : sample_distinct(rng, n, u))
          vals.push_back(static_cast<std::int64_t>(v));
        break;
      }
      case GenProfile::kSmallElements: {
        const std::uint64_t m = std::min(u, (u + n - 1) / n * 4);
        if (n > m)
          throw InputError("small-elements profile has only " +
                           std::to_string(m) + " distinct values, asked for " +
                           std::to_string(n));
        for (std::uint64_t v : sample_distinct(rng, n, m))
          vals.push_back(static_cast<std::int64_t>(v));
        break;
      }
      case GenProfile::kSingleResidue: {
        const std::uint64_t m =
            static_cast<std::uint64_t>(
                std::floor(std::sqrt(static_cast<double>(n)))) + 1;
        const std::uint64_t r = rng.bounded(m);
        // Values r + k*m within [1, u]; k starts at 1 when r == 0.
        const std::uint64_t k_lo = (r == 0) ? 1 : 0;
        if (u < r)
          throw InputError("single-residue profile: residue exceeds bound");
        const std::uint64_t k_hi = (u - r) / m;  // inclusive
        if (k_hi < k_lo || n > k_hi - k_lo + 1)
          throw InputError("single-residue profile has only " +
                           std::to_string(k_hi < k_lo ? 0 : k_hi - k_lo + 1) +
                           " distinct values, asked for " + std::to_string(n));
        for (std::uint64_t k : sample_distinct(rng, n, k_hi - k_lo + 1))
          vals.push_back(
              static_cast<std::int64_t>(r + (k_lo + k - 1) * m));
        break;
      }
    }
  }
  return make_instance(vals, u, std::nullopt);
}

}  // namespace subsetsum
