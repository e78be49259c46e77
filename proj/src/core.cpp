#include "subsetsum/core.hpp"

#include <algorithm>
#include <string>

#include "subsetsum/errors.hpp"

namespace subsetsum {

Instance make_instance(const std::vector<std::int64_t>& raw_elements,
                       std::uint64_t u, std::optional<std::uint64_t> t) {
  if (t && *t > u)
    throw InputError("target t=" + std::to_string(*t) + " exceeds bound u=" +
                     std::to_string(u));

  Instance inst;
  inst.bound = u;
  inst.target = t;

  std::vector<std::uint64_t> vals;
  vals.reserve(raw_elements.size());
  for (std::int64_t x : raw_elements) {
    if (x <= 0)
      throw InputError("non-positive element " + std::to_string(x) +
                       "; elements must be >= 1");
    vals.push_back(static_cast<std::uint64_t>(x));
  }
  std::sort(vals.begin(), vals.end());
  std::size_t before = vals.size();
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  inst.duplicates_removed = before - vals.size();

  for (std::uint64_t v : vals) {
    if (v > u)
      ++inst.dropped_over_bound;
    else
      inst.elements.push_back(v);
  }
  return inst;
}

ResidueDecomposition decompose_by_residue(const Instance& inst,
                                          std::uint64_t b) {
  if (b == 0) throw InputError("residue modulus b must be >= 1");
  ResidueDecomposition d;
  d.modulus = b;
  d.classes.resize(b);
  for (std::uint64_t x : inst.elements) {
    const std::uint64_t l = x % b;
    d.classes[l].elements.push_back(x);
    d.classes[l].quotients.push_back((x - l) / b);
  }
  return d;
}

}  // namespace subsetsum
