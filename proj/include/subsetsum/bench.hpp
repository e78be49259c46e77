#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subsetsum/generator.hpp"

namespace subsetsum {

/// One timed benchmark run. elapsed_ns is the median over repetitions;
/// result_checksum fingerprints the output sum set so the harness can fail
/// loudly when two algorithms disagree.
struct BenchRecord {
  std::string algo;
  std::uint64_t n = 0;
  std::uint64_t u = 0;
  std::uint64_t seed = 0;
  std::uint64_t elapsed_ns = 0;
  std::uint64_t result_checksum = 0;
  bool timed_out = false;
};

struct SweepSpec {
  std::vector<std::uint64_t> ns;
  std::vector<std::uint64_t> us;
  std::vector<std::string> algos;  // paper | bellman | bellman-scalar | brute
  std::uint32_t reps = 3;
  std::uint64_t seed = 1;
  GenProfile profile = GenProfile::kUniform;
  std::uint64_t timeout_ns = 0;  // 0 = none; cooperative, checked between reps
};

/// The grid the artifact ships with: small-n/large-u cells where the
/// divide-and-conquer solver dominates, plus balanced cells.
SweepSpec default_sweep();

/// Runs the (n, u) grid for every algorithm, cross-checking checksums per
/// cell. Throws on checksum divergence; propagates baseline guards.
std::vector<BenchRecord> run_bench(const SweepSpec& spec);

/// CSV with header `algo,n,u,seed,elapsed_ns,checksum`.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace subsetsum
