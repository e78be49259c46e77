#include "subsetsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "subsetsum/algorithms.hpp"
#include "subsetsum/baselines.hpp"
#include "subsetsum/errors.hpp"

namespace subsetsum {
namespace {

using Clock = std::chrono::steady_clock;

std::function<SumSet(const Instance&)> algo_fn(const std::string& name) {
  if (name == "paper")
    return [](const Instance& i) { return all_subset_sums(i); };
  if (name == "bellman")
    return [](const Instance& i) { return bellman_all_sums(i); };
  if (name == "bellman-scalar")
    return [](const Instance& i) { return bellman_all_sums_scalar(i); };
  if (name == "brute")
    return [](const Instance& i) {
      return brute_force_all_sums(i.elements, i.bound);
    };
  throw InputError("unknown algorithm '" + name +
                   "' (expected paper | bellman | bellman-scalar | brute)");
}

}  // namespace

SweepSpec default_sweep() {
  SweepSpec spec;
  spec.ns = {16, 32, 64};
  spec.us = {std::uint64_t{1} << 16, std::uint64_t{1} << 24};
  spec.algos = {"paper", "bellman", "bellman-scalar"};
  spec.reps = 3;
  spec.seed = 1;
  return spec;
}

std::vector<BenchRecord> run_bench(const SweepSpec& spec) {
  if (spec.reps == 0) throw InputError("bench needs reps >= 1");
  std::vector<BenchRecord> records;
  for (std::uint64_t n : spec.ns) {
    for (std::uint64_t u : spec.us) {
      const Instance inst = generate_instance(n, u, spec.seed, spec.profile);
      std::uint64_t cell_checksum = 0;
      bool first_algo = true;
      for (const std::string& name : spec.algos) {
        const auto fn = algo_fn(name);
        BenchRecord rec;
        rec.algo = name;
        rec.n = n;
        rec.u = u;
        rec.seed = spec.seed;

        std::vector<std::uint64_t> times;
        std::uint64_t total = 0;
        for (std::uint32_t r = 0; r < spec.reps; ++r) {
          const auto t0 = Clock::now();
          const SumSet result = fn(inst);
          const auto t1 = Clock::now();
          const auto ns = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                  .count());
          times.push_back(std::max<std::uint64_t>(ns, 1));
          rec.result_checksum = result.checksum();
          total += ns;
          if (spec.timeout_ns && total > spec.timeout_ns) {
            rec.timed_out = true;
            break;
          }
        }
        std::sort(times.begin(), times.end());
        rec.elapsed_ns = times[(times.size() - 1) / 2];

        if (first_algo) {
          cell_checksum = rec.result_checksum;
          first_algo = false;
        } else if (rec.result_checksum != cell_checksum) {
          throw std::runtime_error(
              "checksum mismatch at cell n=" + std::to_string(n) +
              " u=" + std::to_string(u) + " between '" + spec.algos.front() +
              "' and '" + name + "'");
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "algo,n,u,seed,elapsed_ns,checksum\n";
  for (const BenchRecord& r : records) {
    os << r.algo << ',' << r.n << ',' << r.u << ',' << r.seed << ','
       << r.elapsed_ns << ',' << r.result_checksum << '\n';
  }
}

}  // namespace subsetsum
