#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subsetsum/algorithms.hpp"
#include "subsetsum/bench.hpp"
#include "subsetsum/convolution.hpp"
#include "subsetsum/errors.hpp"
#include "subsetsum/generator.hpp"
#include "subsetsum/instance_io.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitLimit = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw subsetsum::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "n=16,64;u=65536,4194304"
void parse_grid(const std::string& text, subsetsum::SweepSpec& spec) {
  spec.ns.clear();
  spec.us.clear();
  std::istringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw subsetsum::InputError("bad grid component '" + part +
                                  "' (expected n=... or u=...)");
    const std::string key = part.substr(0, eq);
    auto* dst = key == "n" ? &spec.ns : key == "u" ? &spec.us : nullptr;
    if (!dst)
      throw subsetsum::InputError("bad grid axis '" + key + "'");
    std::istringstream vals(part.substr(eq + 1));
    std::string v;
    while (std::getline(vals, v, ',')) {
      if (v.empty()) continue;
      dst->push_back(std::stoull(v));
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subset sums up to a bound: divide-and-conquer solver, "
               "baselines, generator, benchmark harness"};
  app.require_subcommand(1);

  std::string file;
  auto* solve = app.add_subcommand("solve", "decide the target; prints YES/NO");
  solve->add_option("file", file, "instance file")->required();
  auto* sums =
      app.add_subcommand("sums", "print all subset sums <= u, one per line");
  sums->add_option("file", file, "instance file")->required();

  std::uint64_t gen_n = 0, gen_u = 1, gen_seed = 1;
  std::string gen_profile = "uniform";
  auto* gen = app.add_subcommand("gen", "write a seeded instance to stdout");
  gen->add_option("--n", gen_n, "element count")->required();
  gen->add_option("--u", gen_u, "bound")->required();
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--profile", gen_profile,
                  "uniform | small-elements | single-residue");

  std::string grid_text, algos_text, bench_profile = "uniform";
  std::uint32_t reps = 3;
  std::uint64_t bench_seed = 1, timeout_ms = 0;
  bool single_thread = false;
  auto* bench = app.add_subcommand("bench", "run a benchmark sweep; CSV out");
  bench->add_option("--grid", grid_text,
                    "grid spec, e.g. \"n=16,64;u=65536,16777216\" "
                    "(default: shipped grid)");
  bench->add_option("--algos", algos_text,
                    "comma list of paper,bellman,bellman-scalar,brute");
  bench->add_option("--reps", reps, "repetitions per cell (median reported)");
  bench->add_option("--seed", bench_seed, "generator seed");
  bench->add_option("--profile", bench_profile, "generator profile");
  bench->add_option("--timeout-ms", timeout_ms,
                    "per-cell budget; cells over it stop early");
  bench->add_flag("--single-thread", single_thread,
                  "run strictly sequentially (already the default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) {
      const subsetsum::Instance inst = subsetsum::parse_instance(read_file(file));
      const bool yes = subsetsum::decide_subset_sum(inst);
      std::cout << (yes ? "YES" : "NO") << '\n';
      return yes ? kExitYes : kExitNo;
    }
    if (*sums) {
      const subsetsum::Instance inst = subsetsum::parse_instance(read_file(file));
      for (std::uint64_t v : subsetsum::all_subset_sums(inst).members())
        std::cout << v << '\n';
      return 0;
    }
    if (*gen) {
      const subsetsum::Instance inst = subsetsum::generate_instance(
          gen_n, gen_u, gen_seed, subsetsum::profile_from_name(gen_profile));
      std::cout << subsetsum::format_instance(inst);
      return 0;
    }
    if (*bench) {
      subsetsum::SweepSpec spec = subsetsum::default_sweep();
      if (!grid_text.empty()) parse_grid(grid_text, spec);
      if (!algos_text.empty()) {
        spec.algos.clear();
        std::istringstream ss(algos_text);
        std::string a;
        while (std::getline(ss, a, ','))
          if (!a.empty()) spec.algos.push_back(a);
      }
      spec.reps = reps;
      spec.seed = bench_seed;
      spec.profile = subsetsum::profile_from_name(bench_profile);
      spec.timeout_ns = timeout_ms * 1000000ull;
      const auto records = subsetsum::run_bench(spec);
      subsetsum::write_csv(std::cout, records);
      for (const auto& r : records)
        if (r.timed_out)
          std::cerr << "warning: cell algo=" << r.algo << " n=" << r.n
                    << " u=" << r.u << " exceeded the time budget\n";
      return 0;
    }
  } catch (const subsetsum::LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const subsetsum::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  }
  return kExitUsage;
}
