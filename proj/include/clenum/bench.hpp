#pragma once

// Delay instrumentation: runs an enumerator with its abstract work counters
// and reports the worst per-branch count against the advertised delay bound.
// Counters, not wall time, are the primary metric; they are a pure function
// of (instance, algorithm) and identical across runs.

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>

#include "clones.hpp"
#include "enumerate.hpp"
#include "generators.hpp"

namespace clenum {

// The per-branch work bound each specialized walker guarantees, in the
// walker's own counter units (word operations for the Gray-code walkers,
// coordinate/pair probes elsewhere).  Zero means no pinned bound.
inline std::uint64_t delay_bound(Algo algo, int n, int m) {
  const auto un = static_cast<std::uint64_t>(n);
  const auto um = static_cast<std::uint64_t>(m);
  switch (algo) {
    case Algo::kMeet:
      return 2 * um * un + 8 * un;
    case Algo::kSpan:
    case Algo::kAffineSpan:
      return 2 * ((un + 63) / 64) + 8;
    case Algo::kLattice:
      return 8 * un;
    case Algo::kMajority:
      return un * (un + 1) / 2 + 8 * un;
    default:
      return 0;
  }
}

struct BenchResult {
  std::string clone;
  int n = 0;
  int m = 0;  // family size actually enumerated (after deduplication)
  std::uint64_t seed = 0;
  std::size_t emissions = 0;
  std::uint64_t max_branch_work = 0;
  std::uint64_t total_work = 0;
  std::uint64_t bound = 0;  // 0 when no bound is pinned for the algorithm
  double wall_seconds = 0.0;
  std::array<std::uint64_t, 65> histogram{};  // emissions with branch work <= 2^k

  double ratio() const {
    return bound == 0 ? 0.0 : static_cast<double>(max_branch_work) / static_cast<double>(bound);
  }

  bool within_bound() const { return bound == 0 || max_branch_work <= bound; }

  // One machine-readable line per run.
  std::string machine_line() const {
    std::ostringstream out;
    out << "RESULT clone=\"" << clone << "\" n=" << n << " m=" << m << " seed=" << seed
        << " emissions=" << emissions << " max_branch_work=" << max_branch_work
        << " total_work=" << total_work << " bound=" << bound << " ratio=" << ratio()
        << " wall_seconds=" << wall_seconds;
    return out.str();
  }
};

inline BenchResult run_bench(const CloneSpec& spec, const Family& s, std::uint64_t seed,
                             std::size_t max_outputs, const ResolveOptions& opts = {}) {
  const ResolvedProblem rp = resolve(spec, s, opts);
  auto e = make_enumerator(rp, EnumMode::kFast);
  BenchResult r;
  r.clone = spec.to_string();
  r.n = s.empty_set() ? 0 : s.n();
  r.m = static_cast<int>(s.size());
  r.seed = seed;
  r.bound = delay_bound(rp.algo, r.n, r.m);
  const auto start = std::chrono::steady_clock::now();
  while (r.emissions < max_outputs) {
    const auto v = e->next();
    if (!v) break;
    ++r.emissions;
    if (e->branch_work() > r.max_branch_work) r.max_branch_work = e->branch_work();
    ++r.histogram[static_cast<std::size_t>(std::bit_width(e->branch_work()))];
  }
  const auto stop = std::chrono::steady_clock::now();
  r.total_work = e->work();
  r.wall_seconds = std::chrono::duration<double>(stop - start).count();
  return r;
}

inline BenchResult run_random_bench(const CloneSpec& spec, int n, int m, double density,
                                    std::uint64_t seed, std::size_t max_outputs,
                                    const ResolveOptions& opts = {}) {
  Family s = Family::empty(2);
  for (Vector& v : random_vectors(n, m, 2, density, seed)) s.insert(std::move(v));
  return run_bench(spec, s, seed, max_outputs, opts);
}

}  // namespace clenum
