#pragma once

// Command-line surface.  run_cli keeps all state local so it can be driven
// in-process by tests; the binary in tools/ is a thin wrapper around it.
//
// Exit codes: decide answers yes=0 / no=1 / error=2; every other command
// returns 0 on success and 2 on error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "clones.hpp"
#include "decide.hpp"
#include "enumerate.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "oracle.hpp"

namespace clenum {
namespace cli_detail {

// Reads the instance family from a file, or from the fallback stream when the
// path is empty or "-".
inline Family load_family(const std::string& path, std::istream& fallback) {
  if (path.empty() || path == "-") return parse_family(fallback);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return parse_family(in);
}

inline std::vector<Operation> load_operations(const std::string& path, std::istream& fallback) {
  if (path.empty() || path == "-") return parse_operations(fallback);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open truth table file '" + path + "'");
  return parse_operations(in);
}

inline CloneSpec make_spec(const std::string& clone_text, const std::string& ops_path,
                           std::istream& fallback) {
  if (!clone_text.empty() && !ops_path.empty())
    throw SpecError("choose either --clone or --ops, not both");
  if (clone_text.empty() && ops_path.empty())
    throw SpecError("one of --clone or --ops is required");
  if (!clone_text.empty()) return parse_clone_spec(clone_text);
  return CloneSpec::from_operations(load_operations(ops_path, fallback));
}

inline void warn_about(const ResolvedProblem& rp, std::ostream& err) {
  if (!rp.warning.empty()) err << "warning: " << rp.warning << "\n";
  if (rp.algo == Algo::kAssociative)
    err << "warning: associative enumeration stores every visited vector; "
           "memory grows with the closure size\n";
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"closure membership and polynomial-delay enumeration for vector families"};
  app.require_subcommand(1);

  // --- decide -----------------------------------------------------------------
  auto* decide_cmd =
      app.add_subcommand("decide", "decide whether a vector lies in the closure (yes=0, no=1)");
  std::string decide_clone, decide_ops, decide_vector, decide_instance;
  std::size_t decide_budget = kDefaultBudget;
  decide_cmd->add_option("--clone", decide_clone, "clone name, e.g. \"E2 dual\"");
  decide_cmd->add_option("--ops", decide_ops, "truth table file with explicit operations");
  decide_cmd->add_option("--vector", decide_vector, "query vector as a digit string")->required();
  decide_cmd->add_option("instance", decide_instance, "instance file (default: standard input)");
  decide_cmd->add_option("--budget", decide_budget, "saturation budget for fallback paths");

  // --- enum -------------------------------------------------------------------
  auto* enum_cmd = app.add_subcommand("enum", "enumerate the closure, one vector per line");
  std::string enum_clone, enum_ops, enum_instance;
  bool enum_generic = false, enum_sorted = false, enum_count_only = false;
  std::size_t enum_max = 0, enum_budget = kDefaultBudget;
  enum_cmd->add_option("--clone", enum_clone, "clone name, e.g. \"E2 dual\"");
  enum_cmd->add_option("--ops", enum_ops, "truth table file with explicit operations");
  enum_cmd->add_option("instance", enum_instance, "instance file (default: standard input)");
  auto* fast_flag = enum_cmd->add_flag("--fast", "use the specialized walker (default)");
  enum_cmd->add_flag("--generic", enum_generic, "force the generic backtrack enumerator")
      ->excludes(fast_flag);
  enum_cmd->add_flag("--sorted", enum_sorted, "buffer and sort the output lexicographically");
  enum_cmd->add_flag("--count-only", enum_count_only, "print only the closure cardinality");
  enum_cmd->add_option("--max-outputs", enum_max, "stop after this many solutions (0 = all)");
  enum_cmd->add_option("--budget", enum_budget, "saturation budget for fallback paths");

  // --- saturate ---------------------------------------------------------------
  auto* sat_cmd =
      app.add_subcommand("saturate", "stream the closure under explicit truth tables");
  std::string sat_ops, sat_instance;
  std::size_t sat_max = 0, sat_budget = kDefaultBudget;
  sat_cmd->add_option("--ops", sat_ops, "truth table file")->required();
  sat_cmd->add_option("instance", sat_instance, "instance file (default: standard input)");
  sat_cmd->add_option("--max-outputs", sat_max, "stop after this many solutions (0 = all)");
  sat_cmd->add_option("--budget", sat_budget, "abort after this many discovered vectors");

  // --- bench ------------------------------------------------------------------
  auto* bench_cmd =
      app.add_subcommand("bench", "measure per-emission work counters on random instances");
  std::string bench_clone;
  int bench_n = 64, bench_m = 32, bench_reps = 1;
  double bench_density = 0.5;
  std::uint64_t bench_seed = 1;
  std::size_t bench_max = 100000;
  bench_cmd->add_option("--clone", bench_clone, "clone name")->required();
  bench_cmd->add_option("--n", bench_n, "vector length");
  bench_cmd->add_option("--m", bench_m, "number of members drawn");
  bench_cmd->add_option("--density", bench_density, "probability of a nonzero coordinate");
  bench_cmd->add_option("--seed", bench_seed, "base seed; repetition r uses seed + r");
  bench_cmd->add_option("--reps", bench_reps, "number of repetitions");
  bench_cmd->add_option("--max-outputs", bench_max, "cap on emissions per repetition");

  // --- convert-dnf ------------------------------------------------------------
  auto* dnf_cmd = app.add_subcommand(
      "convert-dnf", "turn a monotone DNF into a union-closure instance (parsimonious)");
  std::string dnf_path;
  dnf_cmd->add_option("formula", dnf_path, "DNF file (default: standard input)");

  // --- gen --------------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "generate instance files");
  gen_cmd->require_subcommand(1);
  auto* gen_random = gen_cmd->add_subcommand("random", "seeded random family");
  int gr_n = 8, gr_m = 4, gr_d = 2;
  double gr_density = 0.5;
  std::uint64_t gr_seed = 1;
  gen_random->add_option("--n", gr_n, "vector length")->required();
  gen_random->add_option("--m", gr_m, "number of members")->required();
  gen_random->add_option("--domain", gr_d, "domain size (default 2)");
  gen_random->add_option("--density", gr_density, "probability of a nonzero coordinate");
  gen_random->add_option("--seed", gr_seed, "random seed");
  auto* gen_hs = gen_cmd->add_subcommand(
      "hittingset", "complemented characteristic vectors of a hypergraph");
  int hs_vertices = 0;
  std::string hs_edges;
  gen_hs->add_option("--vertices", hs_vertices, "number of vertices")->required();
  gen_hs->add_option("--edges", hs_edges, "edges as 1-based lists, e.g. \"1,2;2,3\"")->required();

  std::vector<const char*> argv;
  argv.push_back("clenum");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decide_cmd->parsed()) {
      const Family s = cli_detail::load_family(decide_instance, in);
      const CloneSpec spec = cli_detail::make_spec(decide_clone, decide_ops, in);
      ResolveOptions opts;
      opts.budget = decide_budget;
      const ResolvedProblem rp = resolve(spec, s, opts);
      cli_detail::warn_about(rp, err);
      const MembershipDecider decide(rp);
      const Vector v = Vector::from_string(decide_vector, s.empty_set() ? 2 : s.domain());
      const bool yes = decide(v);
      out << (yes ? "yes" : "no") << "\n" << std::flush;
      return yes ? 0 : 1;
    }

    if (enum_cmd->parsed()) {
      const Family s = cli_detail::load_family(enum_instance, in);
      const CloneSpec spec = cli_detail::make_spec(enum_clone, enum_ops, in);
      ResolveOptions opts;
      opts.budget = enum_budget;
      const ResolvedProblem rp = resolve(spec, s, opts);
      cli_detail::warn_about(rp, err);
      auto e = make_enumerator(rp, enum_generic ? EnumMode::kGeneric : EnumMode::kFast);
      std::size_t emitted = 0;
      if (enum_count_only || enum_sorted) {
        std::vector<Vector> all;
        while (auto v = e->next()) {
          all.push_back(std::move(*v));
          if (enum_max != 0 && ++emitted >= enum_max) break;
        }
        if (enum_count_only) {
          out << all.size() << "\n" << std::flush;
        } else {
          std::sort(all.begin(), all.end());
          if (s.domain() != 2) out << "domain " << s.domain() << "\n";
          for (const Vector& v : all) out << v.to_string() << "\n";
          out << std::flush;
        }
      } else {
        if (s.domain() != 2) out << "domain " << s.domain() << "\n" << std::flush;
        while (auto v = e->next()) {
          out << v->to_string() << "\n" << std::flush;
          if (enum_max != 0 && ++emitted >= enum_max) break;
        }
      }
      return 0;
    }

    if (sat_cmd->parsed()) {
      const Family s = cli_detail::load_family(sat_instance, in);
      const std::vector<Operation> fs = cli_detail::load_operations(sat_ops, in);
      for (const Operation& f : fs)
        if (!s.empty_set() && f.domain() != s.domain())
          throw SpecError("operation '" + f.name() + "' domain does not match the family");
      err << "warning: saturation has no polynomial-delay guarantee and keeps "
             "the whole closure in memory\n";
      SaturationStream stream(fs, s, sat_budget);
      std::size_t emitted = 0;
      if (s.domain() != 2) out << "domain " << s.domain() << "\n" << std::flush;
      try {
        while (auto v = stream.next()) {
          out << v->to_string() << "\n" << std::flush;
          if (sat_max != 0 && ++emitted >= sat_max) break;
        }
      } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      const CloneSpec spec = parse_clone_spec(bench_clone);
      for (int rep = 0; rep < bench_reps; ++rep) {
        const BenchResult r = run_random_bench(spec, bench_n, bench_m, bench_density,
                                               bench_seed + static_cast<std::uint64_t>(rep),
                                               bench_max);
        out << "clone " << r.clone << ": n=" << r.n << " m=" << r.m << " emissions=" << r.emissions
            << " max-branch-work=" << r.max_branch_work;
        if (r.bound != 0)
          out << " bound=" << r.bound << " ratio=" << r.ratio()
              << (r.within_bound() ? " (within bound)" : " (EXCEEDS BOUND)");
        out << " wall=" << r.wall_seconds << "s\n";
        out << "  work histogram:";
        for (std::size_t k = 0; k < r.histogram.size(); ++k)
          if (r.histogram[k] != 0) out << "  <=2^" << k << ": " << r.histogram[k];
        out << "\n" << r.machine_line() << "\n" << std::flush;
      }
      return 0;
    }

    if (dnf_cmd->parsed()) {
      DnfFormula f;
      if (dnf_path.empty() || dnf_path == "-") {
        f = parse_dnf(in);
      } else {
        std::ifstream file(dnf_path);
        if (!file) throw ParseError("cannot open DNF file '" + dnf_path + "'");
        f = parse_dnf(file);
      }
      render_family(dnf_to_union_instance(f), out);
      out << std::flush;
      return 0;
    }

    if (gen_random->parsed()) {
      if (gr_d != 2) out << "domain " << gr_d << "\n";
      for (const Vector& v : random_vectors(gr_n, gr_m, gr_d, gr_density, gr_seed))
        out << v.to_string() << "\n";
      out << std::flush;
      return 0;
    }

    if (gen_hs->parsed()) {
      render_family(hitting_set_instance(parse_edge_list(hs_vertices, hs_edges)), out);
      out << std::flush;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command selected\n";
  return 2;
}

}  // namespace clenum
