// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned in code: worked example < 1 s, full equivalence
// sweep < 10 min, counter/bound ratio <= 4.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clenum/bench.hpp"
#include "clenum/clones.hpp"
#include "clenum/decide.hpp"
#include "clenum/enumerate.hpp"
#include "clenum/generators.hpp"
#include "clenum/harness.hpp"
#include "clenum/multidomain.hpp"
#include "clenum/oracle.hpp"

using namespace clenum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Family random_family(int n, int m, int d, std::mt19937_64& rng) {
  Family f = Family::empty(d);
  for (int t = 0; t < m; ++t) {
    Vector v(n, d);
    for (int i = 0; i < n; ++i) v.set(i, static_cast<int>(rng() % static_cast<std::uint64_t>(d)));
    f.insert(v);
  }
  return f;
}

// Runs fn on every vector of {0,...,d-1}^n.
void for_each_candidate(int n, int d, const std::function<void(const Vector&)>& fn) {
  Vector v(n, d);
  while (true) {
    fn(v);
    int i = n - 1;
    while (i >= 0 && v.get(i) == d - 1) {
      v.set(i, 0);
      --i;
    }
    if (i < 0) return;
    v.set(i, v.get(i) + 1);
  }
}

// All modifier combinations that are legal for the base.
std::vector<std::string> legal_modifier_stacks(const std::string& base) {
  static const std::set<std::string> self_dual = {"I2", "L2", "D2", "D1", "M2"};
  const bool neg_ok = self_dual.count(base) > 0;
  std::vector<std::string> out;
  for (int dual = 0; dual < 2; ++dual)
    for (int c0 = 0; c0 < 2; ++c0)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int neg = 0; neg < (neg_ok ? 2 : 1); ++neg) {
          std::string text = base;
          if (dual) text += " dual";
          if (c0) text += " +0";
          if (c1) text += " +1";
          if (neg) text += " +neg";
          out.push_back(text);
        }
  return out;
}

// Independent GF(2) rank: dense elimination over int matrices, sharing no code
// with the library's bit-packed eliminator.
int dense_gf2_rank(const Family& s) {
  std::vector<std::vector<int>> rows;
  for (const Vector& v : s) {
    std::vector<int> row(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) row[static_cast<std::size_t>(i)] = v.get(i);
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != row && rows[r][col] == 1)
        for (std::size_t c = 0; c < n; ++c) rows[r][c] ^= rows[row][c];
    ++row;
    ++rank;
  }
  return rank;
}

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;  // fills a detail message
};

// --- criterion 1 ----------------------------------------------------------------

bool criterion1(std::string& detail) {
  const auto start = Clock::now();
  const Family s = Family::from_lines({"1101", "0110", "1010"});
  auto e = make_enumerator(resolve(parse_clone_spec("E2 dual"), s), EnumMode::kFast);
  Family got = Family::empty(2);
  while (auto v = e->next()) {
    if (!got.insert(*v)) {
      detail = "duplicate emission " + v->to_string();
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  const Family expected = Family::from_lines({"1101", "1111", "0110", "1010", "1110"});
  if (!got.same_set(expected)) {
    detail = "emitted set differs from the expected five vectors";
    return false;
  }
  if (elapsed >= 1.0) {
    detail = "took " + std::to_string(elapsed) + " s (limit 1 s)";
    return false;
  }
  std::ostringstream msg;
  msg << "5 vectors in " << elapsed << " s";
  detail = msg.str();
  return true;
}

// --- criterion 2 ----------------------------------------------------------------

const std::vector<std::string> kBases = {"I2",  "L2",    "L0",    "E2", "S10",
                                         "S10^2", "S10^3", "S12", "S12^2", "S12^3",
                                         "D2",  "D1",    "M2",    "R2", "R0"};

bool criterion2(std::string& detail) {
  const auto start = Clock::now();
  std::uint64_t runs = 0;
  for (const std::string& base : kBases) {
    for (const std::string& text : legal_modifier_stacks(base)) {
      const CloneSpec spec = parse_clone_spec(text);
      // exhaustive families: every subset of {0,1}^n with 1..3 members, n <= 4
      for (int n = 1; n <= 4; ++n) {
        const int space = 1 << n;
        for (int m = 1; m <= 3 && m <= space; ++m) {
          std::vector<int> idx(static_cast<std::size_t>(m));
          for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
          while (true) {
            Family s = Family::empty(2);
            for (int i : idx) {
              Vector v(n, 2);
              for (int b = 0; b < n; ++b) v.set(b, (i >> b) & 1);
              s.insert(v);
            }
            const EquivalenceReport report = run_equivalence_harness(spec, s);
            ++runs;
            if (!report.ok()) {
              detail = text + " on an exhaustive family (n=" + std::to_string(n) +
                       "): " + report.summary();
              return false;
            }
            int pos = m - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == space - m + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < m; ++j)
              idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
          }
        }
      }
      // 200 seeded random families, n <= 6, m <= 4
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(seed * 7919 + std::hash<std::string>{}(text));
        const int n = 1 + static_cast<int>(rng() % 6);
        const int m = 1 + static_cast<int>(rng() % 4);
        const Family s = random_family(n, m, 2, rng);
        const EquivalenceReport report = run_equivalence_harness(spec, s);
        ++runs;
        if (!report.ok()) {
          detail = text + " on seed " + std::to_string(seed) + ": " + report.summary();
          return false;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 600.0) {
    detail = "sweep took " + std::to_string(elapsed) + " s (limit 600 s)";
    return false;
  }
  std::ostringstream msg;
  msg << runs << " harness runs, zero mismatches, " << elapsed << " s";
  detail = msg.str();
  return true;
}

// --- criterion 3 ----------------------------------------------------------------

bool criterion3(std::string& detail) {
  const double kMaxRatio = 4.0;
  std::ostringstream msg;
  for (const char* clone : {"E2", "L0", "M2", "D2"}) {
    const CloneSpec spec = parse_clone_spec(clone);
    double worst_ratio = 0.0;
    for (int n : {32, 64, 128}) {
      const int m = n / 2;
      const BenchResult r = run_random_bench(spec, n, m, 0.5,
                                             10007 + static_cast<std::uint64_t>(n), 20000);
      if (r.bound == 0) {
        detail = std::string(clone) + ": no pinned bound";
        return false;
      }
      if (!r.within_bound()) {
        detail = std::string(clone) + " n=" + std::to_string(n) + ": max counter " +
                 std::to_string(r.max_branch_work) + " exceeds bound " + std::to_string(r.bound);
        return false;
      }
      if (r.ratio() > kMaxRatio) {
        detail = std::string(clone) + " n=" + std::to_string(n) + ": ratio " +
                 std::to_string(r.ratio()) + " > " + std::to_string(kMaxRatio);
        return false;
      }
      if (r.ratio() > worst_ratio) worst_ratio = r.ratio();
    }
    msg << clone << " ratio<=" << worst_ratio << "  ";
  }
  detail = msg.str();
  return true;
}

// --- criterion 4 ----------------------------------------------------------------

bool criterion4(std::string& detail) {
  std::mt19937_64 rng(40424);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % 6);
    const Family s = random_family(n, m, 2, rng);
    const int rank = dense_gf2_rank(s);
    auto e = make_enumerator(resolve(parse_clone_spec("L0"), s), EnumMode::kFast);
    const Gf2Eliminator elim(s);
    Family basis = Family::empty(2);
    for (const Vector& b : elim.basis()) basis.insert(b);
    Family got = Family::empty(2);
    std::optional<Vector> prev;
    while (auto v = e->next()) {
      if (!got.insert(*v)) {
        detail = "duplicate emission on trial " + std::to_string(trial);
        return false;
      }
      if (prev) {
        Vector diff = *v;
        diff.xor_with(*prev);
        if (!basis.contains(diff)) {
          detail = "consecutive emissions differ by a non-basis vector on trial " +
                   std::to_string(trial);
          return false;
        }
      }
      prev = *v;
    }
    if (got.size() != (std::size_t{1} << rank)) {
      detail = "trial " + std::to_string(trial) + ": " + std::to_string(got.size()) +
               " emitted, expected 2^" + std::to_string(rank);
      return false;
    }
  }
  detail = "100 instances, cardinality 2^rank, Gray steps verified";
  return true;
}

// --- criterion 5 ----------------------------------------------------------------

bool criterion5(std::string& detail) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed * 31 + 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 4);
    const Family s = random_family(n, m, 3, rng);
    const NuDecider decide({ops::dual_discriminator(3)}, 2, s);
    const Family oracle = saturate({ops::dual_discriminator(3)}, s);
    bool ok = true;
    std::string which;
    for_each_candidate(n, 3, [&](const Vector& v) {
      if (decide(v) != oracle.contains(v)) {
        ok = false;
        which = v.to_string();
      }
    });
    if (!ok) {
      detail = "seed " + std::to_string(seed) + ": mismatch at " + which;
      return false;
    }
  }
  detail = "200 seeds, all 3^n candidates agree";
  return true;
}

// --- criterion 6 ----------------------------------------------------------------

bool criterion6(std::string& detail) {
  for (int d : {4, 6}) {
    const Operation op = ops::mod_add(d);
    const CloneSpec spec = CloneSpec::from_operations({op});
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      std::mt19937_64 rng(seed * 131 + static_cast<std::uint64_t>(d));
      const int n = 1 + static_cast<int>(rng() % 4);
      const int m = 1 + static_cast<int>(rng() % 3);
      const Family s = random_family(n, m, d, rng);
      const ResolvedProblem rp = resolve(spec, s);
      const MembershipDecider decide(rp);
      const Family oracle = saturate({op}, s);
      bool ok = true;
      std::string which;
      for_each_candidate(n, d, [&](const Vector& v) {
        if (decide(v) != oracle.contains(v)) {
          ok = false;
          which = v.to_string();
        }
      });
      if (!ok) {
        detail = "mod " + std::to_string(d) + " seed " + std::to_string(seed) +
                 ": decider mismatch at " + which;
        return false;
      }
      // enumerate the closure and check the group properties
      auto e = make_enumerator(rp, EnumMode::kGeneric);
      Family closure = Family::empty(d);
      while (auto v = e->next()) closure.insert(*v);
      Vector identity(n, d);  // the all-zero vector
      if (!closure.contains(identity)) {
        detail = "mod " + std::to_string(d) + " seed " + std::to_string(seed) +
                 ": closure misses the identity vector";
        return false;
      }
      const std::size_t limit = 100;
      if (closure.size() <= limit) {
        for (const Vector& u : closure)
          for (const Vector& w : closure)
            if (!closure.contains(apply_op(op, {u, w}))) {
              detail = "mod " + std::to_string(d) + ": closure not closed under the operation";
              return false;
            }
      } else {
        for (int t = 0; t < 1000; ++t) {
          const Vector& u = closure.at(rng() % closure.size());
          const Vector& w = closure.at(rng() % closure.size());
          if (!closure.contains(apply_op(op, {u, w}))) {
            detail = "mod " + std::to_string(d) + ": closure not closed under the operation";
            return false;
          }
        }
      }
    }
  }
  detail = "mod 4 and mod 6, 200 seeds each: decider = oracle, closures are subgroups";
  return true;
}

// --- criterion 7 ----------------------------------------------------------------

bool criterion7(std::string& detail) {
  {
    Family s = Family::empty(3);
    s.insert(Vector::from_string("01", 3));
    s.insert(Vector::from_string("10", 3));
    AssociativeDfsEnumerator e(ops::capped_sum(), s);
    Family got = Family::empty(3);
    while (auto v = e.next())
      if (!got.insert(*v)) {
        detail = "duplicate emission on the worked instance";
        return false;
      }
    if (got.size() != 8) {
      detail = "worked instance emitted " + std::to_string(got.size()) + " vectors, expected 8";
      return false;
    }
  }
  std::uint64_t emissions = 0;
  std::mt19937_64 rng(777);
  int instances = 0;
  while (emissions < 10000 && instances < 5000) {
    ++instances;
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 3);
    const Family s = random_family(n, m, 3, rng);
    if (s.empty_set()) continue;
    AssociativeDfsEnumerator e(ops::capped_sum(), s);
    Family got = Family::empty(3);
    while (auto v = e.next()) {
      if (!got.insert(*v)) {
        detail = "duplicate emission on instance " + std::to_string(instances);
        return false;
      }
      ++emissions;
    }
    if (!got.same_set(saturate({ops::capped_sum()}, s))) {
      detail = "instance " + std::to_string(instances) + ": emitted set differs from saturation";
      return false;
    }
  }
  if (emissions < 10000) {
    detail = "only " + std::to_string(emissions) + " emissions accumulated";
    return false;
  }
  detail = std::to_string(emissions) + " duplicate-free emissions across " +
           std::to_string(instances) + " instances, all equal to saturation";
  return true;
}

// --- criterion 8 ----------------------------------------------------------------

bool criterion8(std::string& detail) {
  std::mt19937_64 rng(88888);
  for (int trial = 0; trial < 100; ++trial) {
    const int vars = 2 + static_cast<int>(rng() % 5);
    const int clauses = 1 + static_cast<int>(rng() % 4);
    DnfFormula f;
    f.variables = vars;
    for (int c = 0; c < clauses; ++c) {
      std::vector<int> clause;
      for (int v = 0; v < vars; ++v)
        if (rng() & 1) clause.push_back(v);
      if (clause.empty())
        clause.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(vars)));
      f.clauses.push_back(std::move(clause));
    }
    const Family instance = dnf_to_union_instance(f);
    const std::size_t closure = saturate({ops::or2()}, instance).size();
    const std::uint64_t models = count_dnf_models(f);
    if (closure != models) {
      detail = "trial " + std::to_string(trial) + ": closure " + std::to_string(closure) +
               " vs " + std::to_string(models) + " models";
      return false;
    }
  }
  detail = "100 formulas, union-closure cardinality equals the model count";
  return true;
}

// --- criterion 9 ----------------------------------------------------------------

bool criterion9(std::string& detail) {
  std::uint64_t instances = 0;
  for (const std::string& base : kBases) {
    for (const std::string& text : legal_modifier_stacks(base)) {
      const CloneSpec spec = parse_clone_spec(text);
      std::mt19937_64 rng(std::hash<std::string>{}(text) ^ 99u);
      for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int m = 1 + static_cast<int>(rng() % 4);
        const Family s = random_family(n, m, 2, rng);
        auto e = make_enumerator(resolve(spec, s), EnumMode::kGeneric);
        std::uint64_t solutions = 0;
        while (auto v = e->next()) ++solutions;
        ++instances;
        if (e->nodes_visited() > static_cast<std::uint64_t>(n) * solutions + 1) {
          detail = text + " visited " + std::to_string(e->nodes_visited()) + " nodes for " +
                   std::to_string(solutions) + " solutions at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  detail = std::to_string(instances) + " instances, nodes <= n*solutions + 1 everywhere";
  return true;
}

// --- criterion 10 ---------------------------------------------------------------

bool criterion10(std::string& detail) {
  std::mt19937_64 rng(101010);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = random_hypergraph(6, rng);
    const Family s = hitting_set_instance(h);
    Vector ones(h.vertices, 2);
    for (int i = 0; i < h.vertices; ++i) ones.set(i, 1);
    for (int k = 2; k <= 3; ++k) {
      const CloneSpec spec = parse_clone_spec("S10^" + std::to_string(k));
      const MembershipDecider decide(resolve(spec, s));
      const bool in_closure = decide(ones);
      const bool transversal = has_transversal(h, k);
      if (in_closure != !transversal) {
        detail = "trial " + std::to_string(trial) + " k=" + std::to_string(k) +
                 ": membership " + (in_closure ? "yes" : "no") + " but transversal " +
                 (transversal ? "exists" : "does not exist");
        return false;
      }
    }
  }
  detail = "50 hypergraphs, membership complements transversal existence at k=2,3";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example: union closure of {1101,0110,1010}", criterion1},
      {2, "oracle equivalence sweep over all bases and modifiers", criterion2},
      {3, "delay counters within their bounds at n=32,64,128", criterion3},
      {4, "linear span: 2^rank cardinality and Gray steps", criterion4},
      {5, "dual discriminator over d=3 agrees with saturation", criterion5},
      {6, "commutative groups mod 4 and mod 6", criterion6},
      {7, "associative DFS: exact sets, no duplicates", criterion7},
      {8, "monotone DNF conversion is parsimonious", criterion8},
      {9, "backtrack visits no dead branches", criterion9},
      {10, "hitting-set instances match transversal search", criterion10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.number << ": " << c.name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n" << std::flush;
  }
  if (failures != 0) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
