// Exhaustive cross-validation of the polynomial algorithms against the
// saturation oracle on small instances: the membership decider is checked on
// every vector of the space, and both enumeration modes are checked for
// missing, extra, and duplicated emissions.  A decider override hook allows
// fault-injection tests to verify that the harness localizes a discrepancy.
#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "clenum/clones.hpp"
#include "clenum/decide.hpp"
#include "clenum/enumerate.hpp"
#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/oracle.hpp"

namespace clenum {

struct DeciderMismatch {
  Vector v;
  bool expected;
  bool got;
};

struct EquivalenceReport {
  std::size_t closure_size = 0;
  std::vector<DeciderMismatch> decider_mismatches;
  std::vector<Vector> fast_missing, fast_extra, fast_duplicates;
  std::vector<Vector> generic_missing, generic_extra, generic_duplicates;

  bool ok() const {
    return decider_mismatches.empty() && fast_missing.empty() && fast_extra.empty() &&
           fast_duplicates.empty() && generic_missing.empty() && generic_extra.empty() &&
           generic_duplicates.empty();
  }

  std::string summary() const {
    if (ok()) return "decider and both enumerators agree with the oracle";
    std::ostringstream os;
    if (!decider_mismatches.empty()) {
      const DeciderMismatch& m = decider_mismatches.front();
      os << decider_mismatches.size() << " decider mismatch(es), first on " << m.v.to_string()
         << ": oracle says " << (m.expected ? "yes" : "no") << ", decider says "
         << (m.got ? "yes" : "no") << "; ";
    }
    auto note = [&os](const char* label, const std::vector<Vector>& vs) {
      if (!vs.empty()) os << label << " " << vs.size() << ", first " << vs.front().to_string() << "; ";
    };
    note("fast enumerator missing", fast_missing);
    note("fast enumerator extra", fast_extra);
    note("fast enumerator duplicated", fast_duplicates);
    note("generic enumerator missing", generic_missing);
    note("generic enumerator extra", generic_extra);
    note("generic enumerator duplicated", generic_duplicates);
    return os.str();
  }
};

// Optional hook: receives the query vector and the honest decider answer and
// returns the answer to report (used to inject faults in tests).
using DeciderOverride = std::function<bool(const Vector&, bool)>;

inline EquivalenceReport run_equivalence_harness(const CloneSpec& spec, const Family& s,
                                                 const ResolveOptions& opts = {},
                                                 const DeciderOverride& override_fn = {}) {
  EquivalenceReport rep;
  const ResolvedProblem rp = resolve(spec, s, opts);
  const Family truth = saturate(oracle_generators(spec), s, opts.budget);
  rep.closure_size = truth.size();

  const int n = s.empty_set() ? 0 : s.n();
  const int d = s.empty_set() ? 2 : s.domain();
  std::uint64_t space = n == 0 ? 0 : 1;
  for (int i = 0; i < n; ++i) {
    space *= static_cast<std::uint64_t>(d);
    if (space > (std::uint64_t{1} << 22))
      throw SpecError("instance too large for exhaustive cross-validation");
  }

  const MembershipDecider decider(rp);
  for (std::uint64_t code = 0; code < space; ++code) {
    Vector v(n, d);
    std::uint64_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      v.set(i, static_cast<int>(rest % static_cast<std::uint64_t>(d)));
      rest /= static_cast<std::uint64_t>(d);
    }
    const bool expected = truth.contains(v);
    const bool honest = decider(v);
    const bool got = override_fn ? override_fn(v, honest) : honest;
    if (got != expected) rep.decider_mismatches.push_back({v, expected, got});
  }

  auto check_stream = [&](EnumMode mode, std::vector<Vector>& missing, std::vector<Vector>& extra,
                          std::vector<Vector>& dupes) {
    auto e = make_enumerator(rp, mode);
    Family seen = Family::empty(d);
    while (auto v = e->next()) {
      if (!seen.insert(*v)) dupes.push_back(*v);
      if (!truth.contains(*v)) extra.push_back(*v);
    }
    for (const Vector& t : truth)
      if (!seen.contains(t)) missing.push_back(t);
  };
  check_stream(EnumMode::kFast, rep.fast_missing, rep.fast_extra, rep.fast_duplicates);
  check_stream(EnumMode::kGeneric, rep.generic_missing, rep.generic_extra, rep.generic_duplicates);
  return rep;
}

}  // namespace clenum
