#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "clenum/harness.hpp"

using namespace clenum;

namespace {

Vector vec(const std::string& s, int d = 2) { return Vector::from_string(s, d); }

Family fam(std::initializer_list<const char*> rows, int d = 2) {
  Family f = Family::empty(d);
  for (const char* r : rows) f.insert(vec(r, d));
  return f;
}

}  // namespace

TEST_CASE("equivalence harness passes on healthy instances") {
  const Family s = fam({"1101", "0110", "1010"});
  for (const char* text : {"E2 dual", "E2", "M2", "L0", "D2", "R2", "I2", "S10", "S12^2"}) {
    const EquivalenceReport report = run_equivalence_harness(parse_clone_spec(text), s);
    INFO(text << ": " << report.summary());
    CHECK(report.ok());
  }
}

TEST_CASE("equivalence harness reports closure size") {
  const EquivalenceReport report =
      run_equivalence_harness(parse_clone_spec("E2 dual"), fam({"1101", "0110", "1010"}));
  CHECK(report.closure_size == 5);
  CHECK(report.summary() == "decider and both enumerators agree with the oracle");
}

TEST_CASE("equivalence harness catches a decider that wrongly accepts") {
  const Family s = fam({"110", "010"});
  const Vector target = vec("111");
  DeciderOverride lie = [&](const Vector& query, bool honest) {
    return query == target ? true : honest;
  };
  const EquivalenceReport report =
      run_equivalence_harness(parse_clone_spec("E2"), s, ResolveOptions{}, lie);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.decider_mismatches.size() == 1);
  CHECK(report.decider_mismatches[0].v == target);
  CHECK(report.decider_mismatches[0].got);
  CHECK_FALSE(report.decider_mismatches[0].expected);
  CHECK(report.summary().find("111") != std::string::npos);
}

TEST_CASE("equivalence harness catches a decider that wrongly rejects") {
  const Family s = fam({"110", "011"});
  const Vector member = vec("010");  // the meet, present in the lattice closure
  DeciderOverride lie = [&](const Vector& query, bool honest) {
    return query == member ? false : honest;
  };
  const EquivalenceReport report =
      run_equivalence_harness(parse_clone_spec("M2"), s, ResolveOptions{}, lie);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.decider_mismatches.size() == 1);
  CHECK(report.decider_mismatches[0].v == member);
  CHECK(report.decider_mismatches[0].expected);
  CHECK_FALSE(report.decider_mismatches[0].got);
}

TEST_CASE("equivalence harness handles empty families") {
  const EquivalenceReport report = run_equivalence_harness(parse_clone_spec("E2"), Family::empty(2));
  CHECK(report.ok());
  CHECK(report.closure_size == 0);
}

TEST_CASE("equivalence harness rejects oversized query spaces") {
  Family s = Family::empty(2);
  Vector wide(40, 2);
  wide.set(0, 1);
  s.insert(wide);
  CHECK_THROWS_AS(run_equivalence_harness(parse_clone_spec("E2"), s), SpecError);
}
