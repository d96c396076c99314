#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clenum/cli.hpp"
#include "clenum/io.hpp"

using namespace clenum;

namespace {

struct CliRun {
  int rc = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliRun r;
  r.rc = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

const std::string kWorkedInstance = "1101\n0110\n1010\n";

}  // namespace

TEST_CASE("decide answers with exit codes yes=0 no=1") {
  const CliRun yes = run({"decide", "--clone", "E2 dual", "--vector", "1110"}, kWorkedInstance);
  CHECK(yes.rc == 0);
  CHECK(yes.out == "yes\n");
  const CliRun no = run({"decide", "--clone", "D2", "--vector", "000"}, "110\n011\n101\n");
  CHECK(no.rc == 1);
  CHECK(no.out == "no\n");
  const CliRun span = run({"decide", "--clone", "L0", "--vector", "101"}, "110\n011\n");
  CHECK(span.rc == 0);
  CHECK(span.out == "yes\n");
}

TEST_CASE("decide reports errors on the diagnostic stream with exit code 2") {
  const CliRun bad_clone = run({"decide", "--clone", "Q7", "--vector", "11"}, "11\n");
  CHECK(bad_clone.rc == 2);
  CHECK(bad_clone.out.empty());
  CHECK(bad_clone.err.find("error:") != std::string::npos);
  const CliRun bad_length = run({"decide", "--clone", "E2", "--vector", "111"}, "11\n01\n");
  CHECK(bad_length.rc == 2);
  CHECK(bad_length.err.find("error:") != std::string::npos);
  const CliRun both = run({"decide", "--clone", "E2", "--ops", "x", "--vector", "1"}, "1\n");
  CHECK(both.rc == 2);
  const CliRun neither = run({"decide", "--vector", "1"}, "1\n");
  CHECK(neither.rc == 2);
}

TEST_CASE("enum streams the closure") {
  const CliRun r = run({"enum", "--clone", "E2 dual"}, kWorkedInstance);
  CHECK(r.rc == 0);
  const Family got = parse_family(r.out);
  CHECK(got.size() == 5);
  CHECK(got.same_set(Family::from_lines({"1101", "1111", "0110", "1010", "1110"})));
}

TEST_CASE("enum with no operations prints the family verbatim") {
  const CliRun r = run({"enum", "--clone", "I2"}, kWorkedInstance);
  CHECK(r.rc == 0);
  CHECK(r.out == kWorkedInstance);
}

TEST_CASE("enum count-only prints the cardinality") {
  const CliRun r = run({"enum", "--clone", "L0", "--count-only"}, "110\n011\n");
  CHECK(r.rc == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("enum sorted output is lexicographic") {
  const CliRun r = run({"enum", "--clone", "E2 dual", "--sorted"}, kWorkedInstance);
  CHECK(r.rc == 0);
  CHECK(r.out == "0110\n1010\n1101\n1110\n1111\n");
}

TEST_CASE("generic mode matches fast mode as a set") {
  const CliRun fast = run({"enum", "--clone", "M2", "--sorted"}, kWorkedInstance);
  const CliRun generic = run({"enum", "--clone", "M2", "--generic"}, kWorkedInstance);
  CHECK(fast.rc == 0);
  CHECK(generic.rc == 0);
  CHECK(parse_family(fast.out).same_set(parse_family(generic.out)));
  // the backtrack already emits in lexicographic order
  CHECK(fast.out == generic.out);
}

TEST_CASE("enum max-outputs truncates the stream") {
  const CliRun r = run({"enum", "--clone", "E2 dual", "--max-outputs", "2"}, kWorkedInstance);
  CHECK(r.rc == 0);
  CHECK(parse_family(r.out).size() == 2);
}

TEST_CASE("enum output is already closed") {
  const CliRun r = run({"enum", "--clone", "M2"}, kWorkedInstance);
  REQUIRE(r.rc == 0);
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    const CliRun check = run({"decide", "--clone", "M2", "--vector", line}, kWorkedInstance);
    REQUIRE(check.rc == 0);
  }
}

TEST_CASE("explicit truth tables route through the structure detectors") {
  std::ostringstream table;
  render_operation(ops::maj3(), table);
  const std::string path = write_temp("clenum_test_maj.txt", table.str());
  const CliRun r = run({"enum", "--ops", path, "--sorted"}, "110\n011\n101\n");
  CHECK(r.rc == 0);
  CHECK(r.err.empty());  // near-unanimity detected; no fallback warning
  CHECK(r.out == "011\n101\n110\n111\n");
}

TEST_CASE("unstructured truth tables fall back to saturation with a warning") {
  std::ostringstream table;
  render_operation(Operation("nand", 2, 2, {1, 1, 1, 0}), table);
  const std::string path = write_temp("clenum_test_nand.txt", table.str());
  const CliRun r = run({"enum", "--ops", path, "--sorted"}, "10\n");
  CHECK(r.rc == 0);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.err.find("saturation") != std::string::npos);
  CHECK(r.out == "00\n01\n10\n11\n");
}

TEST_CASE("saturate streams with a banner and honors the domain header") {
  std::ostringstream table;
  render_operation(ops::capped_sum(), table);
  const std::string path = write_temp("clenum_test_capped.txt", table.str());
  const CliRun r = run({"saturate", "--ops", path}, "domain 3\n01\n10\n");
  CHECK(r.rc == 0);
  CHECK(r.err.find("warning:") != std::string::npos);
  const Family got = parse_family(r.out);
  CHECK(got.domain() == 3);
  CHECK(got.size() == 8);
}

TEST_CASE("saturate with an empty table file echoes the family") {
  const std::string path = write_temp("clenum_test_empty.txt", "# nothing here\n");
  const CliRun r = run({"saturate", "--ops", path}, "110\n011\n");
  CHECK(r.rc == 0);
  const Family got = parse_family(r.out);
  CHECK(got.same_set(Family::from_lines({"110", "011"})));
}

TEST_CASE("saturate budget overflow yields partial output and exit 2") {
  std::ostringstream table;
  render_operation(ops::or2(), table);
  const std::string path = write_temp("clenum_test_or.txt", table.str());
  const CliRun r =
      run({"saturate", "--ops", path, "--budget", "6"}, "10000\n01000\n00100\n00010\n00001\n");
  CHECK(r.rc == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(parse_family(r.out).size() >= 5);  // the input members were flushed first
}

TEST_CASE("convert-dnf emits the union-closure instance") {
  const CliRun r = run({"convert-dnf"}, "vars 3\n1 2\n");
  CHECK(r.rc == 0);
  CHECK(r.out == "110\n111\n");
  const CliRun bad = run({"convert-dnf"}, "1 -2\n");
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("monotone") != std::string::npos);
}

TEST_CASE("gen random is reproducible byte for byte") {
  const std::vector<std::string> args = {"gen",       "random", "--n",    "5",
                                         "--m",       "3",      "--seed", "7"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.size() == 5);
    ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("gen random with density one emits all-ones rows") {
  const CliRun r = run({"gen", "random", "--n", "4", "--m", "2", "--density", "1.0"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1111\n1111\n");
}

TEST_CASE("gen random over a larger domain writes the domain header") {
  const CliRun r = run({"gen", "random", "--n", "4", "--m", "2", "--domain", "3", "--seed", "5"});
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("domain 3\n", 0) == 0);
  CHECK(parse_family(r.out).domain() == 3);
}

TEST_CASE("gen hittingset emits complemented characteristic vectors") {
  const CliRun r = run({"gen", "hittingset", "--vertices", "3", "--edges", "1,2;2,3"});
  CHECK(r.rc == 0);
  CHECK(r.out == "001\n100\n");
  const CliRun bad = run({"gen", "hittingset", "--vertices", "2", "--edges", "9"});
  CHECK(bad.rc == 2);
}

TEST_CASE("help exits zero and usage errors exit two") {
  const CliRun help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("decide") != std::string::npos);
  const CliRun none = run({});
  CHECK(none.rc == 2);
  const CliRun unknown = run({"frobnicate"});
  CHECK(unknown.rc == 2);
}

TEST_CASE("piped instances read from standard input with a file dash") {
  const CliRun r = run({"enum", "--clone", "L0", "--count-only", "-"}, "110\n011\n");
  CHECK(r.rc == 0);
  CHECK(r.out == "4\n");
}
