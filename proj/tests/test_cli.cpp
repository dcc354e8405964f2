#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lehmus/cli.hpp"

using lehmus::cli::run_cli;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("logic equiv prints a verdict and exits accordingly") {
  const CliResult yes = invoke({"logic", "equiv", "p->q", "~q->~p"});
  CHECK(yes.exit_code == 0);
  CHECK(contains(yes.out, "EQUIVALENT"));

  const CliResult no = invoke({"logic", "equiv", "p->q", "q->p"});
  CHECK(no.exit_code == 1);
  CHECK(contains(no.out, "NOT EQUIVALENT"));
}

TEST_CASE("logic table prints the canonical table") {
  const CliResult result = invoke({"logic", "table", "p -> q"});
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "p q | p -> q\n"
        "F F | T\n"
        "F T | T\n"
        "T F | F\n"
        "T T | T\n");
}

TEST_CASE("logic catalog verifies every law") {
  const CliResult result = invoke({"logic", "catalog"});
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "laws verified"));
  CHECK(!contains(result.out, "FAIL"));
}

TEST_CASE("malformed formulas yield usage errors with a position") {
  const CliResult result = invoke({"logic", "table", "p & | q"});
  CHECK(result.exit_code == 2);
  CHECK(contains(result.err, "position 4"));
}

TEST_CASE("geom bisectors prints exact rational data") {
  const CliResult result = invoke({"geom", "bisectors", "4", "5", "6"});
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "alpha = 6/11"));
  CHECK(contains(result.out, "beta = 3/5"));
  CHECK(contains(result.out, "AA1^2 = 3150/121"));
  CHECK(contains(result.out, "BB1^2 = 18"));
  CHECK(contains(result.out, "alpha - beta = -3/55"));
  CHECK(contains(result.out, "= +"));
  // Exact mode never prints floating point.
  CHECK(!contains(result.out, "."));
}

TEST_CASE("geom bisectors rejects degenerate sides with exit 2") {
  const CliResult result = invoke({"geom", "bisectors", "1", "2", "3"});
  CHECK(result.exit_code == 2);
  CHECK(contains(result.err, "degenerate"));
}

TEST_CASE("geom identity reports the exact identity") {
  const CliResult result = invoke({"geom", "identity", "4", "5", "6"});
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "Y = 162/121"));
  CHECK(contains(result.out, "IDENTITY HOLDS"));

  const CliResult equilateral = invoke({"geom", "identity", "1", "1", "1"});
  CHECK(equilateral.exit_code == 0);
  CHECK(contains(equilateral.out, "Y = 3/2"));
}

TEST_CASE("geom identity accepts rational side strings") {
  const CliResult result = invoke({"geom", "identity", "9/2", "5", "23/4"});
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "IDENTITY HOLDS"));
}

TEST_CASE("geom construct checks a scene and can dump it") {
  const CliResult checks = invoke({"geom", "construct", "0,0", "4,0", "2,3"});
  CHECK(checks.exit_code == 0);
  CHECK(contains(checks.out, "PASS power of a point"));
  CHECK(contains(checks.out, "congruence conclusion"));

  const CliResult dump =
      invoke({"geom", "construct", "0,0", "4,0", "2,3", "--dump-scene"});
  CHECK(dump.exit_code == 0);
  const auto scene = nlohmann::json::parse(dump.out);
  for (const char* key : {"A", "B", "C", "A1", "B1", "J", "H", "G", "K", "M", "N", "L",
                          "k1", "k2", "gamma", "d", "x", "y"}) {
    CHECK(scene.contains(key));
  }

  const CliResult scalene = invoke({"geom", "construct", "0,0", "5,0", "1,3"});
  CHECK(scalene.exit_code == 0);
  CHECK(contains(scalene.out, "congruence conclusion skipped"));

  const CliResult collinear = invoke({"geom", "construct", "0,0", "1,0", "2,0"});
  CHECK(collinear.exit_code == 2);

  const CliResult bad_point = invoke({"geom", "construct", "0,0", "4,0", "abc"});
  CHECK(bad_point.exit_code == 2);
}

TEST_CASE("verify writes a deterministic JSON report") {
  const std::string path_a = "cli_report_a.json";
  const std::string path_b = "cli_report_b.json";

  const CliResult first =
      invoke({"verify", "--seed", "7", "--count", "5", "--json", path_a});
  CHECK(first.exit_code == 0);
  CHECK(contains(first.out, "checks passed"));

  const CliResult second =
      invoke({"verify", "--seed", "7", "--count", "5", "--json", path_b});
  CHECK(second.exit_code == 0);

  const std::string bytes_a = read_file(path_a);
  const std::string bytes_b = read_file(path_b);
  REQUIRE(!bytes_a.empty());
  CHECK(bytes_a == bytes_b);

  const auto parsed = nlohmann::json::parse(bytes_a);
  CHECK(parsed.at("seed") == 7);
  CHECK(parsed.at("summary").at("failed") == 0);

  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).exit_code == 2);
  CHECK(invoke({"nonsense"}).exit_code == 2);
  CHECK(invoke({"logic"}).exit_code == 2);
  CHECK(invoke({"geom", "bisectors", "4", "5"}).exit_code == 2);
  CHECK(invoke({"verify", "--shape", "weird"}).exit_code == 2);
  CHECK(invoke({"verify", "--count", "0"}).exit_code == 2);
}
