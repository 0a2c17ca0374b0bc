#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "support/run_process.hpp"

using ojson = nlohmann::ordered_json;

namespace {

const std::string kBin = PELL_LAB_BIN;

ProcResult run(std::vector<std::string> args) {
  args.insert(args.begin(), kBin);
  return run_process(args);
}

}  // namespace

TEST_CASE("seq human output is exact") {
  ProcResult r = run({"seq", "E", "1", "8"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\t1\n2\t2\n3\t5\n4\t12\n5\t29\n6\t70\n7\t169\n8\t408\n");
  CHECK(r.err.empty());
}

TEST_CASE("seq csv output") {
  ProcResult r = run({"seq", "Q", "0", "4", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,value\n0,1\n1,3\n2,7\n3,17\n4,41\n");
}

TEST_CASE("seq json output round-trips") {
  ProcResult r = run({"seq", "E", "1", "8", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  ojson doc = ojson::parse(r.out);
  CHECK(doc["command"] == "seq");
  CHECK(doc["sequence"] == "E");
  CHECK(doc["rows"].size() == 8);
  CHECK(doc["rows"][3]["n"] == 4);
  CHECK(doc["rows"][3]["value"] == "12");
  // big values stay strings
  ProcResult big = run({"seq", "E", "500", "500", "--format", "json"});
  REQUIRE(big.exit_code == 0);
  ojson bigdoc = ojson::parse(big.out);
  CHECK(bigdoc["rows"][0]["value"].get<std::string>().size() == 191);
  // parse(emit(X)) == X, byte for byte
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("seq usage errors exit 2") {
  CHECK(run({"seq", "X", "1", "8"}).exit_code == 2);
  CHECK(run({"seq", "E", "5", "1"}).exit_code == 2);
  CHECK(run({"seq", "E", "-1", "3"}).exit_code == 2);
  CHECK(run({"seq", "E", "1"}).exit_code == 2);
  CHECK(run({"seq", "E", "1", "8", "--format", "yaml"}).exit_code == 2);
  ProcResult bad = run({"seq", "X", "1", "8"});
  CHECK(bad.err.find("unknown sequence tag") != std::string::npos);
}

TEST_CASE("verify small scopes pass") {
  ProcResult r = run({"verify", "numtheory", "--n-max", "40"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  ProcResult j = run({"verify", "matrices", "--n-max", "30", "--format", "json"});
  REQUIRE(j.exit_code == 0);
  ojson doc = ojson::parse(j.out);
  CHECK(doc["total_failures"] == 0);
  CHECK(doc["checks"].size() > 5);
  CHECK(doc.dump(2) + "\n" == j.out);
}

TEST_CASE("verify usage errors exit 2") {
  CHECK(run({"verify", "bogus"}).exit_code == 2);
  CHECK(run({"verify"}).exit_code == 2);
  CHECK(run({"verify", "all", "--n-max", "1"}).exit_code == 2);
}

TEST_CASE("classify is deterministic and sound") {
  ProcResult a = run({"classify", "--format", "json"});
  ProcResult b = run({"classify", "--format", "json"});
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  ojson doc = ojson::parse(a.out);
  CHECK(doc["total"] == 512);
  CHECK(doc["pell_count"] == 18);
  REQUIRE(doc["buckets"].size() == 3);
  CHECK(doc["invariants_ok"] == true);
  CHECK(doc["buckets"][1]["indices"].size() == 12);
  CHECK(doc["representatives"]["u1"]["index"] == 127);
  CHECK(doc.dump(2) + "\n" == a.out);

  ProcResult csv = run({"classify", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("bucket,char_poly,trace,det,size,orbit_count,representative") == 0);
}

TEST_CASE("sidon command") {
  ProcResult r = run({"sidon", "40", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  ojson doc = ojson::parse(r.out);
  CHECK(doc["pair_count"] == 820);
  CHECK(doc["distinct"] == true);
  CHECK(doc["first_collision"].is_null());
  CHECK(doc.dump(2) + "\n" == r.out);
  CHECK(run({"sidon", "0"}).exit_code == 2);
}

TEST_CASE("gcd command") {
  ProcResult r = run({"gcd", "9", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  ojson doc = ojson::parse(r.out);
  CHECK(doc["all_ok"] == true);
  REQUIRE(doc["rows"].size() == 8);  // n = 2..9
  CHECK(doc["rows"][3]["n"] == 5);
  CHECK(doc["rows"][3]["gcd"] == "4");
  CHECK(doc["rows"][5]["gcd"] == "7");
  CHECK(doc["rows"][7]["gcd"] == "24");
  CHECK(doc.dump(2) + "\n" == r.out);
  CHECK(run({"gcd", "2"}).exit_code == 2);
}

TEST_CASE("top-level usage") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({"seq", "--help"}).exit_code == 0);
}
