#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "valsg/cli.hpp"

using namespace valsg;

TEST_CASE("dispatch examples") {
  CliOutcome b = run_cli({"skp", "betas", "--count", "5"});
  CHECK(b.exit_code == 0);
  CHECK(b.report["result"] == json::parse(R"(["1","5/2","21/4","85/8","341/16"])"));
  CHECK(b.report["schema_version"] == "1");
  CHECK(b.report["command"] == "skp betas");
  CHECK(b.report["config"]["count"] == "5");
  CHECK(!b.report["paper_ref"].get<std::string>().empty());

  CHECK(run_cli({"semigroup", "plane-check", "--gens", "4,6,13"}).report["result"]["verdict"] == true);
  CHECK(run_cli({"fatpoints", "dim", "--d", "4", "--n", "1", "--r", "16", "--seed", "1"}).report["result"]["dim"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).exit_code == 1);
  CHECK(run_cli({"skp"}).exit_code == 1);
  CHECK(run_cli({"skp", "betas", "--count", "x"}).exit_code == 1);
  CliOutcome bad = run_cli({"composite", "value", "--poly", "u + (v"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.report["error_kind"] == "parse");
  CHECK(bad.report["error"].get<std::string>().find("position") != std::string::npos);
  CHECK(run_cli({"semigroup", "enumerate", "--rule", "nonsense:1", "--bound", "3"}).exit_code == 1);
  // the default example fails at i = 4: exit 2 is a property violation, not a usage error
  CHECK(run_cli({"z2", "build", "--depth", "5"}).exit_code == 2);
  CHECK(run_cli({"z2", "build", "--a-rule", "triangular", "--lambda-rule", "alternating", "--depth", "6"}).exit_code == 0);
  CliOutcome help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.report.is_null());
  CHECK(help.summary.find("fatpoints") != std::string::npos);
}

TEST_CASE("same config gives byte-identical reports") {
  const std::vector<std::string> args{"composite", "slice", "--level", "2", "--seed", "4"};
  CHECK(run_cli(args).report.dump() == run_cli(args).report.dump());
  const std::vector<std::string> t{"transcend", "build", "--depth", "3", "--spot-checks", "5"};
  CHECK(run_cli(t).report.dump() == run_cli(t).report.dump());
}

TEST_CASE("environment overrides") {
  setenv("VALSG_SEED", "77", 1);
  setenv("VALSG_PRECISION", "8", 1);
  CliOutcome o = run_cli({"transcend", "build", "--depth", "2", "--spot-checks", "3"});
  unsetenv("VALSG_SEED");
  unsetenv("VALSG_PRECISION");
  CHECK(o.report["config"]["seed"] == "77");
  CHECK(o.report["config"]["precision"] == "8");
  CHECK(o.report["result"]["state"]["precision"] == "8");
  // a flag beats the environment
  setenv("VALSG_SEED", "77", 1);
  CliOutcome f = run_cli({"--seed", "3", "skp", "betas"});
  unsetenv("VALSG_SEED");
  CHECK(f.report["config"]["seed"] == "3");
}

TEST_CASE("global options after the subcommand") {
  CliOutcome o = run_cli({"fatpoints", "dim", "--d", "2", "--n", "1", "--r", "5", "--seed", "9", "--field", "q"});
  CHECK(o.exit_code == 0);
  CHECK(o.report["config"]["seed"] == "9");
  CHECK(o.report["result"]["dim"] == 1);
}

TEST_CASE("json-out is recorded and excluded from the config echo") {
  CliOutcome o = run_cli({"skp", "betas", "--json-out", "/tmp/valsg_cli_test.json"});
  CHECK(o.json_out == "/tmp/valsg_cli_test.json");
  CHECK_FALSE(o.report["config"].contains("json-out"));
}

TEST_CASE("test-vector corpus passes") {
  CorpusReport r = corpus_run_file(VALSG_CORPUS);
  for (const auto& f : r.failures) INFO(f);
  CHECK(r.ok());
  CHECK(r.total >= 30);
  CHECK(r.passed == r.total);
}

TEST_CASE("corrupted corpus reports the diff") {
  std::ifstream f(VALSG_CORPUS);
  json corpus = json::parse(f);
  corpus["vectors"][0]["checks"][0]["expect"][1] = "7/3";
  CorpusReport r = corpus_run(corpus);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].find("7/3") != std::string::npos);
  CHECK(r.failures[0].find("5/2") != std::string::npos);
}

TEST_CASE("empty corpus passes with a warning") {
  CorpusReport r = corpus_run(json{{"vectors", json::array()}});
  CHECK(r.ok());
  CHECK(r.warnings.size() == 1);
}
