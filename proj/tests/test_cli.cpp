#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/json_io.hpp"

using namespace khtot;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "khtot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& content) {
  char name[] = "/tmp/khtot_cli_XXXXXX";
  const int fd = mkstemp(name);
  REQUIRE(fd >= 0);
  std::ofstream(name) << content;
  return name;
}

}  // namespace

TEST_CASE("homology of the trefoil with the bracket cross-check") {
  const auto r = run_cli({"homology", "--fixture", "trefoil"});
  CHECK(r.code == 0);
  CHECK(r.out.find("euler vs bracket: match") != std::string::npos);
  const auto j = run_cli({"homology", "--fixture", "trefoil", "--json"});
  CHECK(j.code == 0);
  const auto parsed = Json::parse(j.out);
  CHECK(parsed["bracket_check"]["match"] == true);
  int total = 0;
  for (const auto& row : parsed["table"]) total += row["rank"].get<int>();
  CHECK(total == 6);
}

TEST_CASE("uniqueness dim2") {
  const auto r = run_cli({"uniqueness", "--scope", "dim2"});
  CHECK(r.code == 0);
  const auto j = Json::parse(run_cli({"uniqueness", "--scope", "dim2", "--json"}).out);
  CHECK(j["pass"] == true);
  std::vector<int> dims;
  for (const auto& e : j["entries"]) dims.push_back(e["dim"]);
  CHECK(dims == std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0});
}

TEST_CASE("uniqueness with a rule subset that does not pin the answer exits 1") {
  CHECK(run_cli({"uniqueness", "--scope", "dim2", "--rules", "duality,naturality"}).code == 1);
  CHECK(run_cli({"uniqueness", "--scope", "dim2", "--rules", "bogus"}).code == 2);
}

TEST_CASE("identities") {
  const auto r = run_cli({"identities", "--fixture", "figure4", "--n", "3", "--which", "h1h2"});
  CHECK(r.code == 0);
  const auto j = Json::parse(
      run_cli({"identities", "--fixture", "figure4", "--n", "3", "--which", "h1h2", "--json"}).out);
  CHECK(j["status"] == "pass");
  CHECK(run_cli({"identities", "--fixture", "trefoil", "--which", "nope"}).code == 2);
  // guard rail and override
  CHECK(run_cli({"identities", "--fixture", "figure4", "--n", "8", "--which", "d1_squared"}).code == 2);
}

TEST_CASE("lemma") {
  CHECK(run_cli({"lemma", "--fixture", "figure4", "--n", "3"}).code == 0);
  CHECK(run_cli({"lemma", "--fixture", "figure5", "--k", "2", "--l", "1"}).code == 0);
  const auto j = Json::parse(run_cli({"lemma", "--fixture", "figure6", "--k", "1", "--l", "1", "--json"}).out);
  CHECK(j["status"] == "pass");
  CHECK(run_cli({"lemma", "--fixture", "figure4", "--n", "1"}).code == 2);
}

TEST_CASE("catalog and dualize") {
  const auto r = run_cli({"catalog", "--samples", "50", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("50/50 pass") != std::string::npos);
  const auto j = Json::parse(run_cli({"catalog", "--json"}).out);
  CHECK(j["entries"].size() == 8);
  CHECK(j["entries"][1]["dual"] == 4);
  const auto d = Json::parse(run_cli({"dualize", "--fixture", "catalog2", "--index", "7", "--json"}).out);
  CHECK(d["self_dual"] == true);
  CHECK(d["involutive"] == true);
  CHECK(run_cli({"dualize", "--fixture", "trefoil"}).code == 2);
}

TEST_CASE("parse and inputs") {
  CHECK(run_cli({"parse", "--pd", "X(1,2,2,1)"}).code == 0);
  const auto bad = run_cli({"parse", "--pd", "X(1,2,3)"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run_cli({"parse"}).code == 2);
  CHECK(run_cli({"parse", "--pd", "U", "--fixture", "trefoil"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"parse", "--file", "/nonexistent/file.json"}).code == 2);

  const auto path = temp_file(to_json(catalog2_entry(5)).dump());
  const auto j = Json::parse(run_cli({"parse", "--file", path, "--json"}).out);
  CHECK(j["ending"] == 3);
  CHECK(configuration_from_json(j["configuration"]) == catalog2_entry(5));
  const auto dpath = temp_file(to_json(named_knot("hopf")).dump());
  CHECK(run_cli({"homology", "--file", dpath}).code == 0);
  std::remove(path.c_str());
  std::remove(dpath.c_str());
}

TEST_CASE("text and JSON verdicts agree") {
  const std::vector<std::vector<std::string>> cases{
      {"homology", "--fixture", "figure_eight"},
      {"identities", "--fixture", "figure5", "--k", "1", "--l", "1"},
      {"uniqueness", "--scope", "trees_up_to", "--n", "2"},
      {"uniqueness", "--scope", "dim2", "--rules", "naturality"},
      {"lemma", "--fixture", "figure6", "--k", "2", "--l", "1"},
      {"dualize", "--fixture", "catalog2", "--index", "3"},
  };
  for (auto args : cases) {
    const int text = run_cli(args).code;
    args.push_back("--json");
    const auto j = run_cli(args);
    CHECK(text == j.code);
    CHECK_NOTHROW(static_cast<void>(Json::parse(j.out)));
  }
}

TEST_CASE("custom uniqueness from a file") {
  const auto path = temp_file(to_json(catalog2_entry(3)).dump());
  const auto r = run_cli({"uniqueness", "--scope", "custom", "--file", path, "--json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["entries"][0]["dim"] == 1);
  CHECK(run_cli({"uniqueness", "--scope", "custom", "--file", path, "--q", "6"}).code == 0);
  std::remove(path.c_str());
}
