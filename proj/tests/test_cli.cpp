#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympbw/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sympbw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sympbw::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dim subcommand") {
  auto r = run({"dim", "--n", "2", "--lambda", "1,1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"count":16,"weyl":16,"match":true,"schema":"sympbw/1"})"));
  r = run({"dim", "--n", "2", "--lambda", "0,0"});
  CHECK(json::parse(r.out) == json::parse(R"({"count":1,"weyl":1,"match":true,"schema":"sympbw/1"})"));
}

TEST_CASE("roots and points records") {
  auto roots = json::parse(run({"roots", "--n", "2"}).out);
  REQUIRE(roots["roots"].size() == 4);
  CHECK(roots["roots"][2] == json::parse(R"({"row":1,"col":1,"barred":true})"));
  CHECK(roots["roots"][3] == json::parse(R"({"row":2,"col":2,"barred":false})"));

  auto pts = json::parse(run({"points", "--n", "2", "--lambda", "1,0"}).out);
  REQUIRE(pts["points"].size() == 4);
  std::vector<int> degs;
  for (const auto& p : pts["points"]) degs.push_back(p["deg"]);
  CHECK(degs == std::vector<int>{0, 1, 1, 1});
  CHECK(pts["points"][3] == json::parse(R"({"s":[1,0,0,0],"deg":1,"wt":[1,0]})"));
  CHECK(json::parse(run({"points", "--n", "2", "--lambda", "1,1", "--count-only"}).out)["count"] == 16);
}

TEST_CASE("paths with bounds") {
  auto doc = json::parse(run({"paths", "--n", "2", "--lambda", "1,0"}).out);
  REQUIRE(doc["paths"].size() == 4);
  CHECK(doc["paths"][1].size() == 3);
  CHECK(doc["bounds"] == json::parse("[1,1,1,0]"));
}

TEST_CASE("table outputs agree across subcommands") {
  const auto poly = json::parse(run({"graded-char", "--n", "2", "--lambda", "0,1"}).out)["table"];
  CHECK(json::parse(run({"ideal-dims", "--n", "2", "--lambda", "0,1"}).out)["table"] == poly);
  CHECK(json::parse(run({"oracle", "--n", "2", "--lambda", "0,1", "--filtration"}).out)["table"] == poly);
  auto csv = run({"graded-char", "--n", "2", "--lambda", "0,1", "--format", "csv"}).out;
  CHECK(csv.rfind("mu_1,mu_2,degree,dim\n0,0,0,1\n", 0) == 0);
  auto t = json::parse(run({"tensor", "--n", "2", "--lambda", "1,0", "--mu", "1,0"}).out);
  CHECK(t["total"] == 10);
  CHECK(t["matches_sum"] == true);
}

TEST_CASE("straighten subcommand") {
  auto doc = json::parse(run({"straighten", "--n", "2", "--lambda", "1,0", "--exponent", "0,1,0,1"}).out);
  CHECK(doc["in_polytope"] == false);
  CHECK_FALSE(doc["element"].is_null());
  CHECK(doc["element"][0]["s"] == json::parse("[0,1,0,1]"));
  const auto pts = json::parse(run({"points", "--n", "2", "--lambda", "1,0"}).out)["points"];
  for (const auto& term : doc["normal_form"]) {
    bool found = false;
    for (const auto& p : pts) found = found || p["s"] == term["s"];
    CHECK(found);
  }
  auto inside = json::parse(run({"straighten", "--n", "2", "--lambda", "1,0", "--exponent", "0,1,0,0"}).out);
  CHECK(inside["in_polytope"] == true);
  CHECK(inside["normal_form"] == json::parse(R"([{"s":[0,1,0,0],"coeff":"1"}])"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"dim", "--n", "2", "--lambda", "1"}).code == 2);
  CHECK(run({"dim", "--n", "2", "--lambda", "1,x"}).code == 2);
  CHECK(run({"dim", "--n", "2", "--lambda", "1,-1"}).code == 2);
  CHECK(run({"dim", "--n", "0", "--lambda", ""}).code == 2);
  CHECK(run({"roots", "--n", "2", "--format", "xml"}).code == 2);
  CHECK(run({"dim", "--n", "2", "--lambda", "1,0", "--format", "csv"}).code == 0);
  CHECK(run({"paths", "--n", "2", "--format", "csv"}).code == 2);
  CHECK(run({"straighten", "--n", "2", "--lambda", "1,0", "--exponent", "1,0"}).code == 2);
  CHECK(run({"oracle", "--n", "3", "--lambda", "0,0,2", "--cap", "10"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("triangle reading order") != std::string::npos);
}

TEST_CASE("verify exit codes and forced failure") {
  auto ok = run({"verify", "--suite", "all", "--max-n", "2", "--max-weight", "3"});
  CHECK(ok.code == 0);
  auto doc = json::parse(ok.out);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["summary"]["total"] == 9);

  auto bad = run({"verify", "--suite", "dimension", "--max-n", "2", "--max-weight", "2", "--inject-failure", "dimension"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["checks"][0]["status"] == "fail");
  // a corrupted suite that is not run leaves the report clean
  CHECK(run({"verify", "--suite", "order", "--max-n", "1", "--inject-failure", "dimension"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"points", "--n", "3", "--lambda", "1,0,1"},
      {"char", "--n", "3", "--lambda", "0,1,1", "--format", "csv"},
      {"ideal-dims", "--n", "2", "--lambda", "2,1", "--variant", "adjoint"},
      {"verify", "--suite", "order", "--max-n", "3", "--seed", "7"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
