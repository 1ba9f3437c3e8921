#include <cstdlib>
#include <sstream>

#include "doctest.h"

#include "endslab/cli.hpp"
#include "endslab/export.hpp"

using namespace endslab;

namespace {
  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  // Keeps ENDSLAB_BUDGET scoped to one test case.
  struct BudgetEnv {
    explicit BudgetEnv(char const* value) {
      setenv("ENDSLAB_BUDGET", value, 1);
    }
    ~BudgetEnv() {
      unsetenv("ENDSLAB_BUDGET");
    }
  };
}  // namespace

TEST_CASE("ends of Z through the CLI") {
  auto r = run({"ends", "--spec", "Z", "--k", "1..4", "--K", "12"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["verdict"] == "STABLE(2)");
  CHECK(j["truncated"] == false);
  CHECK(j["matrix"].size() == 4);
}

TEST_CASE("verify subcommands") {
  CHECK(run({"verify", "leaf-disconnect", "--spec", "wreath(C(3), C(2), regular)"}).code == 0);
  CHECK(run({"verify", "leaf-disconnect", "--radius", "1"}).code == 1);
  CHECK(run({"verify", "quotient"}).code == 0);
  CHECK(run({"verify", "three-segment-path"}).code == 0);
  CHECK(run({"verify", "complete-graph", "--spec", "Sym(3)"}).code == 0);
  auto q = Json::parse(run({"verify", "quotient", "--modulus", "4"}).out);
  CHECK(q["passed"] == true);
}

TEST_CASE("usage and spec errors exit with 2") {
  auto r = run({"ball", "--spec", "Z^", "--radius", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("column 3") != std::string::npos);
  CHECK(run({"ends", "--spec", "rule(zzz)"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"ends", "--spec", "Z", "--k", "5..2"}).code == 2);
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::vector<std::string>> cases{
      {"ends", "--spec", "F(2)", "--k", "1..3", "--K", "8"},
      {"ball", "--spec", "wreath(C(2), Z, translation)", "--radius", "3"},
      {"leaves", "--spec", "wreath(C(3), C(2), regular)", "--radius", "4"},
      {"verify", "three-segment-path", "--seed", "7"},
  };
  for (auto const& args : cases) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("a small budget truncates the ends profile") {
  BudgetEnv env("30");
  CHECK(vertex_budget_from_env() == 30);
  auto r = run({"ends", "--spec", "Z^2", "--k", "1..2", "--K", "10"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["truncated"] == true);
  // |B(3)| = 25 <= 30 < 41 = |B(4)|
  CHECK(j["K"] == 3);
}

TEST_CASE("ball export formats") {
  auto dot = run({"ball", "--spec", "Z", "--radius", "2", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("doublecircle") != std::string::npos);
  CHECK(dot.out.find("label=") != std::string::npos);

  auto json = run({"ball", "--spec", "Z", "--radius", "2"});
  CHECK(json.code == 0);
  CHECK(Json::parse(json.out)["vertices"].size() == 5);
}

TEST_CASE("fixtures lists the built-in rules") {
  auto r = run({"fixtures"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["rules"][0]["name"] == "f2_four_ends");
}
