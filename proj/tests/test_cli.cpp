#include "sgalg/cli.hpp"
#include "sgalg/json_report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using sgalg::run_cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sgalg");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze a=(5,4) d=(4,9) k=3 as JSON") {
  auto r = run({"analyze", "--a", "5,4", "--d", "4,9", "--k", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ideal"]["generators"] ==
        nlohmann::json({"x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"}));
  CHECK(j["flags"]["cohen_macaulay"] == true);
  CHECK(j["flags"]["gorenstein"] == false);
  CHECK(j["flags"]["normal"] == true);
  CHECK(j["flags"]["koszul"] == true);
  CHECK(j["regularity"] == 2);
  CHECK(j["cm_type"] == 2);
  CHECK(j["resolution"]["betti"] == nlohmann::json({1, 3, 2}));
  CHECK(j["extension"].is_null());
  std::vector<std::pair<std::vector<long>, long>> terms;
  for (const auto& t : j["hilbert"]["numerator_terms"])
    terms.push_back({t["exponent"].get<std::vector<long>>(), t["coefficient"].get<long>()});
  std::vector<std::pair<std::vector<long>, long>> expected{
      {{0, 0}, 1}, {{18, 26}, -1}, {{22, 35}, -1}, {{26, 44}, -1}, {{31, 48}, 1}, {{35, 57}, 1}};
  CHECK(terms == expected);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("JSON output is deterministic") {
  std::vector<std::string> args{"analyze", "--a", "2,3", "--d", "2,2", "--k", "3", "--b", "9,11", "--format", "json"};
  auto first = run(args);
  auto second = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["extension"]["extra_generator"] == "y^2 - x1^2*x3*x4");
  CHECK(j["extension"]["mu"] == 2);
  CHECK(j["extension"]["lambda"] == nlohmann::json({2, 0, 1, 1}));
  CHECK(j["flags"]["normal"] == false);
  CHECK(j["flags"]["koszul"].is_null());
  CHECK(j["qf"] == nlohmann::json({{3, 4}, {5, 6}}));
  CHECK(j["apery"]["agree"] == true);
}

TEST_CASE("text output") {
  auto r = run({"resolution", "--a", "1,2", "--d", "3,1", "--k", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Betti numbers: [1,6,8,3]") != std::string::npos);
  CHECK(r.out.find("2a+4d (x2)") != std::string::npos);
  CHECK(r.out.find("[PASS] complex") != std::string::npos);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"analyze", "--a", "1,1", "--d", "2,2", "--k", "3"}).code == 2);
  CHECK(run({"analyze", "--a", "1,1", "--d", "2,2"}).code == 2);
  CHECK(run({"analyze", "--a", "1,x", "--d", "2,2", "--k", "3"}).code == 2);
  CHECK(run({"analyze", "--a", "-1,0", "--d", "2,2", "--k", "3"}).code == 2);
  CHECK(run({"hilbert", "--a", "1,0", "--d", "0,1", "--k", "5"}).code == 2);
  CHECK(run({"extend", "--a", "1,0", "--d", "0,1", "--k", "3"}).code == 2);
  CHECK(run({"analyze", "--a", "1,0", "--d", "0,1", "--k", "3", "--format", "xml"}).code == 2);
  auto r = run({"extend", "--a", "1,0", "--d", "1,1", "--k", "3", "--b", "0,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotMinimal") != std::string::npos);
}

TEST_CASE("box overrides") {
  CHECK(run({"hilbert", "--a", "5,4", "--d", "4,9", "--k", "3", "--box-x", "10", "--box-y", "10"}).code == 0);
  CHECK(run({"hilbert", "--a", "5,4", "--d", "4,9", "--k", "3", "--box-x", "0"}).code == 2);
}

TEST_CASE("a failing check entry marks the report as failed") {
  nlohmann::json ok = {{"checks", {{{"name", "a"}, {"passed", true}}}}};
  nlohmann::json bad = {{"checks", {{{"name", "a"}, {"passed", true}}, {{"name", "b"}, {"passed", false}}}}};
  CHECK(sgalg::checks_passed(ok));
  CHECK_FALSE(sgalg::checks_passed(bad));
}

TEST_CASE("help exits with 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}
