#include <doctest.h>

#include "blowdown/errors.hpp"
#include "blowdown/report.hpp"
#include "blowdown/scenario.hpp"

using namespace blowdown;
using nlohmann::ordered_json;

namespace {

ordered_json toy() {
  return ordered_json::parse(R"({
    "schema": 1,
    "name": "toy",
    "surface": {"name": "T", "k2": 0, "b2": 2},
    "curves": [
      {"name": "A", "self_int": -3},
      {"name": "B", "self_int": -3}
    ],
    "points": [{"name": "A.B", "curves": ["A", "B"]}],
    "blowups": [{"exceptional": "e", "point": "A.B"}],
    "chains": [{"name": "CA", "curves": ["A"]}, {"name": "CB", "curves": ["B"]}],
    "test_curves": ["e"],
    "expected": {"chains": [{"coeffs": [4], "p": 4, "q": 1}, {"coeffs": [4]}], "k2_contracted": "1"}
  })");
}

std::string error_of(const ordered_json& doc) {
  try {
    parse_scenario(doc.dump());
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("toy scenario runs and passes") {
  const Scenario s = parse_scenario(toy().dump());
  const Report r = run(s);
  CHECK(r.error.empty());
  CHECK(r.passed());
  CHECK(r.exit_code() == 0);
  CHECK(r.data["k2_contracted"] == "1");
  CHECK(r.data["h1_blowdown"] == "Z/2");
}

TEST_CASE("mismatch gives exit code 1") {
  ordered_json doc = toy();
  doc["expected"]["k2_contracted"] = "2";
  const Report r = run(parse_scenario(doc.dump()));
  CHECK_FALSE(r.passed());
  CHECK(r.exit_code() == 1);
  bool found = false;
  for (const auto& c : r.checks)
    if (c.field == "k2_contracted") {
      found = true;
      CHECK_FALSE(c.pass);
      CHECK(c.detail.find("k2_contracted") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("chains that are not class T stop before the blow-down group") {
  ordered_json doc = toy();
  doc["curves"][0]["self_int"] = -4;
  doc["expected"] = ordered_json::object();
  const Report r = run(parse_scenario(doc.dump()));
  CHECK(r.data["h1_blowdown"].is_null());
  CHECK(r.data["chains"][0]["class_t"].is_null());
}

TEST_CASE("parse errors carry a JSON path") {
  ordered_json doc = toy();
  doc.erase("schema");
  CHECK(error_of(doc).find("$.schema") != std::string::npos);

  doc = toy();
  doc["schema"] = 2;
  CHECK(error_of(doc).find("unsupported version") != std::string::npos);

  doc = toy();
  doc["chains"][0]["curves"].push_back("Q");
  CHECK(error_of(doc).find("$.chains[0].curves[1]") != std::string::npos);

  doc = toy();
  doc["points"][0]["provenance"] = "asserted";
  CHECK(error_of(doc).find("$.points[0].citation") != std::string::npos);

  doc = toy();
  doc["points"][0]["provenance"] = "guess";
  CHECK(error_of(doc).find("$.points[0].provenance") != std::string::npos);

  doc = toy();
  doc["curves"][1]["name"] = "A";
  CHECK(error_of(doc).find("duplicate curve") != std::string::npos);

  doc = toy();
  doc["blowups"][0].erase("point");
  CHECK(error_of(doc).find("$.blowups[0]") != std::string::npos);

  doc = toy();
  doc["annotations"] = ordered_json::array({{{"claim", "x"}, {"conditional_on", {"nonsense"}}}});
  CHECK(error_of(doc).find("$.annotations[0].conditional_on[0]") != std::string::npos);

  CHECK_THROWS_AS(parse_scenario("{"), InputError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), InputError);
}

TEST_CASE("replay errors are input errors") {
  ordered_json doc = toy();
  doc["blowups"][0]["point"] = "nowhere";
  const std::string text = doc.dump();
  bool threw = false;
  try {
    build_configuration(parse_scenario(text));
  } catch (const InputError&) {
    threw = true;
  }
  CHECK(threw);
}

TEST_CASE("subset matching") {
  std::string detail;
  const ordered_json actual = {{"a", 1}, {"b", {1, 2}}, {"c", {{"x", "y"}, {"z", 0}}}};
  CHECK(json_subset_match({{"a", 1}}, actual, "$", detail));
  CHECK(json_subset_match({{"c", {{"x", "y"}}}}, actual, "$", detail));
  CHECK_FALSE(json_subset_match({{"b", {1}}}, actual, "$", detail));
  CHECK_FALSE(json_subset_match({{"a", 2}}, actual, "$", detail));
  CHECK(detail.find("a") != std::string::npos);
  CHECK_FALSE(json_subset_match({{"missing", 1}}, actual, "$", detail));
}

TEST_CASE("bundled scenarios pass and reports are deterministic") {
  std::vector<Scenario> all;
  for (const char* n : {"main", "main_prime", "variant_6_2", "appendix"})
    all.push_back(load_scenario(std::string(BLOWDOWN_SCENARIO_DIR) + "/" + n + ".json"));
  const std::vector<Report> par = run_all(all);
  REQUIRE(par.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    INFO(all[i].name);
    CHECK(par[i].passed());
    const Report again = run(all[i]);
    CHECK(report_json(again).dump() == report_json(par[i]).dump());
    CHECK(report_text(again) == report_text(par[i]));
  }
}

TEST_CASE("text report ends with the blow-down group") {
  const Report r = run(load_scenario(std::string(BLOWDOWN_SCENARIO_DIR) + "/main.json"));
  const std::string t = report_text(r);
  CHECK(t.size() > 20);
  CHECK(t.substr(t.rfind("h1_blowdown:")) == "h1_blowdown: Z/4\n");
  CHECK(t.find("\x1b[") == std::string::npos);
  CHECK(report_text(r, true).find("\x1b[") != std::string::npos);
  const ordered_json j = report_json(r);
  CHECK(j["status"] == "pass");
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("input failure report") {
  const Report r = input_failure("x.json", "bad");
  CHECK(r.exit_code() == 2);
  CHECK(report_json(r)["exit_code"] == 2);
}

}  // TEST_SUITE
