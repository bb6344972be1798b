#include <filesystem>

#include "doctest.h"
#include "primaltop/space_io.hpp"
#include "support/fixtures.hpp"

using namespace primaltop;

TEST_SUITE_BEGIN("space_io");

namespace {

const char* kExA = R"({
  "name": "EX-A",
  "universe": ["a", "b", "c"],
  "topology": [[], ["b"], ["c"], ["b", "c"], ["a", "c"], ["a", "b", "c"]],
  "primal": [[], ["b"], ["c"], ["b", "c"]]
})";

}  // namespace

TEST_CASE("space documents parse") {
  const SpaceDocument doc = parse_space_document(kExA);
  CHECK(doc.name == "EX-A");
  CHECK(doc.universe->points() == std::vector<std::string>{"a", "b", "c"});
  CHECK(doc.topology_family.size() == 6);
  CHECK(doc.primal_family.size() == 4);

  const PrimalSpace space = doc.to_space();
  CHECK(space.topology().opens() == fixtures::ex_a().topology().opens());
  CHECK(space.primal() == fixtures::ex_a().primal());
}

TEST_CASE("parse errors are structured") {
  CHECK_THROWS_AS(parse_space_document("{"), ParseError);
  CHECK_THROWS_AS(parse_space_document("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_space_document(R"({"universe": ["a"], "topology": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_space_document(R"({"universe": ["a"], "topology": [["z"]], "primal": []})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_space_document(R"({"universe": ["a", "a"], "topology": [[]], "primal": []})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_space_document(R"({"universe": [], "topology": [[]], "primal": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_space_document(R"({"universe": ["a"], "topology": "x", "primal": []})"), ParseError);
}

TEST_CASE("serialization round-trips canonically") {
  const SpaceDocument doc = parse_space_document(kExA);
  const std::string text = serialize_space_document(doc);
  const SpaceDocument again = parse_space_document(text);
  CHECK(again.name == doc.name);
  CHECK(again.topology_family == doc.topology_family);
  CHECK(again.primal_family == doc.primal_family);
  CHECK(serialize_space_document(again) == text);
}

TEST_CASE("bundled fixture files parse to the expected spaces") {
  const std::filesystem::path dir = PRIMALTOP_FIXTURES_DIR;
  const std::pair<const char*, PrimalSpace> expected[] = {
      {"EX-A.json", fixtures::ex_a()}, {"EX-B.json", fixtures::ex_b()},
      {"EX-C.json", fixtures::ex_c()}, {"EX-D.json", fixtures::ex_d()},
      {"EX-E.json", fixtures::ex_e()}, {"EX-F.json", fixtures::ex_f()},
  };
  for (const auto& [file, space] : expected) {
    const SpaceDocument doc = load_space_document(dir / file);
    CHECK(doc.name == std::filesystem::path(file).stem().string());
    const PrimalSpace parsed = doc.to_space();
    CHECK(parsed.topology().opens() == space.topology().opens());
    CHECK(parsed.primal() == space.primal());
  }
  CHECK_THROWS_AS(load_space_document(dir / "missing.json"), ParseError);
}

TEST_CASE("machine reports round-trip byte for byte") {
  const CheckReport check = check_theorem("CONV-T3.6h", fixtures::ex_c());
  nlohmann::json body{
      {"schema_version", kReportSchemaVersion},
      {"command", "check"},
      {"input", "x.json"},
      {"name", "EX-C"},
      {"results", nlohmann::json::array({check_report_to_json(check)})},
      {"status", "pass"},
  };
  const Report report(body);
  const std::string machine = report.machine();
  CHECK(Report::parse(machine).machine() == machine);
  CHECK(report.table().find("CONV-T3.6h") != std::string::npos);
  CHECK_THROWS_AS(Report::parse("{}"), ParseError);
  CHECK_THROWS_AS(Report::parse("nope"), ParseError);
}

TEST_CASE("reports never embed timing") {
  const CheckReport check = check_theorem("T3.6a", fixtures::ex_a());
  const nlohmann::json j = check_report_to_json(check);
  CHECK(!j.contains("elapsed"));
  CHECK(!j.contains("elapsed_seconds"));
}

TEST_SUITE_END();
