#include <catch_amalgamated.hpp>

#include <filesystem>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

using namespace superleibniz;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixtures::fixture_path(name); }

// Every scalar leaf in `data`, keyed by its dotted path.
void scalar_leaves(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) scalar_leaves(it.value(), path + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) scalar_leaves(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else if (!j.is_null()) {
    out.emplace_back(path, j.dump());
  }
}

/// Every scalar of the JSON report also appears in the text report.
void text_carries_json(const std::vector<std::string>& args) {
  auto json_args = args;
  json_args.insert(json_args.begin(), {"--format", "json"});
  const Run j = run(json_args);
  const Run t = run(args);
  CHECK(j.code == t.code);
  const Json doc = parse_document(j.out);
  std::vector<std::pair<std::string, std::string>> leaves;
  scalar_leaves(doc["data"], "data", leaves);
  for (const auto& [path, value] : leaves) {
    INFO(path << " = " << value);
    CHECK_THAT(t.out, ContainsSubstring(value));
  }
  CHECK_THAT(t.out, ContainsSubstring("status: " + doc["status"].get<std::string>()));
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"validate", fx("L3.json")}).code == 0);
  CHECK(run({"validate", fx("parity_violation.json")}).code == 1);
  CHECK(run({"deform", "check", fx("L3.json"), "--deformation", fx("mu1_zz.json")}).code == 1);
  CHECK(run({"extend", fx("L3.json"), "--cocycle", fx("noncocycle_zz.json")}).code == 1);
  CHECK(run({"validate", fx("missing.json")}).code == 2);
  CHECK(run({"cohomology", fx("L3.json"), "--max-n", "4"}).code == 2);
  CHECK(run({"--max-arity", "5", "cohomology", fx("L3.json"), "--max-n", "4"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("errors go to stderr with a location") {
  const Run r = run({"validate", std::string(TEST_DATA_DIR) + "/../cli/inputs/syntax_error.json"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_THAT(r.err, ContainsSubstring("line 4"));
  const Run f = run({"validate", std::string(TEST_DATA_DIR) + "/../cli/inputs/float_coeff.json"});
  CHECK_THAT(f.err, ContainsSubstring("brackets[0].value[0].coeff"));
}

TEST_CASE("text and JSON reports carry the same values") {
  const std::string alg = fx("L3.json");
  text_carries_json({"validate", alg});
  text_carries_json({"validate", fx("not_leibniz.json")});
  text_carries_json({"cohomology", alg, "--max-n", "3"});
  text_carries_json({"cohomology", alg, "--module", fx("trivial_module.json")});
  text_carries_json({"derivations", alg});
  text_carries_json({"extend", alg, "--cocycle", fx("cocycle_yz.json")});
  text_carries_json({"deform", "check", alg, "--deformation", fx("mu1_zz.json")});
  text_carries_json({"deform", "extend", alg, "--deformation", fx("deformation_yz.json"), "--order", "2"});
  text_carries_json({"deform", "equiv", alg, "--deformation", fx("deformation_yz.json"), fx("deformation_yz_shifted.json")});
}

TEST_CASE("JSON output is canonical") {
  const Run r = run({"--format", "json", "cohomology", fx("L3.json")});
  REQUIRE(r.code == 0);
  CHECK(dump_canonical(parse_document(r.out)) == r.out);
  const Json doc = parse_document(r.out);
  CHECK(doc["command"] == "cohomology");
  CHECK(doc["exit_code"] == 0);
  CHECK(doc["status"] == "pass");
}

TEST_CASE("cohomology table matches the golden dimensions") {
  const Run r = run({"--format", "json", "cohomology", fx("L3.json"), "--max-n", "3"});
  const Json table = parse_document(r.out)["data"]["table"];
  const Json golden = fixtures::golden_cohomology();
  std::size_t matched = 0;
  for (const auto& g : golden["paper_example_adjoint"])
    for (const auto& row : table)
      if (row["arity"] == g["arity"] && row["parity"] == (g["parity"] == 0 ? "even" : "odd")) {
        ++matched;
        for (const char* key : {"cochains", "cocycles", "coboundaries", "cohomology"}) CHECK(row[key] == g[key]);
      }
  CHECK(matched == 8);
}

TEST_CASE("written files load back") {
  const auto dir = std::filesystem::temp_directory_path() / "superleibniz_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "extended.json").string();
  const Run r = run({"deform", "extend", fx("L3.json"), "--deformation", fx("deformation_yz.json"), "--order",
                     "2", "--out", path});
  REQUIRE(r.code == 0);
  const auto d = deformation_from_json(paper_example(), load_document(path));
  CHECK(d.order() == 2);
  CHECK(check_deformation(d).passed());
  CHECK(run({"deform", "check", fx("L3.json"), "--deformation", path}).code == 0);

  const auto ext = (dir / "total.json").string();
  REQUIRE(run({"extend", fx("L3.json"), "--cocycle", fx("cocycle_yz.json"), "--out", ext}).code == 0);
  CHECK(run({"validate", ext}).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("seeded random verification is reproducible") {
  const std::vector<std::string> args{"--format", "json", "--seed", "3", "cohomology", fx("L3.json"),
                                      "--verify-random", "10"};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const Json v = parse_document(a.out)["data"]["verify_random"];
  CHECK(v["delta_squared_failures"] == 0);
  CHECK(v["matrix_mismatches"] == 0);
}
