#include <doctest.h>

#include <string>

#include "tsv/commands.hpp"
#include "tsv/errors.hpp"

using namespace tsv;

namespace {

std::string data(const std::string& name) { return std::string(TSV_TEST_DATA) + "/" + name; }

std::string run_text(const Session& s, const std::string& cmd, std::vector<std::string> args, int expected_exit) {
  Report r = run(s, cmd, args);
  CHECK(r.exit_code == expected_exit);
  return r.render(false);
}

}  // namespace

TEST_CASE("loading the E_i session") {
  Session s = load_session(data("e_i.json"));
  CHECK(s.extension_d == 1);
  CHECK(s.tori.size() == 2);
  CHECK(s.torus("E_i").J() == ScalarMatrix{{0, -1}, {1, 0}});
  CHECK(s.torus("E_2i^").name() == "E_2i^");
  CHECK(s.morphism("xi").T() == IntMatrix{{2, 0}, {0, 1}});
  CHECK(s.block_iso("S_element").beta().T() == -IntMatrix::identity(2));
  CHECK_THROWS_AS(s.torus("nope"), UsageError);
  CHECK_THROWS_AS(s.block_iso("nope"), UsageError);
}

TEST_CASE("invalid complex structure is rejected with its location") {
  try {
    load_session(data("bad_j.json"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("J^2 != -I at torus E1") != std::string::npos);
    CHECK(e.line() == 4);
    CHECK(e.column() == 33);
  }
}

TEST_CASE("mixed extension tags are rejected") {
  CHECK_THROWS_WITH_AS(load_session(data("mixed.json")), doctest::Contains("mixed extension tags d=1 and d=2"),
                       ParseError);
  const char* two_surds = R"j({"tsv": 1, "tori": [
    {"name": "A", "J": [["0", "-sqrt(2)"], ["1/2*sqrt(2)", "0"]]},
    {"name": "B", "J": [["0", "-sqrt(3)"], ["1/3*sqrt(3)", "0"]]}]})j";
  try {
    parse_session(two_surds);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("mixed extension tags d=2 and d=3") != std::string::npos);
    CHECK(e.line() == 3);
    CHECK(e.column() == 31);
  }
}

TEST_CASE("syntax and schema errors carry positions") {
  try {
    parse_session("{\"tsv\": 1,\n  \"tori\": [}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_WITH_AS(parse_session(R"j({"tsv": 2})j"), doctest::Contains("schema version"), ParseError);
  CHECK_THROWS_WITH_AS(parse_session(R"j({"tori": []})j"), doctest::Contains("missing field \"tsv\""), ParseError);
  try {
    parse_session("{\"tsv\": 1, \"tori\": [\n {\"name\": \"A\", \"J\": [[\"0\", \"-1\"], [\"1\", \"x\"]]}]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 41);
  }
  CHECK_THROWS_WITH_AS(
      parse_session(R"j({"tsv": 1, "tori": [{"name": "A", "J": [["0","-1"],["1","0"]]}],
        "morphisms": [{"name": "m", "source": "A", "target": "B", "T": [["1","0"],["0","1"]]}]})j"),
      doctest::Contains("unknown torus \"B\""), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_session(R"j({"tsv": 1, "tori": [{"name": "A", "J": [["0","-1"],["1","0"]]}],
        "morphisms": [{"name": "m", "source": "A", "target": "A", "T": [["1/2","0"],["0","1"]]}]})j"),
      doctest::Contains("integer entry expected"), ParseError);
}

TEST_CASE("serialization round-trip") {
  for (const char* name : {"e_i.json", "e_sqrt2.json"}) {
    Session s = load_session(data(name));
    std::string text = serialize_session(s);
    Session again = parse_session(text);
    CHECK(again == s);
    CHECK(serialize_session(again) == text);
  }
}

TEST_CASE("basis files") {
  IntMatrix b = load_basis(data("lagrangian_a.json"));
  CHECK(b == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK_THROWS_AS(parse_basis(R"j({"tsv": 1, "basis": [["1", "0"], ["1"]]})j"), ParseError);
}

TEST_CASE("commands on the E_i session") {
  Session s = load_session(data("e_i.json"));
  CHECK(run_text(s, "sp-verify", {"S_element"}, 0) == "symplectic: true (oracles: dagger ✓ gram ✓ unitary ✓)\n");
  CHECK(run_text(s, "sp-verify", {"doubled"}, 1) == "symplectic: false (oracles: dagger ✗ gram ✗ unitary ✗)\n");
  CHECK(run_text(s, "classify", {"shear1"}, 0).rfind("case: GammaIsogeny, degree 1\n", 0) == 0);
  CHECK(run_text(s, "classify", {"doubled"}, 1).find("not applicable") != std::string::npos);
  CHECK(run_text(s, "recipe", {"rot"}, 0).find("GraphKernel") != std::string::npos);
  CHECK(run_text(s, "isogeny", {"E_i", "E_2i"}, 0).find("degree 2") != std::string::npos);
  CHECK(run_text(s, "hom", {"E_i", "E_2i"}, 0).rfind("Hom(E_i, E_2i): rank 2", 0) == 0);
  CHECK(run_text(s, "end", {"E_i"}, 0).rfind("End(E_i): rank 2", 0) == 0);
  CHECK(run_text(s, "dual", {"E_2i"}, 0) == "dual: E_2i^ J=[[0,-1/2],[2,0]]\n");
  CHECK(run_text(s, "generators", {"E_i", "2"}, 0).rfind("generators: 13 (bound 2)", 0) == 0);
  CHECK(run_text(s, "lagrangian", {"E_i", data("lagrangian_a.json")}, 0).rfind("lagrangian: true", 0) == 0);
  CHECK(run_text(s, "ddagger", {"shear1"}, 0).find("gamma: [[-1,0],[0,-1]]") != std::string::npos);
  CHECK(run_text(s, "swap", {"shear1"}, 0).find("map: E_i^ x E_i -> E_i^ x E_i") != std::string::npos);
  CHECK(run_text(s, "dagger", {"S_element"}, 0).find("beta: [[1,0],[0,1]]") != std::string::npos);
  CHECK(run_text(s, "verify-batch", {"E_i", "E_i", "2"}, 0).find("86 elements") != std::string::npos);
  CHECK(run_text(s, "verify-batch", {"E_i", "E_2i", "1"}, 1).find("note: no symplectic isomorphism") !=
        std::string::npos);
  CHECK(run_text(s, "check", {}, 0).rfind("session ok", 0) == 0);
  run_text(s, "bogus", {}, 3);
  run_text(s, "classify", {}, 3);
  run_text(s, "classify", {"nope"}, 3);
  run_text(s, "generators", {"E_i", "two"}, 3);
}

TEST_CASE("commands on the quadratic session") {
  Session s = load_session(data("e_sqrt2.json"));
  CHECK(s.extension_d == 2);
  // tau = sqrt(2) i has CM by Z[sqrt(-2)], so End has rank 2.
  CHECK(run_text(s, "endalg", {"Esqrt2"}, 0).rfind("verdict: Field (Q[x]/(x^2 + 2)), rank 2\n", 0) == 0);
  CHECK(run_text(s, "hom", {"Esqrt2", "E_i"}, 0).rfind("Hom(Esqrt2, E_i): rank 0", 0) == 0);
  CHECK(run_text(s, "isogeny", {"E_i", "Esqrt2"}, 1).find("Hom(E_i, Esqrt2) = 0") != std::string::npos);
  CHECK(run_text(s, "classify", {"flip"}, 0).rfind("case: GraphIso, degree 1", 0) == 0);
}

TEST_CASE("json reports") {
  Session s = load_session(data("e_i.json"));
  Report r = run(s, "classify", {"shear1"});
  auto doc = nlohmann::json::parse(r.render(true));
  CHECK(doc["case"] == "GammaIsogeny");
  CHECK(doc["degree"] == "1");
  CHECK(doc["exit_code"] == 0);
  Report bad = run(s, "classify", {"nope"});
  auto err = nlohmann::json::parse(bad.render(true));
  CHECK(err["exit_code"] == 3);
}
