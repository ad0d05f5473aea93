#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "selp/error.hpp"
#include "selp/witness.hpp"

using namespace selp;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing fixture " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("ground atoms split into predicate and arguments") {
    GroundAtomView bare = parse_ground_atom("sat");
    CHECK(bare.pred == "sat");
    CHECK(bare.args.empty());

    GroundAtomView flat = parse_ground_atom("g(q,1)");
    CHECK(flat.pred == "g");
    CHECK(flat.args == std::vector<std::string>{"q", "1"});

    GroundAtomView nested = parse_ground_atom("g(neg(a),1)");
    CHECK(nested.pred == "g");
    CHECK(nested.args == std::vector<std::string>{"neg(a)", "1"});

    GroundAtomView deep = parse_ground_atom("f(g(a,b),c)");
    CHECK(deep.args == std::vector<std::string>{"g(a,b)", "c"});
}

TEST_CASE("malformed ground atoms are rejected") {
    CHECK_THROWS_AS(parse_ground_atom(""), Error);
    CHECK_THROWS_AS(parse_ground_atom("(a)"), Error);
    CHECK_THROWS_AS(parse_ground_atom("p("), Error);
    CHECK_THROWS_AS(parse_ground_atom("p()"), Error);
    CHECK_THROWS_AS(parse_ground_atom("p(a"), Error);
    CHECK_THROWS_AS(parse_ground_atom("p(a,)"), Error);
    CHECK_THROWS_AS(parse_ground_atom("p((a)"), Error);
    CHECK_THROWS_AS(parse_ground_atom("p(a))"), Error);
}

TEST_CASE("plain witness arrays parse directly") {
    WitnessSet w = parse_witness_json(R"([["a","b"],["c"],[]])");
    REQUIRE(w.witnesses.size() == 3);
    CHECK(w.witnesses[0] == std::vector<std::string>{"a", "b"});
    CHECK(w.witnesses[1] == std::vector<std::string>{"c"});
    CHECK(w.witnesses[2].empty());

    CHECK(parse_witness_json("[]").witnesses.empty());
}

TEST_CASE("solver envelopes contribute every witness value") {
    WitnessSet w = parse_witness_json(R"json({
        "Solver": "someting 1.0",
        "Call": [
            {"Witnesses": [
                {"Value": ["g(q,1)", "v_check1(p,1)"]},
                {"Value": ["g(p,1)"]}
            ]},
            {"Comment": "a call without witnesses is skipped"}
        ],
        "Result": "SATISFIABLE"
    })json");
    REQUIRE(w.witnesses.size() == 2);
    CHECK(w.witnesses[0] ==
          std::vector<std::string>{"g(q,1)", "v_check1(p,1)"});
    CHECK(w.witnesses[1] == std::vector<std::string>{"g(p,1)"});

    CHECK(parse_witness_json(R"({"Call": [{"Solver": "x"}]})")
              .witnesses.empty());
}

TEST_CASE("the checked-in solver output parses") {
    WitnessSet w =
        parse_witness_json(read_file(std::string(FIXTURE_DIR) +
                                     "/example2_clasp.json"));
    REQUIRE(w.witnesses.size() == 3);
    CHECK(w.witnesses[0] == std::vector<std::string>{
                                "g(q,1)", "g(p,0)", "v_check1(p,1)",
                                "v_check1(q,0)"});
    CHECK(w.witnesses[2] == w.witnesses[0]); // solvers may repeat models
}

TEST_CASE("broken witness documents are rejected with a reason") {
    CHECK_THROWS_WITH_AS(parse_witness_json("not json"),
                         doctest::Contains("invalid JSON"), Error);
    CHECK_THROWS_AS(parse_witness_json(R"([["a", 1]])"), Error);
    CHECK_THROWS_AS(parse_witness_json(R"([1])"), Error);
    CHECK_THROWS_AS(parse_witness_json(R"("just a string")"), Error);
    CHECK_THROWS_AS(parse_witness_json(R"({"Result": "SAT"})"), Error);
    CHECK_THROWS_AS(parse_witness_json(R"({"Call": 3})"), Error);
    CHECK_THROWS_AS(parse_witness_json(R"({"Call": [{"Witnesses": 3}]})"),
                    Error);
    CHECK_THROWS_AS(
        parse_witness_json(R"({"Call": [{"Witnesses": [{"Costs": []}]}]})"),
        Error);
    CHECK_THROWS_AS(
        parse_witness_json(R"({"Call": [{"Witnesses": [{"Value": 3}]}]})"),
        Error);
}
