#include <doctest.h>

#include "commands.hpp"
#include "cusp_atlas/enumerate.hpp"
#include "cusp_atlas/errors.hpp"
#include "helpers.hpp"
#include "json_io.hpp"

using namespace cusp_atlas;
using namespace cusp_atlas::io;

namespace {

const char* support_doc = R"({"command":"support","group":{"family":"Sp","N":6},
  "blocks":[{"pi":{"name":"p","dim":1,"type":"orthogonal"},"a":2,"sign":1},{"pi":"p","a":4,"sign":-1}]})";

std::string schema_pointer(Command c, const json& doc) {
    try {
        parse_input(c, doc);
    } catch (const SchemaError& e) {
        return e.pointer();
    }
    return "<accepted>";
}

json run_json(Command c, const std::string& text) { return run(parse_input(c, json::parse(text)), 20).output; }

}  // namespace

TEST_CASE("parsing the support example") {
    const JobSpec job = parse_input(Command::Support, json::parse(support_doc));
    CHECK(job.command == Command::Support);
    const auto& in = std::get<ParameterInput>(job.payload);
    CHECK(in.parameter.dual == test::sp(6));
    CHECK(in.parameter.sorted_blocks() == std::vector<Block>{{"p", 2}, {"p", 4}});
    REQUIRE(in.character);
    CHECK(in.character->at({"p", 4}) == -1);
}

TEST_CASE("schema errors carry JSON pointers") {
    json doc = json::parse(support_doc);
    doc["blocks"][0]["sign"] = 0;
    CHECK(schema_pointer(Command::Support, doc) == "/blocks/0/sign");

    doc = json::parse(support_doc);
    doc["colour"] = "red";
    CHECK(schema_pointer(Command::Support, doc) == "/colour");

    doc = json::parse(support_doc);
    doc.erase("group");
    CHECK(schema_pointer(Command::Support, doc) == "/group");

    doc = json::parse(support_doc);
    doc["blocks"][1]["pi"] = "q";
    CHECK(schema_pointer(Command::Support, doc) == "/blocks/1/pi");

    CHECK(schema_pointer(Command::Enumerate, json::parse(R"({"group":{"family":"Sp","N":4}})")) == "<accepted>");
    CHECK(schema_pointer(Command::Enumerate, json::parse(R"({"group":{"family":"Sp","N":"4"}})")) == "/group/N");
    CHECK(schema_pointer(Command::Enumerate, json::parse(R"({"command":"support","group":{"family":"Sp","N":4}})")) ==
          "/command");
    CHECK(schema_pointer(Command::Bernstein, json::parse(R"({"group":{"family":"Sp","N":0},"theta":[]})")) == "/theta");
}

TEST_CASE("command names") {
    for (auto c : {Command::Validate, Command::Springer, Command::Support, Command::CuspidalTest, Command::Reducibility,
                   Command::Bernstein, Command::Hecke, Command::Enumerate, Command::Selfcheck})
        CHECK(command_from_string(to_string(c)) == c);
    CHECK(to_string(Command::CuspidalTest) == "cuspidal-test");
    CHECK_FALSE(command_from_string("frobnicate"));
}

TEST_CASE("encoders round-trip") {
    const auto g = test::oeven(8);
    CHECK(decode_group(encode(g), "") == g);
    const auto p = test::part({5, 3, 1, 1});
    CHECK(decode_partition(encode(p), "") == p);
    const auto eta = test::chi({1, 3, 5}, {1, -1, 1});
    CHECK(decode_character(encode(eta), "") == eta);
    const auto label = test::symp("s", 4);
    CHECK(decode_label(encode(label), "") == label);

    for (const auto& [param, character] :
         enumerate_parameters(test::soodd(9), {test::orth("p"), test::symp("s")}, 20, SignMode::AllSignVectors)) {
        const ParameterInput back = decode_parameter(encode_parameter(param, &character), "");
        CHECK(back.parameter == param);
        REQUIRE(back.character);
        CHECK(*back.character == character);
        CHECK_FALSE(decode_parameter(encode_parameter(param, nullptr), "").character);
    }

    InertialTriple t;
    t.dual = test::sp(12);
    t.gl_factors = {{test::orth("p"), 2, 1, 0, Half::from_twice(1)}, {test::glpair("g"), 1, 2}};
    t.cusp = test::parameter(test::sp(6), {{test::orth("p"), 2, 1}, {test::orth("p"), 4, 1}});
    const TripleInput back = decode_triple(encode(t), "");
    CHECK(encode(back.triple) == encode(t));
    CHECK(back.triple.cusp == t.cusp);
}

TEST_CASE("support output") {
    const json out = run_json(Command::Support, support_doc);
    CHECK(out["gl_twists"] == json::parse(R"([["p","3/2"],["p","1/2"]])"));
    CHECK(out["cusp_blocks"] == json::parse(R"([["p",2]])"));
    CHECK(out["levi"] == "GL1(p)^2 x Sp2");
    CHECK(out["p_adic_group"] == "SO_7");
    for (const auto& [name, value] : out["checks"].items()) CHECK_MESSAGE(value == true, name);

    // The cuspidal part printed by support is an input document whose support is itself.
    json again = out["cusp_parameter"];
    const json second = run_json(Command::Support, again.dump());
    CHECK(second["gl_twists"].empty());
    CHECK(second["cusp_parameter"] == again);
}

TEST_CASE("enumerate output for Sp_4") {
    const json out = run_json(Command::Enumerate, R"({"group":{"family":"Sp","N":4}})");
    CHECK(out["pairs"] == 7);
    CHECK(out["by_triple"] == json::parse(R"({"d=0":5,"d=1":2})"));
}

TEST_CASE("cuspidal test on the SO_5 example") {
    const json out = run_json(Command::CuspidalTest, R"({"group":{"family":"Sp","N":4},"blocks":[
        {"pi":{"name":"m1","dim":1,"type":"orthogonal"},"a":2,"sign":-1},
        {"pi":{"name":"m2","dim":1,"type":"orthogonal"},"a":2,"sign":-1}]})");
    CHECK(out["cuspidal"] == true);
    CHECK(out["support_is_self"] == true);
}

TEST_CASE("runs are deterministic") {
    const std::vector<std::pair<Command, std::string>> jobs = {
        {Command::Support, support_doc},
        {Command::Enumerate, R"({"group":{"family":"SO","N":9}})"},
        {Command::Springer, R"({"group":{"family":"O","N":9},"partition":[5,3,1],"character":{"1":-1,"3":-1,"5":1}})"},
    };
    for (const auto& [c, text] : jobs) CHECK(run_json(c, text).dump() == run_json(c, text).dump());
}

TEST_CASE("text rendering flattens keys") {
    const std::string text = render_text(json::parse(R"({"b":{"c":[1,2]},"a":true})"));
    CHECK(text == "a: true\nb.c: [1,2]\n");
}

TEST_CASE("p-adic group names") {
    CHECK(p_adic_group_name(test::sp(4)) == "SO_5");
    CHECK(p_adic_group_name(test::soodd(5)) == "Sp_4");
    CHECK(p_adic_group_name(test::soeven(8)) == "SO_8");
}
