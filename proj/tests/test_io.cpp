#include <doctest.h>

#include "cacti/instances.hpp"
#include "cacti/io.hpp"

using namespace cacti;
using io::json;
using geom::make_rat;

TEST_CASE("rationals are strings")
{
    CHECK(io::to_json(make_rat(3, 6)) == json("1/2"));
    CHECK(io::to_json(make_rat(4, 2)) == json("2"));
    CHECK(io::rat_from_json(json("-2/4")) == make_rat(-1, 2));
    CHECK(io::rat_from_json(json(3)) == 3);
    CHECK_THROWS_AS(io::rat_from_json(json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(io::rat_from_json(json("x")), std::invalid_argument);
    CHECK_THROWS_AS(io::rat_from_json(json(0.5)), std::invalid_argument);
}

TEST_CASE("multiplication element reads from the documented form")
{
    auto j = io::parse(R"({"n":2, "breaks":["0","1/2","1"], "labels":[1,2], "reparam":[["0","0"],["1","1"]], "offsets":["0","0"]})");
    CHECK(io::fms_from_json(j) == kernel::FMSElement::multiplication());
    auto out = io::to_json(kernel::FMSElement::multiplication());
    CHECK_FALSE(out.contains("offsets"));
    CHECK(out.dump() == R"({"n":2,"breaks":["0","1/2","1"],"labels":[1,2],"reparam":[["0","0"],["1","1"]]})");
    CHECK(io::to_json(kernel::FMSElement::nullary()).dump() == R"({"n":0})");
    CHECK(io::fms_from_json(io::parse(R"({"n":0})")) == kernel::FMSElement::nullary());
}

TEST_CASE("fMS round trip")
{
    std::mt19937_64 rng(17);
    kernel::RandomFMSOptions opt;
    for (int trial = 0; trial < 60; ++trial) {
        opt.framed = trial % 2 == 1;
        auto e = kernel::random_fms(static_cast<int>(rng() % 5), rng, opt);
        auto j = io::to_json(e);
        CHECK(io::fms_from_json(io::parse(j.dump())) == e);
    }
}

TEST_CASE("malformed elements are rejected")
{
    auto reject = [](const char* text) { CHECK_THROWS_AS(io::fms_from_json(io::parse(text)), std::invalid_argument); };
    reject(R"({"breaks":["0","1"],"labels":[1]})");
    reject(R"({"n":2,"breaks":["0","1/2","1"],"labels":[1]})");
    reject(R"({"n":2,"breaks":["0","1/3","1"],"labels":[1,2]})");
    reject(R"({"n":2,"breaks":["0","1/4","1/2","3/4","1"],"labels":[1,2,1,2]})");
    reject(R"({"n":1,"breaks":["0","1"],"labels":[1],"offsets":["0","0"]})");
    reject(R"({"n":1,"breaks":["0","1"],"labels":[1],"reparam":[["0","1/2"],["1","1"]]})");
    reject(R"({"n":1,"breaks":["0","1"],"labels":["a"]})");
    CHECK_THROWS_AS(io::parse("{\"n\":"), std::invalid_argument);
    CHECK_THROWS_AS(io::read_file("/nonexistent/cactus.json"), std::invalid_argument);
}

TEST_CASE("free term round trip")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto t = operad::random_term(static_cast<int>(rng() % 4), rng);
        CHECK(io::term_from_json(io::parse(io::to_json(t).dump())) == t);
    }
    auto a = operad::FreeTerm::generator(operad::Generator{"a1", 0, geom::DeltaPoint({make_rat(1, 3)})}, 1);
    auto b = operad::FreeTerm::generator(
        operad::Generator{"a2", 0, geom::LambdaPoint(geom::DeltaPoint(), geom::CirclePoint(make_rat(1, 4)))}, 0);
    auto t = operad::compose(a, 1, b);
    auto j = io::to_json(t);
    CHECK(j["op"] == "gen");
    CHECK(j["payload"] == json::array({"1/3"}));
    CHECK(j["children"][0]["payload"]["start"] == "1/4");
    CHECK(io::term_from_json(j) == t);
    CHECK(io::to_json(operad::FreeTerm::leaf()).dump() == R"({"op":"leaf"})");
}

TEST_CASE("malformed terms are rejected")
{
    auto reject = [](const char* text) { CHECK_THROWS_AS(io::term_from_json(io::parse(text)), std::invalid_argument); };
    reject(R"({"op":"x"})");
    reject(R"({"children":[]})");
    reject(R"({"op":"m","arity":2,"children":[{"op":"leaf"}]})");
    reject(R"({"op":"gen","arity":0,"children":[]})");
    reject(R"({"op":"gen","name":"a","payload":["1/2"],"children":[]})");
}

TEST_CASE("homology report")
{
    auto c = homology::build_chain_complex(2, 2);
    auto h = homology::homology(c);
    auto j = io::to_json(h, 2, 2);
    CHECK(j.dump() == R"({"n":2,"m":2,"fvector":[2,2],"betti":[1,1],"torsion":[[],[]],"euler":0})");
    auto full = io::to_json(h, 2, 2, &c);
    CHECK(full["cells"][1] == json::array({"(1,2,1)", "(2,1,2)"}));
    CHECK(full["boundary"][1]["entries"].size() == 4);
}

TEST_CASE("check report and action tree")
{
    operad::CheckReport r{"demo"};
    ++r.checks;
    r.fail("broken");
    auto j = io::to_json(r);
    CHECK(j["passed"] == false);
    CHECK(j["failures"][0] == "broken");

    auto t = action::build_action_tree(kernel::FMSElement::multiplication(), geom::DeltaPoint({make_rat(1, 4)}));
    auto tj = io::to_json(t);
    CHECK(tj["mode"] == "plain");
    CHECK(tj["vertices"].size() == t.vertices.size());
    int lobes = 0;
    for (const auto& v : tj["vertices"])
        if (v["kind"] == "lobe") {
            ++lobes;
            CHECK(v["payload"].is_array());
        }
    CHECK(lobes == 2);
}
