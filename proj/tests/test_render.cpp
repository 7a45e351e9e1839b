#include <doctest.h>

#include <cmath>

#include "cacti/io.hpp"
#include "cacti/render.hpp"
#include "cacti/suites.hpp"

using namespace cacti;

namespace {

kernel::FMSElement fixture(const std::string& name)
{
    return io::fms_from_json(io::read_file(std::string(CACTI_FIXTURE_DIR) + "/" + name));
}

const kernel::LobeCircle& circle(const kernel::CactusLayout& l, int lobe)
{
    for (const auto& c : l.circles)
        if (c.lobe == lobe) return c;
    throw std::logic_error("no circle for lobe " + std::to_string(lobe));
}

void check_attached(const kernel::CactusLayout& l)
{
    for (const auto& c : l.circles) {
        if (c.parent == 0) continue;
        const auto& p = circle(l, c.parent);
        CHECK(std::hypot(c.px - p.cx, c.py - p.cy) == doctest::Approx(p.r).epsilon(1e-9));
        CHECK(std::hypot(c.px - c.cx, c.py - c.cy) == doctest::Approx(c.r).epsilon(1e-9));
        int siblings = 0;
        for (const auto& d : l.circles)
            if (d.parent == c.parent && std::hypot(d.px - c.px, d.py - c.py) < 1e-9) ++siblings;
        if (siblings == 1) CHECK(std::hypot(c.cx - p.cx, c.cy - p.cy) == doctest::Approx(c.r + p.r).epsilon(1e-9));
    }
}

}  // namespace

TEST_CASE("one lobe with its basepoint")
{
    auto l = kernel::layout(kernel::FMSElement::unit());
    REQUIRE(l.circles.size() == 1);
    const auto& c = l.circles.front();
    CHECK(std::hypot(l.base_x - c.cx, l.base_y - c.cy) == doctest::Approx(c.r));
    CHECK(kernel::render_svg(kernel::FMSElement::unit()).find("<circle") != std::string::npos);
    CHECK(kernel::layout(kernel::FMSElement::nullary()).circles.empty());
}

TEST_CASE("two tangent lobes")
{
    auto l = kernel::layout(fixture("two_lobes.json"));
    REQUIRE(l.circles.size() == 2);
    CHECK(circle(l, 2).parent == 1);
    check_attached(l);
    // The intersection sits half way round lobe 1, opposite the basepoint.
    CHECK(circle(l, 2).cy > 0);
}

TEST_CASE("four-lobe nesting follows the associated tree")
{
    auto l = kernel::layout(fixture("four_lobes.json"));
    REQUIRE(l.circles.size() == 4);
    CHECK(circle(l, 1).parent == 0);
    CHECK(circle(l, 2).parent == 1);
    CHECK(circle(l, 3).parent == 2);
    CHECK(circle(l, 4).parent == 1);
    check_attached(l);
}

TEST_CASE("basepoint on an intersection and random cacti")
{
    kernel::LabeledPartition p{2, {0, geom::make_rat(1, 2), 1}, {1, 2}, true};
    auto l = kernel::layout(kernel::FMSElement::spineless(p));
    CHECK(circle(l, 2).parent == 1);
    check_attached(l);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        kernel::RandomFMSOptions opt;
        opt.framed = trial % 2 == 0;
        auto e = kernel::random_fms(1 + static_cast<int>(rng() % 5), rng, opt);
        auto a = kernel::layout(e);
        CHECK(static_cast<int>(a.circles.size()) == e.arity());
        check_attached(a);
        CHECK(kernel::render_svg(e) == kernel::render_svg(e));
    }
}

TEST_CASE("invalid elements are not drawn")
{
    auto e = kernel::FMSElement::multiplication();
    e.partition.breaks[1] = geom::make_rat(1, 3);
    CHECK_THROWS_AS(kernel::layout(e), std::invalid_argument);
}

TEST_CASE("named suites pass on a small budget")
{
    suites::SuiteOptions opt;
    opt.samples = 5;
    opt.max_arity = 2;
    for (const auto& name : suites::names()) {
        auto r = suites::run(name, opt);
        INFO(name, " ", (r.failures.empty() ? std::string() : r.failures.front()));
        CHECK(r.passed());
        CHECK(r.checks > 0);
    }
    CHECK_THROWS_AS(suites::run("nope", opt), std::invalid_argument);
    opt.samples = 0;
    CHECK_THROWS_AS(suites::run("operad", opt), std::invalid_argument);
}

TEST_CASE("suite reports are reproducible")
{
    suites::SuiteOptions opt;
    opt.samples = 4;
    opt.max_arity = 2;
    opt.seed = 99;
    CHECK(io::to_json(suites::run("operad", opt)).dump() == io::to_json(suites::run("operad", opt)).dump());
}
