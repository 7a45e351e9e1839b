#include <doctest.h>

#include "cacti/pl_map.hpp"
#include "cacti/points.hpp"
#include "cacti/rational.hpp"
#include "generators.hpp"

using namespace cacti::geom;

namespace {

Rat r(long p, long q = 1) { return make_rat(p, q); }

// Dense rational sample of [0,1] including both endpoints.
std::vector<Rat> sample_grid(int den = 48)
{
    std::vector<Rat> out;
    for (int k = 0; k <= den; ++k) out.push_back(r(k, den));
    return out;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms")
{
    CHECK(to_string(parse_rat("2/4")) == "1/2");
    CHECK(to_string(parse_rat("-3/6")) == "-1/2");
    CHECK(to_string(parse_rat("+7")) == "7");
    CHECK(to_string(parse_rat("0/5")) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/2"), std::invalid_argument);
}

TEST_CASE("floor and frac follow the mathematical convention")
{
    CHECK(floor(r(-1, 2)) == -1);
    CHECK(frac(r(-1, 4)) == r(3, 4));
    CHECK(frac(r(5, 4)) == r(1, 4));
    CHECK(CirclePoint(r(3, 2)).value() == r(1, 2));
    CHECK(CirclePoint(r(1, 4)).distance_from(CirclePoint(r(3, 4))) == r(1, 2));
}

TEST_CASE("monotone map validation")
{
    CHECK_THROWS_AS(PLMonotoneMap({{0, 0}, {r(1, 2), r(3, 4)}}), std::invalid_argument);
    CHECK_THROWS_AS(PLMonotoneMap({{0, 0}, {r(1, 2), r(3, 4)}, {r(1, 2), 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PLMonotoneMap({{0, 0}, {r(1, 2), r(3, 4)}, {r(3, 4), r(1, 2)}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PLMonotoneMap({{0, r(1, 4)}, {1, 1}}), std::invalid_argument);
    PLMonotoneMap collinear({{0, 0}, {r(1, 3), r(1, 3)}, {1, 1}});
    CHECK(collinear == PLMonotoneMap::identity());
}

TEST_CASE("circle map validation and normalization")
{
    CHECK_THROWS_AS(PLCircleMap({{0, 0}, {1, 2}}), std::invalid_argument);
    PLCircleMap shifted({{0, r(5, 4)}, {1, r(9, 4)}});
    CHECK(shifted.basepoint_shift() == r(1, 4));
    CHECK(shifted == PLCircleMap::rotation(r(1, 4)));
    CHECK(shifted.lift_extended(r(-1, 2)) == r(-1, 4));
    CHECK(shifted.lift_extended(r(3, 2)) == r(7, 4));
}

TEST_CASE("composition examples")
{
    PLMonotoneMap f({{0, 0}, {r(1, 2), 1}, {1, 1}});
    auto ff = compose(f, f);
    CHECK(ff.breakpoints() == std::vector<Breakpoint>{{0, 0}, {r(1, 4), 1}, {1, 1}});
    CHECK(compose(PLMonotoneMap::identity(), f) == f);
    CHECK(compose(f, PLMonotoneMap::identity()) == f);

    PLCircleMap doubling({{0, 0}, {r(1, 2), 1}, {1, 1}});
    auto c = compose(doubling, PLCircleMap::rotation(r(1, 4)));
    for (const auto& s : sample_grid()) CHECK(c(s) == doubling(CirclePoint(s + r(1, 4))));
    CHECK(c.lift(1) == c.lift(0) + 1);
}

TEST_CASE("compose_pl dispatches on kinds")
{
    PLMap i = PLMonotoneMap::identity();
    PLMap c = PLCircleMap::rotation(r(1, 3));
    CHECK(std::holds_alternative<PLMonotoneMap>(compose_pl(i, i)));
    CHECK(std::holds_alternative<PLCircleMap>(compose_pl(c, c)));
    CHECK(std::holds_alternative<PLCircleMap>(compose_pl(c, i)));
    CHECK_THROWS_AS(compose_pl(i, c), std::invalid_argument);
}

TEST_CASE("property: composition agrees with pointwise evaluation")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = testgen::random_monotone(rng);
        auto g = testgen::random_monotone(rng);
        auto fg = compose(f, g);
        for (const auto& s : sample_grid(30)) REQUIRE(fg(s) == f(g(s)));
        auto F = testgen::random_circle(rng);
        auto G = testgen::random_circle(rng);
        auto FG = compose(F, G);
        auto Fg = compose(F, g);
        for (const auto& s : sample_grid(30)) {
            REQUIRE(FG(s) == F(G(s)));
            REQUIRE(Fg(s) == F(g(s)));
        }
        REQUIRE(FG.lift(1) == FG.lift(0) + 1);
        REQUIRE(FG.basepoint_shift() >= 0);
        REQUIRE(FG.basepoint_shift() < 1);
    }
}

TEST_CASE("property: composition is associative")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = testgen::random_circle(rng);
        auto g = testgen::random_circle(rng);
        auto h = testgen::random_circle(rng);
        REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
        auto a = testgen::random_monotone(rng);
        auto b = testgen::random_monotone(rng);
        auto c = testgen::random_monotone(rng);
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("property: canonicalization is idempotent and preserves the function")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = testgen::random_monotone(rng, 4);
        std::vector<Breakpoint> refined;
        const auto& pts = f.breakpoints();
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            refined.push_back(pts[i]);
            for (int k = 1; k < 3; ++k) {
                Rat s = pts[i].s + (pts[i + 1].s - pts[i].s) * r(k, 3);
                refined.push_back({s, f(s)});
            }
        }
        refined.push_back(pts.back());
        auto once = canonical_breakpoints(refined);
        REQUIRE(once == f.breakpoints());
        REQUIRE(canonical_breakpoints(once) == once);
    }
}

TEST_CASE("apply_reparam")
{
    PLMonotoneMap f({{0, 0}, {r(1, 2), 1}, {1, 1}});
    CHECK(apply_reparam(f, DeltaPoint({r(1, 4), r(3, 4)})) == DeltaPoint({r(1, 2), 1}));
    CHECK(apply_reparam(PLMonotoneMap::identity(), DeltaPoint({r(1, 3)})) == DeltaPoint({r(1, 3)}));
    CHECK(apply_reparam(f, DeltaPoint()).degree() == 0);
}

TEST_CASE("simplex points")
{
    CHECK_THROWS_AS(DeltaPoint({r(1, 2), r(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(DeltaPoint({r(3, 2)}), std::invalid_argument);
    CHECK(DeltaPoint({r(1, 3), r(2, 3)}).is_interior());
    CHECK_FALSE(DeltaPoint({r(1, 3), r(1, 3)}).is_interior());
    CHECK_FALSE(DeltaPoint({0}).is_interior());
    DeltaPoint p({r(1, 4), r(1, 2)});
    CHECK(coface(p, 0) == DeltaPoint({0, r(1, 4), r(1, 2)}));
    CHECK(coface(p, 1) == DeltaPoint({r(1, 4), r(1, 4), r(1, 2)}));
    CHECK(coface(p, 3) == DeltaPoint({r(1, 4), r(1, 2), 1}));
    CHECK(codegeneracy(p, 1) == DeltaPoint({r(1, 4)}));
    CHECK_THROWS_AS(coface(p, 4), std::out_of_range);
    CHECK_THROWS_AS(codegeneracy(p, 2), std::out_of_range);
}

TEST_CASE("lambda split examples")
{
    LambdaPoint joined = lambda_join(DeltaPoint({r(1, 4), r(1, 2)}), CirclePoint(0));
    auto coords = joined.coordinates();
    CHECK(coords == std::vector<CirclePoint>{CirclePoint(0), CirclePoint(r(1, 4)), CirclePoint(r(1, 2))});

    auto p = LambdaPoint::from_coordinates({CirclePoint(r(1, 4)), CirclePoint(r(1, 2)), CirclePoint(0)});
    auto [d, z] = lambda_split(p);
    CHECK(d == DeltaPoint({r(1, 4), r(3, 4)}));
    CHECK(z == CirclePoint(r(1, 4)));

    auto single = LambdaPoint::from_coordinates({CirclePoint(r(2, 3))});
    CHECK(single.degree() == 0);
    CHECK(single.start() == CirclePoint(r(2, 3)));

    CHECK_THROWS_AS(LambdaPoint::from_coordinates({CirclePoint(0), CirclePoint(r(1, 2)), CirclePoint(r(1, 4))}),
                    std::invalid_argument);
    // A repeat of x_0 after a positive offset is a full turn.
    auto full = LambdaPoint::from_coordinates({CirclePoint(0), CirclePoint(r(1, 2)), CirclePoint(0)});
    CHECK(full.offsets() == DeltaPoint({r(1, 2), 1}));
}

TEST_CASE("property: lambda split round trips")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testgen::random_lambda(rng, testgen::uniform(rng, 0, 4));
        auto [d, z] = lambda_split(p);
        REQUIRE(lambda_join(d, z) == p);
        // Coordinates cannot tell a full turn from no turn when every earlier
        // offset is 0.
        const auto& d0 = p.offsets().coords();
        auto first = std::find_if(d0.begin(), d0.end(), [](const Rat& x) { return x != 0; });
        if (first == d0.end() || *first != 1) REQUIRE(LambdaPoint::from_coordinates(p.coordinates()) == p);
    }
}

TEST_CASE("cyclic shift has order k+1 and rotates coordinates")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        int k = testgen::uniform(rng, 0, 4);
        auto p = testgen::random_lambda(rng, k);
        auto q = p;
        for (int s = 0; s <= k; ++s) q = cyclic_shift(q);
        REQUIRE(q == p);
        if (k > 0) {
            auto c = p.coordinates();
            auto t = cyclic_shift(p).coordinates();
            for (int i = 0; i < k; ++i) REQUIRE(t[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(i + 1)]);
            REQUIRE(t.back() == c.front());
        }
    }
}
