#include <doctest.h>

#include "cacti/action.hpp"
#include "cacti/cosimplicial.hpp"
#include "cacti/instances.hpp"

using namespace cacti;
using namespace cacti::action;
using geom::CirclePoint;
using geom::DeltaPoint;
using geom::LambdaPoint;
using geom::make_rat;
using geom::Rat;
using kernel::FMSElement;
using kernel::LabeledPartition;

namespace {

FMSElement two_lobes()
{
    LabeledPartition p;
    p.n = 2;
    p.breaks = {0, make_rat(1, 4), make_rat(3, 4), 1};
    p.labels = {1, 2, 1};
    return FMSElement::spineless(p);
}

std::string first_failure(const operad::CheckReport& r)
{
    return r.failures.empty() ? std::string() : r.failures.front();
}

FreeTerm gen(const std::string& name, Payload y)
{
    int deg = 0;
    if (auto* d = std::get_if<DeltaPoint>(&y)) deg = d->degree();
    if (auto* l = std::get_if<LambdaPoint>(&y)) deg = l->degree();
    return FreeTerm::generator(operad::Generator{name, 0, y}, deg);
}

}  // namespace

TEST_CASE("two-lobe cactus with the point on the intersection")
{
    const auto e = two_lobes();
    const DeltaPoint x({make_rat(1, 4)});
    auto tree = build_action_tree(e, x);
    CHECK(tree.census_error(e).empty());
    CHECK(tree.count(ActionVertex::Kind::Lobe) == 2);
    CHECK(tree.count(ActionVertex::Kind::Intersection) == 1);
    CHECK(tree.count(ActionVertex::Kind::Special) == 1);
    // (a1(y1) o_1 m2) o_2 a2(*), y1 = 1/2.
    auto a1 = gen("a1", DeltaPoint({make_rat(1, 2)}));
    auto a2 = gen("a2", DeltaPoint());
    auto expected = operad::compose(operad::compose(a1, 1, FreeTerm::basepoint(2)), 2, a2);
    auto got = theta_symbolic(e, x);
    CHECK(got == expected);
    CHECK(operad::to_string(got) == operad::to_string(expected));
}

TEST_CASE("unit cactus acts as the identity")
{
    const auto e = FMSElement::unit();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int k = static_cast<int>(rng() % 4);
        auto d = random_delta_point(k, rng, 6);
        CHECK(theta_symbolic(e, d) == operad::normalize(gen("a1", d)));
        auto l = random_lambda_point(k, rng, 6);
        CHECK(theta_symbolic(e, l) == operad::normalize(gen("a1", l)));
    }
}

TEST_CASE("single lobe without points")
{
    auto tree = build_action_tree(FMSElement::unit(), DeltaPoint());
    REQUIRE(tree.vertices.size() == 2);
    CHECK(tree.vertices[1].kind == ActionVertex::Kind::Lobe);
    CHECK(std::get<DeltaPoint>(tree.vertices[1].payload).degree() == 0);
    auto c = build_action_tree(FMSElement::unit(), LambdaPoint(DeltaPoint(), CirclePoint(make_rat(1, 3))));
    CHECK(std::get<LambdaPoint>(c.vertices[1].payload).start() == CirclePoint(make_rat(1, 3)));
}

TEST_CASE("nullary cactus gives m_k")
{
    auto t = theta_symbolic(FMSElement::nullary(), DeltaPoint({make_rat(1, 3), make_rat(1, 2)}));
    CHECK(t == operad::normalize(FreeTerm::basepoint(2)));
}

TEST_CASE("coincident points share a vertex")
{
    const auto e = two_lobes();
    const DeltaPoint x({make_rat(1, 8), make_rat(1, 8)});
    auto tree = build_action_tree(e, x);
    bool found = false;
    for (const auto& v : tree.vertices)
        if (v.kind == ActionVertex::Kind::Special && v.inputs.size() == 2 && v.inputs[0].is_leaf() && v.inputs[1].is_leaf())
            found = true;
    CHECK(found);
    CHECK(tree.census_error(e).empty());
}

TEST_CASE("plain and cyclic modes agree at the basepoint")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto e = kernel::random_fms(n, rng);
        const auto d = random_delta_point(static_cast<int>(rng() % 4), rng, 6);
        auto plain = build_action_tree(e, d);
        auto cyc = build_action_tree(e, geom::lambda_join(d, CirclePoint()));
        REQUIRE(plain.vertices.size() == cyc.vertices.size());
        for (std::size_t v = 0; v < plain.vertices.size(); ++v) {
            CHECK(plain.vertices[v].inputs == cyc.vertices[v].inputs);
            if (plain.vertices[v].kind == ActionVertex::Kind::Lobe)
                CHECK(geom::lambda_join(std::get<DeltaPoint>(plain.vertices[v].payload), CirclePoint()) ==
                      std::get<LambdaPoint>(cyc.vertices[v].payload));
        }
    }
}

TEST_CASE("plain mode rejects framed cacti")
{
    auto e = two_lobes();
    e.offsets[0] = CirclePoint(make_rat(1, 2));
    CHECK_THROWS_AS(build_action_tree(e, DeltaPoint()), std::invalid_argument);
    CHECK_NOTHROW(build_action_tree(e, LambdaPoint()));
    CHECK_THROWS_AS(build_action_tree(two_lobes(), Payload{}), std::invalid_argument);
}

TEST_CASE("continuity across the intersection point")
{
    const auto e = two_lobes();
    const DeltaPoint x({make_rat(1, 4)});
    const auto at = theta_symbolic(e, x);
    for (int s : {-1, 1}) {
        auto lim = theta_limit(e, x, {0, s}, make_rat(1, 16));
        CHECK(lim == at);
    }
    // The one-sided trees differ before taking the limit.
    auto below = theta_symbolic(e, DeltaPoint({make_rat(3, 16)}));
    auto above = theta_symbolic(e, DeltaPoint({make_rat(5, 16)}));
    CHECK_FALSE(below == above);
}

TEST_CASE("symbolic theta commutes with evaluation in a group")
{
    // Inputs of the cocyclic group model: a(x_0..x_l) = (g(x_0)^-1 g(x_i))_i
    // for an arbitrary function g on the circle.
    const auto G = operad::FiniteMonoid::symmetric_group_3();
    const auto op = operad::monoid_instance(G, true);
    auto loop = [&G](int seed) {
        return [&G, seed](const CirclePoint& z) {
            auto v = z.value() * 24;
            return static_cast<int>((geom::floor(v).get_si() * 7 + seed) % G.size());
        };
    };
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        kernel::RandomFMSOptions fo;
        fo.framed = true;
        const auto e = kernel::random_fms(n, rng, fo);
        const auto p = random_lambda_point(static_cast<int>(rng() % 4), rng, 6);
        std::vector<CosimplicialInput<operad::MonoidTuple>> inputs;
        for (int j = 1; j <= n; ++j) {
            auto g = loop(j);
            inputs.push_back([g, &G](const Payload& y) {
                auto coords = std::get<LambdaPoint>(y).coordinates();
                const int inv = G.inverse(g(coords[0]));
                operad::MonoidTuple out;
                for (std::size_t i = 1; i < coords.size(); ++i) out.push_back(G.multiply(inv, g(coords[i])));
                return out;
            });
        }
        auto direct = theta(op, e, inputs, p);
        auto term = theta_symbolic(e, p);
        auto via = operad::evaluate(term, op, [&](const operad::Generator& gen, int) {
            return inputs[static_cast<std::size_t>(std::stoi(gen.name.substr(1)) - 1)](gen.payload);
        });
        CHECK(direct == via);
    }
}

TEST_CASE("action suite, plain mode")
{
    ActionCheckOptions opt;
    opt.mode = Mode::Plain;
    opt.configurations = 60;
    auto r = verify_action(opt);
    INFO(first_failure(r));
    CHECK(r.passed());
    CHECK(r.checks > 500);
}

TEST_CASE("action suite, cyclic mode")
{
    ActionCheckOptions opt;
    opt.mode = Mode::Cyclic;
    opt.configurations = 60;
    auto r = verify_action(opt);
    INFO(first_failure(r));
    CHECK(r.passed());
}

TEST_CASE("wrong exit slot is caught")
{
    ActionCheckOptions opt;
    opt.mode = Mode::Cyclic;
    opt.configurations = 30;
    opt.build.exit_slot = ExitSlot::Last;
    auto r = verify_action(opt);
    CHECK_FALSE(r.passed());
}

TEST_CASE("property: the tree is unchanged when breaks move within the open cell")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto e = kernel::random_fms(n, rng);
        const auto& p = e.partition;
        // New arc lengths, each lobe still of total length 1/n.
        std::vector<int> weight(static_cast<std::size_t>(p.arc_count()));
        std::vector<int> total(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 1; i <= p.arc_count(); ++i) {
            weight[static_cast<std::size_t>(i - 1)] = 1 + static_cast<int>(rng() % 5);
            total[static_cast<std::size_t>(p.label(i))] += weight[static_cast<std::size_t>(i - 1)];
        }
        LabeledPartition q = p;
        for (int i = 1; i <= p.arc_count(); ++i)
            q.breaks[static_cast<std::size_t>(i)] =
                q.breaks[static_cast<std::size_t>(i - 1)] +
                Rat(weight[static_cast<std::size_t>(i - 1)]) / (total[static_cast<std::size_t>(p.label(i))] * n);
        const auto f = FMSElement::spineless(p);
        const auto g = FMSElement::spineless(q);
        // Points strictly inside arcs, carried along to the same relative position.
        std::vector<Rat> xs, ys;
        const int k = static_cast<int>(rng() % 4);
        for (int c = 0; c < k; ++c) {
            const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.arc_count()));
            const Rat lambda = make_rat(1 + static_cast<long>(rng() % 7), 8);
            xs.push_back(p.arc_start(i) + lambda * p.arc_length(i));
            ys.push_back(q.arc_start(i) + lambda * q.arc_length(i));
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        const auto a = build_action_tree(f, DeltaPoint(xs));
        const auto b = build_action_tree(g, DeltaPoint(ys));
        REQUIRE(a.vertices.size() == b.vertices.size());
        for (std::size_t v = 0; v < a.vertices.size(); ++v) {
            CHECK(a.vertices[v].kind == b.vertices[v].kind);
            CHECK(a.vertices[v].lobe == b.vertices[v].lobe);
            CHECK(a.vertices[v].inputs == b.vertices[v].inputs);
        }
    }
}
