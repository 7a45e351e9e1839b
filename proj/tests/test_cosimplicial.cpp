#include <doctest.h>

#include "cacti/cosimplicial.hpp"
#include "cacti/instances.hpp"

using namespace cacti::operad;
using namespace cacti::cosimplicial;

namespace {

std::vector<std::vector<int>> tuples(int size, int len)
{
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int v = 0; v < size; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(u);
            }
        out = next;
    }
    return out;
}

// Hand-written operators of the based loop model on M^k.
std::vector<int> omega_coface(const std::vector<int>& x, int i, int unit)
{
    const int k = static_cast<int>(x.size());
    std::vector<int> y = x;
    if (i == 0)
        y.insert(y.begin(), unit);
    else if (i == k + 1)
        y.push_back(unit);
    else
        y.insert(y.begin() + i, x[static_cast<std::size_t>(i - 1)]);
    return y;
}

std::vector<int> omega_codegeneracy(const std::vector<int>& x, int i)
{
    std::vector<int> y = x;
    y.erase(y.begin() + i);
    return y;
}

// Free loop model on X^{k+1}.
std::vector<int> free_loop_coface(const std::vector<int>& x, int i)
{
    const int k = static_cast<int>(x.size()) - 1;
    std::vector<int> y = x;
    if (i == k + 1)
        y.push_back(x[0]);
    else
        y.insert(y.begin() + i, x[static_cast<std::size_t>(i)]);
    return y;
}

std::vector<int> free_loop_codegeneracy(const std::vector<int>& x, int i)
{
    std::vector<int> y = x;
    y.erase(y.begin() + i + 1);
    return y;
}

std::string first_failure(const CheckReport& r)
{
    return r.failures.empty() ? std::string() : r.failures.front();
}

}  // namespace

TEST_CASE("generated operators agree with the based loop model")
{
    for (const auto& m : {FiniteMonoid::cyclic_group(2), FiniteMonoid::two_element_monoid(), FiniteMonoid::cyclic_group(3)}) {
        auto c = build_cosimplicial(monoid_instance(m, false));
        for (int k = 0; k <= 4; ++k)
            for (const auto& x : tuples(m.size(), k)) {
                for (int i = 0; i <= k + 1; ++i) CHECK(c.coface(x, i) == omega_coface(x, i, m.unit()));
                for (int i = 0; i < k; ++i) CHECK(c.codegeneracy(x, i) == omega_codegeneracy(x, i));
            }
    }
}

TEST_CASE("generated operators agree with the free loop model")
{
    auto c = build_cocyclic(correspondence_instance(3));
    for (int k = 0; k <= 3; ++k)
        for (const auto& x : tuples(3, k + 1)) {
            for (int i = 0; i <= k + 1; ++i) CHECK(c.coface(x, i) == free_loop_coface(x, i));
            for (int i = 0; i < k; ++i) CHECK(c.codegeneracy(x, i) == free_loop_codegeneracy(x, i));
            auto t = x;
            std::rotate(t.begin(), t.begin() + 1, t.end());
            CHECK(c.cyclic(x) == t);
        }
}

TEST_CASE("cosimplicial relations")
{
    AxiomBudget budget;
    SUBCASE("monoid Z/2")
    {
        auto m = FiniteMonoid::cyclic_group(2);
        auto r = relation_suite(build_cosimplicial(monoid_instance(m, false)), monoid_domain(m), 4, budget);
        INFO(first_failure(r));
        CHECK(r.passed());
        CHECK(r.exhaustive);
        CHECK(r.checks > 0);
    }
    SUBCASE("non-group monoid")
    {
        auto m = FiniteMonoid::two_element_monoid();
        auto r = relation_suite(build_cosimplicial(monoid_instance(m, false)), monoid_domain(m), 4, budget);
        INFO(first_failure(r));
        CHECK(r.passed());
    }
    SUBCASE("free operad")
    {
        budget.samples = 60;
        auto r = relation_suite(build_cocyclic(free_operad_instance()), free_domain(4), 3, budget);
        INFO(first_failure(r));
        CHECK(r.passed());
        CHECK_FALSE(r.exhaustive);
    }
}

TEST_CASE("cyclic relations")
{
    AxiomBudget budget;
    SUBCASE("group S3")
    {
        auto m = FiniteMonoid::symmetric_group_3();
        auto r = relation_suite(build_cocyclic(monoid_instance(m, true)), monoid_domain(m), 3, budget);
        INFO(first_failure(r));
        CHECK(r.passed());
        CHECK(r.exhaustive);
    }
    SUBCASE("free loop model")
    {
        auto r = relation_suite(build_cocyclic(correspondence_instance(3)), correspondence_domain(3), 3, budget);
        INFO(first_failure(r));
        CHECK(r.passed());
        CHECK(r.exhaustive);
    }
}

TEST_CASE("t on the group model follows the explicit formula")
{
    auto m = FiniteMonoid::symmetric_group_3();
    auto c = build_cocyclic(monoid_instance(m, true));
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : tuples(6, n)) {
            const int inv = m.inverse(g[0]);
            std::vector<int> expect;
            for (int k = 1; k < n; ++k) expect.push_back(m.multiply(inv, g[static_cast<std::size_t>(k)]));
            expect.push_back(inv);
            CHECK(c.cyclic(g) == expect);
        }
}

TEST_CASE("unit laws give s^i d^i = s^i d^(i+1) = id")
{
    auto c = build_cosimplicial(free_operad_instance());
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int k = static_cast<int>(rng() % 4);
        auto x = random_term(k, rng);
        for (int i = 0; i <= k; ++i) {
            CHECK(c.codegeneracy(c.coface(x, i), i) == x);
            CHECK(c.codegeneracy(c.coface(x, i + 1), i) == x);
        }
    }
}

TEST_CASE("construction errors")
{
    auto plain = free_operad_instance();
    plain.basepoints = nullptr;
    CHECK_THROWS_AS(build_cosimplicial(plain), std::invalid_argument);
    CHECK_THROWS_AS(build_cocyclic(monoid_instance(FiniteMonoid::cyclic_group(2), false)), std::invalid_argument);
    CHECK_THROWS_AS(monoid_instance(FiniteMonoid::two_element_monoid(), true), std::invalid_argument);

    // A cyclic operad whose chosen m_2 is not fixed by t_2.
    auto g = monoid_instance(FiniteMonoid::cyclic_group(3), true);
    g.basepoints = [](int p) { return std::vector<MonoidTuple>{MonoidTuple(static_cast<std::size_t>(p), 1)}; };
    CHECK_THROWS_AS(build_cocyclic(g), std::invalid_argument);

    auto c = build_cosimplicial(monoid_instance(FiniteMonoid::cyclic_group(2), false));
    CHECK_THROWS_AS(c.coface({0, 1}, 4), std::out_of_range);
    CHECK_THROWS_AS(c.codegeneracy({0, 1}, 2), std::out_of_range);
    CHECK_THROWS_AS(c.codegeneracy({}, 0), std::out_of_range);
}

TEST_CASE("a corrupted coface is located")
{
    auto m = FiniteMonoid::cyclic_group(2);
    auto c = build_cosimplicial(monoid_instance(m, false));
    auto good = c.coface;
    // d^0 puts the unit at the wrong end.
    c.coface = [good](const MonoidTuple& x, int i) { return good(x, i == 0 ? static_cast<int>(x.size()) + 1 : i); };
    auto r = relation_suite(c, monoid_domain(m), 2, AxiomBudget{});
    REQUIRE_FALSE(r.passed());
    CHECK(first_failure(r).find("d^0") != std::string::npos);
    CHECK(first_failure(r).find("degree") != std::string::npos);
}
