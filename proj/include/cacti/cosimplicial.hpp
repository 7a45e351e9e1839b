#ifndef CACTI_COSIMPLICIAL_HPP
#define CACTI_COSIMPLICIAL_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "cacti/operad.hpp"

namespace cacti::cosimplicial {

using operad::AxiomBudget;
using operad::CheckReport;
using operad::Domain;
using operad::OperadInstance;

// Degree k lives in O(k). Operators throw std::out_of_range for an index
// outside the valid range.
template <class T>
struct CosimplicialStructure {
    std::string name;
    std::function<int(const T&)> degree;
    std::function<T(const T&, int)> coface;        // d^i: O(k) -> O(k+1), 0 <= i <= k+1
    std::function<T(const T&, int)> codegeneracy;  // s^i: O(k) -> O(k-1), 0 <= i <= k-1
    std::function<T(const T&)> cyclic;             // t_k: O(k) -> O(k), empty when not cocyclic
    std::function<std::string(const T&)> describe;

    bool has_cyclic() const { return static_cast<bool>(cyclic); }
};

// d^0 = m o_2 -, d^i = - o_i m (1 <= i <= k), d^{k+1} = m o_1 -,
// s^i = - o_{i+1} u. Partial operads pick the basepoint component that
// makes the composite defined.
template <class T>
CosimplicialStructure<T> build_cosimplicial(const OperadInstance<T>& op)
{
    if (!op.has_multiplication()) throw std::invalid_argument(op.name + ": operad has no multiplication");
    if (op.basepoints(2).empty() || op.basepoints(0).empty())
        throw std::invalid_argument(op.name + ": missing m_2 or u");
    CosimplicialStructure<T> c;
    c.name = op.name;
    c.degree = op.arity;
    c.describe = op.describe;
    c.coface = [op](const T& x, int i) {
        const int k = op.arity(x);
        if (i < 0 || i > k + 1) throw std::out_of_range("coface index " + std::to_string(i) + " in degree " + std::to_string(k));
        std::optional<T> r;
        if (i == 0)
            r = op.compose_with_basepoint(x, 2, 2, true);
        else if (i == k + 1)
            r = op.compose_with_basepoint(x, 1, 2, true);
        else
            r = op.compose_with_basepoint(x, i, 2, false);
        if (!r) throw std::domain_error(op.name + ": coface d^" + std::to_string(i) + " undefined on " + op.describe(x));
        return *std::move(r);
    };
    c.codegeneracy = [op](const T& x, int i) {
        const int k = op.arity(x);
        if (i < 0 || i > k - 1)
            throw std::out_of_range("codegeneracy index " + std::to_string(i) + " in degree " + std::to_string(k));
        auto r = op.compose_with_basepoint(x, i + 1, 0, false);
        if (!r) throw std::domain_error(op.name + ": codegeneracy s^" + std::to_string(i) + " undefined on " + op.describe(x));
        return *std::move(r);
    };
    return c;
}

// Adds t_k = the cyclic action. Requires t_2(m_2) = m_2 for every m_2.
template <class T>
CosimplicialStructure<T> build_cocyclic(const OperadInstance<T>& op)
{
    if (!op.has_cyclic()) throw std::invalid_argument(op.name + ": operad is not cyclic");
    auto c = build_cosimplicial(op);
    for (const T& m : op.basepoints(2))
        if (!(op.rotate(m) == m))
            throw std::invalid_argument(op.name + ": t_2(m_2) = " + op.describe(op.rotate(m)) + " differs from m_2 = " +
                                        op.describe(m));
    c.cyclic = op.rotate;
    return c;
}

namespace detail {

template <class T>
void expect(const CosimplicialStructure<T>& c, CheckReport& report, const T& lhs, const T& rhs, const std::string& relation,
            const T& x)
{
    ++report.checks;
    if (!(lhs == rhs))
        report.fail(relation + " in degree " + std::to_string(c.degree(x)) + " on " + c.describe(x) + ": " + c.describe(lhs) +
                    " != " + c.describe(rhs));
}

inline std::string idx(const char* op, int i)
{
    return std::string(op) + std::to_string(i);
}

}  // namespace detail

// Every instance of the five cosimplicial relation families, and when cyclic
// the cyclic relations together with t^(n+1) = id, t d^0 = d^n and
// t s^0 = s^n t^2, on elements of degree 0..max_degree.
template <class T>
CheckReport relation_suite(const CosimplicialStructure<T>& c, const Domain<T>& dom, int max_degree, const AxiomBudget& budget)
{
    using detail::expect;
    using detail::idx;
    CheckReport report{c.name + " relations"};
    std::mt19937_64 rng(budget.seed + 3);
    const auto& d = c.coface;
    const auto& s = c.codegeneracy;
    for (int k = 0; k <= max_degree; ++k) {
        operad::detail::for_tuples(dom, {k}, budget, rng, report, [&](const std::vector<const T*>& tuple) {
            const T& x = *tuple[0];
            for (int j = 1; j <= k + 2; ++j)
                for (int i = 0; i < j; ++i)
                    expect(c, report, d(d(x, i), j), d(d(x, j - 1), i),
                           "d^" + std::to_string(j) + " d^" + std::to_string(i) + " = d^" + std::to_string(i) + " d^" +
                               std::to_string(j - 1),
                           x);
            for (int j = 0; j <= k - 2; ++j)
                for (int i = 0; i <= j; ++i)
                    expect(c, report, s(s(x, i), j), s(s(x, j + 1), i),
                           idx("s^", j) + " " + idx("s^", i) + " = " + idx("s^", i) + " " + idx("s^", j + 1), x);
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= k + 1; ++i) {
                    const T lhs = s(d(x, i), j);
                    const std::string name = idx("s^", j) + " " + idx("d^", i);
                    if (i < j)
                        expect(c, report, lhs, d(s(x, j - 1), i), name + " = " + idx("d^", i) + " " + idx("s^", j - 1), x);
                    else if (i <= j + 1)
                        expect(c, report, lhs, x, name + " = id", x);
                    else
                        expect(c, report, lhs, d(s(x, j), i - 1), name + " = " + idx("d^", i - 1) + " " + idx("s^", j), x);
                }
            if (!c.has_cyclic()) return;
            const auto& t = c.cyclic;
            T y = x;
            for (int r = 0; r <= k; ++r) y = t(y);
            expect(c, report, y, x, "t^" + std::to_string(k + 1) + " = id", x);
            // Coface relations with x in degree n - 1, n = k + 1.
            const int n = k + 1;
            for (int i = 1; i <= n; ++i)
                expect(c, report, t(d(x, i)), d(t(x), i - 1),
                       "t_" + std::to_string(n) + " " + idx("d^", i) + " = " + idx("d^", i - 1) + " t_" + std::to_string(k), x);
            expect(c, report, t(d(x, 0)), d(x, n), "t_" + std::to_string(n) + " d^0 = " + idx("d^", n), x);
            // Codegeneracy relations with x in degree n + 1, n = k - 1.
            if (k >= 1) {
                const int m = k - 1;
                for (int i = 1; i <= m; ++i)
                    expect(c, report, t(s(x, i)), s(t(x), i - 1),
                           "t_" + std::to_string(m) + " " + idx("s^", i) + " = " + idx("s^", i - 1) + " t_" + std::to_string(k), x);
                expect(c, report, t(s(x, 0)), s(t(t(x)), m),
                       "t_" + std::to_string(m) + " s^0 = " + idx("s^", m) + " t_" + std::to_string(k) + "^2", x);
            }
        });
    }
    return report;
}

}  // namespace cacti::cosimplicial

#endif
