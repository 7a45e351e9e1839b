#ifndef CACTI_OPERAD_HPP
#define CACTI_OPERAD_HPP

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cacti/permutation.hpp"
#include "cacti/planar_tree.hpp"

namespace cacti::operad {

// A (possibly partial, symmetric, cyclic, multiplicative) operad given by
// closures. Optional structure is absent when the corresponding function is
// empty.
template <class T>
struct OperadInstance {
    std::string name;
    std::function<int(const T&)> arity;
    // x o_i y, 1 <= i <= arity(x). nullopt means undefined (partial operads).
    std::function<std::optional<T>(const T&, int, const T&)> compose;
    // Units in arity 1. Total operads have exactly one.
    std::function<std::vector<T>()> units;
    std::function<std::string(const T&)> describe;

    // Right action of Sigma_n.
    std::function<T(const T&, const Permutation&)> act;
    // Generator t_n of Z_{n+1}.
    std::function<T(const T&)> rotate;
    // Candidates for the basepoint m_p in arity p (p = 0 is u, p = 1 is the
    // unit). Total operads return one element; partial ones may return several,
    // one for each component of the defined locus.
    std::function<std::vector<T>(int)> basepoints;
    bool partial = false;

    bool has_symmetric() const { return static_cast<bool>(act); }
    bool has_cyclic() const { return static_cast<bool>(rotate); }
    bool has_multiplication() const { return static_cast<bool>(basepoints); }

    T unit() const
    {
        auto us = units();
        if (us.size() != 1) throw std::logic_error(name + ": no distinguished unit");
        return us.front();
    }

    // Throws std::domain_error when the composition is undefined and
    // std::out_of_range for a bad slot.
    T compose_or_throw(const T& x, int i, const T& y) const
    {
        if (i < 1 || i > arity(x)) throw std::out_of_range(name + ": composition slot out of range");
        auto r = compose(x, i, y);
        if (!r) throw std::domain_error(name + ": composition undefined");
        return *std::move(r);
    }

    // For partial operads, the unique basepoint candidate in arity p making
    // x o_i m_p defined (or m_p o_i x when `outer` is true).
    std::optional<T> compose_with_basepoint(const T& x, int i, int p, bool outer) const
    {
        if (!has_multiplication()) throw std::logic_error(name + ": no multiplication");
        for (const T& m : basepoints(p)) {
            auto r = outer ? compose(m, i, x) : compose(x, i, m);
            if (r) return r;
        }
        return std::nullopt;
    }
};

template <class T>
struct LabeledTree {
    PlanarRootedTree shape;
    std::vector<T> labels;  // one per vertex
};

// Contracts every internal edge. With `rng` the contraction order is random,
// otherwise edges are contracted in planar preorder.
template <class T>
T compose_along_tree(const OperadInstance<T>& op, const LabeledTree<T>& tree, std::mt19937_64* rng = nullptr)
{
    const auto& shape = tree.shape;
    shape.validate();
    if (shape.is_edge()) return op.unit();
    if (static_cast<int>(tree.labels.size()) != shape.vertex_count())
        throw std::invalid_argument("one label per vertex required");
    struct Work {
        T label;
        std::vector<TreeInput> inputs;
        bool alive = true;
    };
    std::vector<Work> w;
    for (int v = 0; v < shape.vertex_count(); ++v) {
        const T& label = tree.labels[static_cast<std::size_t>(v)];
        if (op.arity(label) != shape.arity(v))
            throw std::invalid_argument("label arity " + std::to_string(op.arity(label)) + " at vertex of arity " +
                                        std::to_string(shape.arity(v)));
        w.push_back({label, shape.vertex(v).inputs, true});
    }
    struct Edge {
        int parent, slot, child;
    };
    for (;;) {
        std::vector<Edge> edges;
        for (int v : shape.preorder()) {
            if (!w[static_cast<std::size_t>(v)].alive) continue;
            const auto& ins = w[static_cast<std::size_t>(v)].inputs;
            for (int s = 0; s < static_cast<int>(ins.size()); ++s)
                if (!ins[static_cast<std::size_t>(s)].is_leaf())
                    edges.push_back({v, s, ins[static_cast<std::size_t>(s)].index});
        }
        if (edges.empty()) break;
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(*rng);
        const Edge e = edges[pick];
        auto& parent = w[static_cast<std::size_t>(e.parent)];
        auto& child = w[static_cast<std::size_t>(e.child)];
        parent.label = op.compose_or_throw(parent.label, e.slot + 1, child.label);
        std::vector<TreeInput> ins(parent.inputs.begin(), parent.inputs.begin() + e.slot);
        ins.insert(ins.end(), child.inputs.begin(), child.inputs.end());
        ins.insert(ins.end(), parent.inputs.begin() + e.slot + 1, parent.inputs.end());
        parent.inputs = std::move(ins);
        child.alive = false;
    }
    return w[static_cast<std::size_t>(shape.root())].label;
}

// Outcome of a family of identity checks.
struct CheckReport {
    std::string name;
    long checks = 0;
    long undefined = 0;  // instances skipped because a partial composition was undefined
    bool exhaustive = true;
    long failure_count = 0;
    std::vector<std::string> failures{};  // first few counterexamples

    bool passed() const { return failure_count == 0; }
    void fail(std::string message)
    {
        ++failure_count;
        if (failures.size() < 8) failures.push_back(std::move(message));
    }
    void merge(const CheckReport& other)
    {
        checks += other.checks;
        undefined += other.undefined;
        exhaustive = exhaustive && other.exhaustive;
        failure_count += other.failure_count;
        for (const auto& f : other.failures)
            if (failures.size() < 8) failures.push_back(other.name + ": " + f);
    }
};

// Elements of one arity: exhaustive list when finite, sampler otherwise.
template <class T>
struct Domain {
    std::function<std::vector<T>(int)> enumerate;
    std::function<T(int, std::mt19937_64&)> sample;
};

struct AxiomBudget {
    int max_arity = 3;
    int samples = 100;           // random instances per arity pattern
    long exhaustive_cap = 50000;  // largest tuple count checked exhaustively
    std::uint64_t seed = 1;
};

namespace detail {

// Calls f on tuples drawn from the domain of the given arities, exhaustively
// when small enough.
template <class T, class F>
void for_tuples(const Domain<T>& dom, const std::vector<int>& arities, const AxiomBudget& budget, std::mt19937_64& rng,
                CheckReport& report, F&& f)
{
    if (dom.enumerate) {
        std::vector<std::vector<T>> pools;
        long total = 1;
        for (int a : arities) {
            pools.push_back(dom.enumerate(a));
            total *= static_cast<long>(pools.back().size());
            if (total > budget.exhaustive_cap) break;
        }
        if (total <= budget.exhaustive_cap) {
            std::vector<std::size_t> idx(arities.size(), 0);
            if (total == 0) return;
            for (;;) {
                std::vector<const T*> tuple;
                for (std::size_t k = 0; k < idx.size(); ++k) tuple.push_back(&pools[k][idx[k]]);
                f(tuple);
                std::size_t k = idx.size();
                while (k > 0) {
                    --k;
                    if (++idx[k] < pools[k].size()) break;
                    idx[k] = 0;
                    if (k == 0) return;
                }
                if (idx.empty()) return;
            }
        }
    }
    if (!dom.sample) throw std::logic_error("domain has neither a small enumeration nor a sampler");
    report.exhaustive = false;
    for (int s = 0; s < budget.samples; ++s) {
        std::vector<T> owned;
        for (int a : arities) owned.push_back(dom.sample(a, rng));
        std::vector<const T*> tuple;
        for (const auto& x : owned) tuple.push_back(&x);
        f(tuple);
    }
}

template <class T>
std::string show(const OperadInstance<T>& op, const std::optional<T>& x)
{
    return x ? op.describe(*x) : std::string("undefined");
}

// Compares two sides of an identity; for partial operads both sides must be
// defined or both undefined.
template <class T>
void expect_equal(const OperadInstance<T>& op, CheckReport& report, const std::optional<T>& lhs,
                  const std::optional<T>& rhs, const std::function<std::string()>& where)
{
    if (!lhs && !rhs) {
        ++report.undefined;
        return;
    }
    ++report.checks;
    if (lhs.has_value() != rhs.has_value() || !(*lhs == *rhs))
        report.fail(where() + ": " + show(op, lhs) + " != " + show(op, rhs));
}

template <class T>
std::optional<T> then(const OperadInstance<T>& op, const std::optional<T>& x, int i, const T& y)
{
    if (!x) return std::nullopt;
    return op.compose(*x, i, y);
}

}  // namespace detail

// Associativity (both identities) and unit laws.
template <class T>
CheckReport check_operad_axioms(const OperadInstance<T>& op, const Domain<T>& dom, const AxiomBudget& budget)
{
    CheckReport report{"operad"};
    std::mt19937_64 rng(budget.seed);
    const int top = budget.max_arity;
    for (int a = 0; a <= top; ++a) {
        detail::for_tuples(dom, {a}, budget, rng, report, [&](const std::vector<const T*>& t) {
            const T& x = *t[0];
            for (const T& u : op.units()) {
                auto left = op.compose(u, 1, x);
                if (left)
                    detail::expect_equal<T>(op, report, left, x, [&] { return "unit o_1 " + op.describe(x); });
                else
                    ++report.undefined;
                for (int i = 1; i <= a; ++i) {
                    auto r = op.compose(x, i, u);
                    if (!r) {
                        ++report.undefined;
                        continue;
                    }
                    detail::expect_equal<T>(op, report, r, x, [&] { return op.describe(x) + " o_" + std::to_string(i) + " unit"; });
                }
            }
        });
    }
    for (int a = 1; a <= top; ++a)
        for (int b = 0; b <= top; ++b)
            for (int c = 0; c <= top; ++c) {
                if (a + b + c - 2 > top + 1) continue;
                detail::for_tuples(dom, {a, b, c}, budget, rng, report, [&](const std::vector<const T*>& t) {
                    const T &x = *t[0], &y = *t[1], &z = *t[2];
                    auto where = [&](const char* kind, int i, int j) {
                        return [&, kind, i, j] {
                            return std::string(kind) + " i=" + std::to_string(i) + " j=" + std::to_string(j) + " x=" +
                                   op.describe(x) + " y=" + op.describe(y) + " z=" + op.describe(z);
                        };
                    };
                    for (int i = 1; i <= a; ++i) {
                        auto xy = op.compose(x, i, y);
                        for (int j = 1; j <= b; ++j) {
                            auto yz = op.compose(y, j, z);
                            auto lhs = detail::then(op, xy, i + j - 1, z);
                            std::optional<T> rhs = yz ? op.compose(x, i, *yz) : std::nullopt;
                            detail::expect_equal(op, report, lhs, rhs, where("sequential", i, j));
                        }
                        for (int j = i + 1; j <= a; ++j) {
                            auto lhs = detail::then(op, xy, j + b - 1, z);
                            auto rhs = detail::then(op, op.compose(x, j, z), i, y);
                            detail::expect_equal(op, report, lhs, rhs, where("parallel", i, j));
                        }
                    }
                });
            }
    return report;
}

// Group action and the equivariance (x s) o_i (y t) = (x o_{s(i)} y)(s o_i t).
template <class T>
CheckReport check_symmetric_axioms(const OperadInstance<T>& op, const Domain<T>& dom, const AxiomBudget& budget)
{
    CheckReport report{"symmetric"};
    if (!op.has_symmetric()) {
        report.fail("no symmetric structure");
        return report;
    }
    std::mt19937_64 rng(budget.seed + 1);
    for (int a = 0; a <= budget.max_arity; ++a) {
        detail::for_tuples(dom, {a}, budget, rng, report, [&](const std::vector<const T*>& t) {
            const T& x = *t[0];
            detail::expect_equal<T>(op, report, op.act(x, Permutation(a)), x, [&] { return "identity on " + op.describe(x); });
            auto s = Permutation::random(a, rng);
            auto r = Permutation::random(a, rng);
            detail::expect_equal<T>(op, report, op.act(op.act(x, s), r), op.act(x, s * r), [&] {
                return "action on " + op.describe(x) + " by " + to_string(s) + ", " + to_string(r);
            });
        });
    }
    for (int a = 1; a <= budget.max_arity; ++a)
        for (int b = 0; a + b - 1 <= budget.max_arity + 1 && b <= budget.max_arity; ++b)
            detail::for_tuples(dom, {a, b}, budget, rng, report, [&](const std::vector<const T*>& t) {
                const T &x = *t[0], &y = *t[1];
                auto s = Permutation::random(a, rng);
                auto r = Permutation::random(b, rng);
                for (int i = 1; i <= a; ++i) {
                    auto lhs = op.compose(op.act(x, s), i, op.act(y, r));
                    auto inner = op.compose(x, s(i), y);
                    std::optional<T> rhs = inner ? std::optional<T>(op.act(*inner, Permutation::block(s, i, r))) : std::nullopt;
                    detail::expect_equal<T>(op, report, lhs, rhs, [&] {
                        return "equivariance i=" + std::to_string(i) + " x=" + op.describe(x) + " y=" + op.describe(y) +
                               " sigma=" + to_string(s) + " tau=" + to_string(r);
                    });
                }
            });
    return report;
}

// m o_1 m = m o_2 m, m o_i u = unit.
template <class T>
CheckReport check_multiplication_axioms(const OperadInstance<T>& op)
{
    CheckReport report{"multiplication"};
    if (!op.has_multiplication()) {
        report.fail("no multiplication");
        return report;
    }
    const auto ms = op.basepoints(2);
    const auto us = op.basepoints(0);
    const auto units = op.units();
    if (ms.empty() || us.empty()) report.fail("missing m_2 or u");
    if (!op.partial && (ms.size() != 1 || us.size() != 1)) report.fail("total operad with ambiguous basepoints");
    auto is_unit = [&](const T& x) {
        for (const auto& e : units)
            if (e == x) return true;
        return false;
    };
    for (const auto& m : ms) {
        if (op.arity(m) != 2) report.fail("m_2 has arity " + std::to_string(op.arity(m)));
        for (const auto& m2 : ms)
            detail::expect_equal<T>(op, report, op.compose(m, 1, m2), op.compose(m, 2, m2),
                                    [&] { return "m o_1 m = m o_2 m for " + op.describe(m) + ", " + op.describe(m2); });
        for (const auto& u : us)
            for (int i = 1; i <= 2; ++i) {
                auto r = op.compose(m, i, u);
                if (!r) {
                    ++report.undefined;
                    continue;
                }
                ++report.checks;
                if (!is_unit(*r))
                    report.fail("m o_" + std::to_string(i) + " u = " + op.describe(*r) + " is not a unit");
            }
    }
    if (!op.partial) {
        ++report.checks;
        auto m3 = op.basepoints(3);
        auto mm = op.compose(ms.front(), 1, ms.front());
        if (m3.size() != 1 || !mm || !(m3.front() == *mm)) report.fail("m_3 differs from m o_1 m");
        ++report.checks;
        auto m1 = op.basepoints(1);
        if (m1.size() != 1 || !is_unit(m1.front())) report.fail("m_1 is not the unit");
    }
    if (op.has_cyclic())
        for (const auto& m : ms) {
            ++report.checks;
            if (!(op.rotate(m) == m)) report.fail("t_2(m_2) = " + op.describe(op.rotate(m)) + " != m_2");
        }
    return report;
}

// Order of t_n and the three cyclic identities.
template <class T>
CheckReport check_cyclic_axioms(const OperadInstance<T>& op, const Domain<T>& dom, const AxiomBudget& budget)
{
    CheckReport report{"cyclic"};
    if (!op.has_cyclic()) {
        report.fail("no cyclic structure");
        return report;
    }
    std::mt19937_64 rng(budget.seed + 2);
    for (const auto& u : op.units())
        detail::expect_equal<T>(op, report, op.rotate(u), u, [&] { return "t_1 of unit " + op.describe(u); });
    for (int a = 0; a <= budget.max_arity; ++a)
        detail::for_tuples(dom, {a}, budget, rng, report, [&](const std::vector<const T*>& t) {
            const T& x = *t[0];
            T y = x;
            for (int k = 0; k <= a; ++k) y = op.rotate(y);
            detail::expect_equal<T>(op, report, y, x, [&] { return "t^(n+1) on " + op.describe(x); });
        });
    for (int a = 1; a <= budget.max_arity; ++a)
        for (int b = 0; b <= budget.max_arity; ++b)
            detail::for_tuples(dom, {a, b}, budget, rng, report, [&](const std::vector<const T*>& t) {
                const T &f = *t[0], &g = *t[1];
                auto fg1 = op.compose(f, 1, g);
                std::optional<T> lhs = fg1 ? std::optional<T>(op.rotate(*fg1)) : std::nullopt;
                std::optional<T> rhs = b >= 1 ? op.compose(op.rotate(g), b, op.rotate(f)) : std::nullopt;
                if (b == 0) {
                    // No slot n of t(g) exists; re-rooting the two-vertex tree
                    // gives t(f o_1 g) = t^2(f) o_m g instead.
                    std::optional<T> alt = op.compose(op.rotate(op.rotate(f)), a, g);
                    detail::expect_equal<T>(op, report, lhs, alt, [&] {
                        return "t(f o_1 g), g nullary, f=" + op.describe(f) + " g=" + op.describe(g);
                    });
                } else {
                    detail::expect_equal<T>(op, report, lhs, rhs, [&] {
                        return "t(f o_1 g) = t(g) o_n t(f), f=" + op.describe(f) + " g=" + op.describe(g);
                    });
                }
                for (int i = 2; i <= a; ++i) {
                    auto fgi = op.compose(f, i, g);
                    std::optional<T> l = fgi ? std::optional<T>(op.rotate(*fgi)) : std::nullopt;
                    auto r = op.compose(op.rotate(f), i - 1, g);
                    detail::expect_equal<T>(op, report, l, r, [&] {
                        return "t(f o_i g) = t(f) o_(i-1) g, i=" + std::to_string(i) + " f=" + op.describe(f) +
                               " g=" + op.describe(g);
                    });
                }
            });
    return report;
}

}  // namespace cacti::operad

#endif
