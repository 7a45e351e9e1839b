#include "cacti/instances.hpp"

#include <sstream>
#include <stdexcept>

namespace cacti::operad {

namespace {

std::vector<std::vector<int>> all_tuples(int alphabet, int length)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    for (;;) {
        out.push_back(cur);
        int k = length;
        while (k > 0) {
            --k;
            if (++cur[static_cast<std::size_t>(k)] < alphabet) break;
            cur[static_cast<std::size_t>(k)] = 0;
            if (k == 0) return out;
        }
        if (length == 0) return out;
    }
}

std::vector<int> random_tuple(int alphabet, int length, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    std::vector<int> out(static_cast<std::size_t>(length));
    for (auto& v : out) v = d(rng);
    return out;
}

std::vector<int> permute(const std::vector<int>& x, const Permutation& s)
{
    if (static_cast<int>(x.size()) != s.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(x.size());
    for (int k = 1; k <= s.size(); ++k) out[static_cast<std::size_t>(k - 1)] = x[static_cast<std::size_t>(s(k) - 1)];
    return out;
}

}  // namespace

OperadInstance<AssocElement> assoc_instance()
{
    OperadInstance<AssocElement> op;
    op.name = "Ass";
    op.arity = [](const AssocElement& a) { return a.arity; };
    op.compose = [](const AssocElement& a, int, const AssocElement& b) -> std::optional<AssocElement> {
        return AssocElement{a.arity + b.arity - 1};
    };
    op.units = [] { return std::vector<AssocElement>{AssocElement{1}}; };
    op.describe = [](const AssocElement& a) { return "*" + std::to_string(a.arity); };
    op.act = [](const AssocElement& a, const Permutation&) { return a; };
    op.rotate = [](const AssocElement& a) { return a; };
    op.basepoints = [](int p) { return std::vector<AssocElement>{AssocElement{p}}; };
    return op;
}

Domain<AssocElement> assoc_domain()
{
    Domain<AssocElement> d;
    d.enumerate = [](int a) { return std::vector<AssocElement>{AssocElement{a}}; };
    d.sample = [](int a, std::mt19937_64&) { return AssocElement{a}; };
    return d;
}

FiniteMonoid::FiniteMonoid(std::vector<std::vector<int>> table, int unit, std::vector<std::string> names)
    : table_(std::move(table)), unit_(unit), names_(std::move(names))
{
    const int n = size();
    if (n == 0) throw std::invalid_argument("empty monoid");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("monoid table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("monoid table entry out of range");
    }
    if (unit_ < 0 || unit_ >= n) throw std::invalid_argument("monoid unit out of range");
    for (int a = 0; a < n; ++a)
        if (multiply(unit_, a) != a || multiply(a, unit_) != a) throw std::invalid_argument("not a two-sided unit");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                    throw std::invalid_argument("monoid table is not associative");
    if (!names_.empty() && static_cast<int>(names_.size()) != n) throw std::invalid_argument("one name per element");
}

FiniteMonoid FiniteMonoid::cyclic_group(int n)
{
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteMonoid(std::move(t), 0);
}

FiniteMonoid FiniteMonoid::symmetric_group_3()
{
    std::vector<Permutation> perms = Permutation::all(3);
    const int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(to_string(perms[static_cast<std::size_t>(a)]));
        for (int b = 0; b < n; ++b) {
            Permutation ab = perms[static_cast<std::size_t>(a)] * perms[static_cast<std::size_t>(b)];
            for (int c = 0; c < n; ++c)
                if (perms[static_cast<std::size_t>(c)] == ab) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
        }
    }
    return FiniteMonoid(std::move(t), 0, std::move(names));
}

FiniteMonoid FiniteMonoid::two_element_monoid()
{
    return FiniteMonoid({{0, 0}, {0, 1}}, 1);
}

bool FiniteMonoid::is_group() const
{
    for (int a = 0; a < size(); ++a) {
        bool found = false;
        for (int b = 0; b < size() && !found; ++b) found = multiply(a, b) == unit_ && multiply(b, a) == unit_;
        if (!found) return false;
    }
    return true;
}

int FiniteMonoid::inverse(int a) const
{
    for (int b = 0; b < size(); ++b)
        if (multiply(a, b) == unit_ && multiply(b, a) == unit_) return b;
    throw std::domain_error("element " + name(a) + " is not invertible");
}

std::string FiniteMonoid::name(int a) const
{
    if (names_.empty()) return std::to_string(a);
    return names_[static_cast<std::size_t>(a)];
}

OperadInstance<MonoidTuple> monoid_instance(const FiniteMonoid& m, bool cyclic)
{
    if (cyclic && !m.is_group()) throw std::invalid_argument("cyclic structure needs a group");
    OperadInstance<MonoidTuple> op;
    op.name = cyclic ? "group" : "monoid";
    op.arity = [](const MonoidTuple& x) { return static_cast<int>(x.size()); };
    op.compose = [m](const MonoidTuple& x, int i, const MonoidTuple& y) -> std::optional<MonoidTuple> {
        if (i < 1 || i > static_cast<int>(x.size())) throw std::out_of_range("composition slot out of range");
        const int xi = x[static_cast<std::size_t>(i - 1)];
        MonoidTuple out(x.begin(), x.begin() + (i - 1));
        for (int v : y) out.push_back(m.multiply(xi, v));
        out.insert(out.end(), x.begin() + i, x.end());
        return out;
    };
    op.units = [m] { return std::vector<MonoidTuple>{{m.unit()}}; };
    op.describe = [m](const MonoidTuple& x) {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < x.size(); ++k) os << (k ? "," : "") << m.name(x[k]);
        os << ')';
        return os.str();
    };
    op.act = [](const MonoidTuple& x, const Permutation& s) { return permute(x, s); };
    op.basepoints = [m](int p) { return std::vector<MonoidTuple>{MonoidTuple(static_cast<std::size_t>(p), m.unit())}; };
    if (cyclic)
        op.rotate = [m](const MonoidTuple& g) {
            if (g.empty()) return g;
            const int inv = m.inverse(g.front());
            MonoidTuple out;
            for (std::size_t k = 1; k < g.size(); ++k) out.push_back(m.multiply(inv, g[k]));
            out.push_back(inv);
            return out;
        };
    return op;
}

Domain<MonoidTuple> monoid_domain(const FiniteMonoid& m)
{
    Domain<MonoidTuple> d;
    const int size = m.size();
    d.enumerate = [size](int a) { return all_tuples(size, a); };
    d.sample = [size](int a, std::mt19937_64& rng) { return random_tuple(size, a, rng); };
    return d;
}

OperadInstance<CorrTuple> correspondence_instance(int x_size)
{
    if (x_size < 1) throw std::invalid_argument("X must be nonempty");
    OperadInstance<CorrTuple> op;
    op.name = "lX";
    op.partial = true;
    op.arity = [](const CorrTuple& x) { return static_cast<int>(x.size()) - 1; };
    op.compose = [](const CorrTuple& x, int i, const CorrTuple& y) -> std::optional<CorrTuple> {
        if (i < 1 || i + 1 > static_cast<int>(x.size())) throw std::out_of_range("composition slot out of range");
        if (x[static_cast<std::size_t>(i)] != y.front()) return std::nullopt;
        CorrTuple out(x.begin(), x.begin() + i);
        out.insert(out.end(), y.begin() + 1, y.end());
        out.insert(out.end(), x.begin() + i + 1, x.end());
        return out;
    };
    op.units = [x_size] {
        std::vector<CorrTuple> out;
        for (int v = 0; v < x_size; ++v) out.push_back({v, v});
        return out;
    };
    op.describe = [](const CorrTuple& x) {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < x.size(); ++k) os << (k ? "," : "") << x[k];
        os << ')';
        return os.str();
    };
    op.rotate = [](const CorrTuple& x) {
        CorrTuple out(x.begin() + 1, x.end());
        out.push_back(x.front());
        return out;
    };
    op.basepoints = [x_size](int p) {
        std::vector<CorrTuple> out;
        for (int v = 0; v < x_size; ++v) out.push_back(CorrTuple(static_cast<std::size_t>(p + 1), v));
        return out;
    };
    return op;
}

Domain<CorrTuple> correspondence_domain(int x_size)
{
    Domain<CorrTuple> d;
    d.enumerate = [x_size](int a) { return all_tuples(x_size, a + 1); };
    d.sample = [x_size](int a, std::mt19937_64& rng) { return random_tuple(x_size, a + 1, rng); };
    return d;
}

Domain<FreeTerm> free_domain(int max_vertices)
{
    Domain<FreeTerm> d;
    d.sample = [max_vertices](int a, std::mt19937_64& rng) { return random_term(a, rng, max_vertices); };
    return d;
}

}  // namespace cacti::operad
